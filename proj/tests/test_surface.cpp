#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "dq/classgroup.hpp"
#include "dq/surface.hpp"

using namespace dq;

namespace {
Surface S(long a0, long a1, long a2, long a3) {
  return Surface::from_integers({Int(a0), Int(a1), Int(a2), Int(a3)});
}
}  // namespace

TEST_CASE("normalization") {
  CHECK(S(16, 1, 1, 1).a == std::array<Int, 4>{1, 1, 1, 1});
  CHECK(S(3, 3, 3, 3).a == std::array<Int, 4>{1, 1, 1, 1});
  CHECK(S(1, 47, -103, -82297).a == std::array<Int, 4>{1, 47, -103, -82297});
  CHECK(S(32, 1, 1, 1).a == std::array<Int, 4>{2, 1, 1, 1});
  CHECK_THROWS_AS(Surface::normalize({Rat(0), Rat(1), Rat(1), Rat(1)}), SurfaceError);

  // rationals clear denominators
  Surface r = Surface::normalize({Rat(1) / 2, Rat(3), Rat(1), Rat(1)});
  for (const auto& c : r.a) CHECK(denom(Rat(c)) == 1);
  CHECK(r.theta.reconstruct() == Rat(r.a[0] * r.a[1] * r.a[2] * r.a[3]));
}

TEST_CASE("normalize is idempotent and preserves H, randomized") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> d(-200, 200);
  int cases = 0;
  while (cases < 200) {
    std::array<long, 4> raw;
    bool ok = true;
    for (auto& v : raw) {
      v = d(rng);
      if (v == 0) ok = false;
    }
    if (!ok) continue;
    ++cases;
    Surface s = S(raw[0], raw[1], raw[2], raw[3]);
    Surface again = Surface::from_integers(s.a);
    REQUIRE(again.a == s.a);
    for (const auto& c : s.a) {
      FactoredRational f = factor(c);
      for (const auto& [p, e] : f.factors) REQUIRE(e < 4);
    }
    Int g = 0;
    for (const auto& c : s.a) g = gcd_of(g, c);
    REQUIRE(g == 1);

    // equivalence preserves the group H
    std::array<Int, 4> raw_ints{raw[0], raw[1], raw[2], raw[3]};
    REQUIRE(h_group(raw_ints).elements == h_group(s.a).elements);
  }
}

TEST_CASE("reduction types") {
  Surface x = S(1, 47, -103, -82297);
  auto r17 = reduction_type(x, 17);
  CHECK(r17.kind == ReductionKind::Cone);
  CHECK(r17.vanishing == std::vector<int>{3});

  CHECK(reduction_type(x, 7).kind == ReductionKind::Smooth);

  auto r47 = reduction_type(x, 47);
  CHECK(r47.kind == ReductionKind::FourPlanes);
  CHECK(r47.vanishing == std::vector<int>{1, 3});

  CHECK(reduction_type(S(1, 3, 9, 27), 3).kind == ReductionKind::QuadruplePlane);
  CHECK(reduction_type(x, 2).kind == ReductionKind::UnclassifiedEven);
}

TEST_CASE("bad primes") {
  CHECK(bad_primes(S(1, 47, -103, -82297)) == std::vector<Int>{2, 17, 47, 103});
  CHECK(bad_primes(S(1, 1, 1, 1)) == std::vector<Int>{2});
  CHECK(bad_primes(S(1, 2, 3, 5)) == std::vector<Int>{2, 3, 5});
}

TEST_CASE("fourth-condition witnesses") {
  auto w = condition4_witnesses(S(1, 47, -103, -82297));
  REQUIRE(w.size() == 1);
  CHECK(w[0].p == 17);
  CHECK(w[0].index == 3);
  CHECK(w[0].odd_power);
  CHECK_FALSE(w[0].special_ok);

  auto w3 = condition4_witnesses(S(1, 1, 1, 3));
  REQUIRE(w3.size() == 1);
  CHECK(w3[0].p == 3);
  CHECK(w3[0].special_ok);

  auto w7 = condition4_witnesses(S(1, 1, 1, 7));
  REQUIRE(w7.size() == 1);
  CHECK(w7[0].p == 7);
  CHECK_FALSE(w7[0].special_ok);  // residual curve (1,1,1) is the Fermat class

  // only odd p dividing exactly one coefficient to an odd power qualify
  for (const auto& x : {S(1, 47, -103, -82297), S(1, 9, 5, -7), S(2, 6, -3, -1)}) {
    for (const auto& wit : condition4_witnesses(x)) {
      int count = 0;
      for (const auto& c : x.a)
        if (c % wit.p == 0) ++count;
      REQUIRE(count == 1);
      REQUIRE(valuation(Rat(x.a[wit.index]), wit.p) % 2 == 1);
    }
  }
}

TEST_CASE("theorem conditions aggregate") {
  auto rep = theorem_conditions(S(1, 47, -103, -82297));
  CHECK(rep.els);
  CHECK(rep.h_order == 256);
  CHECK_FALSE(rep.meets_235);
  CHECK_FALSE(rep.has_qualifying_prime);
  CHECK_FALSE(rep.conclusion.has_value());

  auto fermat = theorem_conditions(S(1, 1, 1, 1));
  CHECK_FALSE(fermat.els);
  CHECK_FALSE(fermat.conclusion.has_value());
}
