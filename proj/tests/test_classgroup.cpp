#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "dq/classgroup.hpp"

using namespace dq;

TEST_CASE("class_of reduction") {
  CHECK(FourthPowerClass::of(16).is_identity());
  auto m4 = FourthPowerClass::of(-4);
  CHECK(m4.sign_bit == 1);
  CHECK(m4.exponents == std::map<Int, int>{{2, 2}});
  auto c47 = FourthPowerClass::of(47);
  CHECK(c47.sign_bit == 0);
  CHECK(c47.exponents == std::map<Int, int>{{47, 1}});
  CHECK(FourthPowerClass::of(Rat(1) / 8).exponents == std::map<Int, int>{{2, 1}});
}

TEST_CASE("class_of is multiplicative and kills fourth powers") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-300, 300);
  for (int i = 0; i < 400; ++i) {
    long a = d(rng), b = d(rng);
    if (a == 0 || b == 0) continue;
    auto ca = FourthPowerClass::of(a), cb = FourthPowerClass::of(b);
    CHECK(FourthPowerClass::of(Rat(a) * b) == ca.times(cb));
    CHECK(FourthPowerClass::of(Rat(a) * a * a * a * b) == cb);
    CHECK(ca.times(ca.inverse()).is_identity());
  }
}

TEST_CASE("subgroup closure orders") {
  auto g1 = subgroup_closure(
      {FourthPowerClass::of(-1), FourthPowerClass::of(4)}, 256);
  CHECK(g1.order() == 4);

  CHECK(subgroup_closure({}, 256).order() == 1);

  auto g2 = subgroup_closure({FourthPowerClass::of(-1), FourthPowerClass::of(4),
                              FourthPowerClass::of(47), FourthPowerClass::of(-103),
                              FourthPowerClass::of(-82297)},
                             256);
  CHECK(g2.order() == 256);

  // group axioms on the closure
  for (const auto& x : g2.elements) {
    CHECK(g2.contains(x.inverse()));
    CHECK(g2.contains(x.times(x)));
  }

  CHECK_THROWS_AS(subgroup_closure({FourthPowerClass::of(-1), FourthPowerClass::of(4),
                                    FourthPowerClass::of(47)},
                                   7),
                  CapExceeded);
}

TEST_CASE("h_group examples") {
  CHECK(h_group({Int(1), Int(1), Int(1), Int(1)}).order() == 4);
  auto h = h_group({Int(1), Int(47), Int(-103), Int(-82297)});
  CHECK(h.order() == 256);
  CHECK_FALSE(meets_235(h));
  CHECK(h_group({Int(1), Int(2), Int(3), Int(5)}).order() == 128);
}

TEST_CASE("meets_235") {
  CHECK_FALSE(meets_235(subgroup_closure(
      {FourthPowerClass::of(-1), FourthPowerClass::of(4)}, 256)));
  CHECK(meets_235(subgroup_closure({FourthPowerClass::of(2)}, 256)));
  CHECK(meets_235(h_group({Int(1), Int(2), Int(3), Int(5)})));
}

TEST_CASE("generator-set equivalence and the 256 bound, randomized") {
  std::mt19937_64 rng(20260809);
  std::uniform_int_distribution<long> d(-60, 60);
  int cases = 0;
  while (cases < 500) {
    std::array<Int, 4> a;
    bool ok = true;
    for (auto& c : a) {
      long v = d(rng);
      if (v == 0) ok = false;
      c = v;
    }
    if (!ok) continue;
    ++cases;
    auto full = h_group(a);
    REQUIRE(256 % full.order() == 0);

    // -1, 4 and the ratios a_i/a_0 alone generate the same group
    std::vector<FourthPowerClass> gens{FourthPowerClass::of(-1),
                                       FourthPowerClass::of(4)};
    for (int i = 1; i < 4; ++i)
      gens.push_back(FourthPowerClass::of(Rat(a[i]) / Rat(a[0])));
    auto reduced = subgroup_closure(gens, 256);
    REQUIRE(reduced.elements == full.elements);

    // every element has order dividing 4
    for (const auto& x : full.elements)
      REQUIRE(x.times(x).times(x).times(x).is_identity());
  }
}
