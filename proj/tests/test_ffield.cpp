#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>

#include "doctest.h"
#include "dq/ffield.hpp"

using namespace dq;

namespace {

// brute-force oracles: every projective tuple, no lookup tables
long pm(long x, long p) { return ((x % p) + p) % p; }
long pw4(long x, long p) { return pm(pm(x * x, p) * pm(x * x, p), p); }

std::vector<ProjPoint3> naive_curve_points(long p, std::array<long, 3> b) {
  std::vector<ProjPoint3> pts;
  for (long x1 = 0; x1 < p; ++x1)
    for (long x2 = 0; x2 < p; ++x2)
      for (long x3 = 0; x3 < p; ++x3) {
        if (x1 == 0 && x2 == 0 && x3 == 0) continue;
        // normalized: last nonzero coordinate 1
        if (x3 > 1) continue;
        if (x3 == 0 && x2 > 1) continue;
        if (x3 == 0 && x2 == 0 && x1 != 1) continue;
        long v = pm(b[0] * pw4(x1, p) + b[1] * pw4(x2, p) + b[2] * pw4(x3, p), p);
        if (v == 0) pts.push_back({x1, x2, x3});
      }
  return pts;
}

std::vector<ProjPoint4> naive_surface_points(long p, std::array<long, 4> a) {
  std::vector<ProjPoint4> pts;
  for (long x0 = 0; x0 < p; ++x0)
    for (long x1 = 0; x1 < p; ++x1)
      for (long x2 = 0; x2 < p; ++x2)
        for (long x3 = 0; x3 < p; ++x3) {
          if (x0 == 0 && x1 == 0 && x2 == 0 && x3 == 0) continue;
          if (x3 > 1) continue;
          if (x3 == 0 && x2 > 1) continue;
          if (x3 == 0 && x2 == 0 && x1 > 1) continue;
          if (x3 == 0 && x2 == 0 && x1 == 0 && x0 != 1) continue;
          long v = pm(a[0] * pw4(x0, p) + a[1] * pw4(x1, p) +
                          a[2] * pw4(x2, p) + a[3] * pw4(x3, p),
                      p);
          if (v == 0) pts.push_back({x0, x1, x2, x3});
        }
  return pts;
}

}  // namespace

TEST_CASE("quartic class representatives") {
  CHECK(quartic_class_reps(17).size() == 4);
  CHECK(quartic_class_reps(3) == std::vector<long>{1, 2});
  CHECK(quartic_class_reps(5).size() == 4);
  for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 97L, 113L, 127L, 197L}) {
    auto reps = quartic_class_reps(p);
    CHECK(static_cast<long>(reps.size()) == std::gcd(4L, p - 1));
    CHECK(reps.front() == 1);
    // one representative per coset
    const Fp& F = fp_table(p);
    std::set<long> seen;
    for (long r : reps) seen.insert(F.quartic_rep(r));
    CHECK(seen.size() == reps.size());
  }
}

TEST_CASE("curve point enumeration") {
  auto fermat17 = curve_points({17, {1, 1, 1}});
  CHECK(fermat17.size() == 12);
  const Fp& F = fp_table(17);
  for (const auto& pt : fermat17) {
    // every point has shape [e,1,0], [e,0,1] or [0,e,1] with e^4 = -1
    int zeros = (pt[0] == 0) + (pt[1] == 0) + (pt[2] == 0);
    CHECK(zeros == 1);
    for (long c : pt)
      if (c != 0 && c != 1) CHECK(F.pow4(c) == 16);
  }
  CHECK(curve_points({5, {1, 1, 1}}).empty());
  CHECK(curve_points({13, {1, 1, 2}}).empty());

  for (long p : {3L, 5L, 7L, 11L, 13L}) {
    const auto reps = quartic_class_reps(p);
    for (long b2 : reps)
      for (long b3 : reps)
        REQUIRE(curve_points({p, {1, b2, b3}}) ==
                naive_curve_points(p, {1, b2, b3}));
  }
}

TEST_CASE("surface point enumeration") {
  CHECK(surface_points(5, {1, 1, 1, 1}).empty());
  CHECK_FALSE(surface_points(5, {1, 1, 1, 2}).empty());

  auto cone = surface_points(17, {1, 13, 16, 0}, true);
  CHECK_FALSE(cone.empty());
  for (const auto& pt : cone) {
    bool grad = false;
    std::array<long, 4> a{1, 13, 16, 0};
    for (int i = 0; i < 4; ++i)
      if (a[i] != 0 && pt[i] != 0) grad = true;
    CHECK(grad);
  }
  // the vertex is the only non-smooth point
  auto all = surface_points(17, {1, 13, 16, 0}, false);
  CHECK(all.size() == cone.size() + 1);

  for (long p : {3L, 5L, 7L, 11L, 13L}) {
    const auto reps = quartic_class_reps(p);
    for (long a1 : reps)
      REQUIRE(surface_points(p, {1, a1, reps.back(), 1}) ==
              naive_surface_points(p, {1, a1, reps.back(), 1}));
    REQUIRE(surface_points(p, {1, reps.back(), 0, 0}) ==
            naive_surface_points(p, {1, reps.back(), 0, 0}));
  }
}

TEST_CASE("conic points") {
  auto pt17 = conic_point(17, {1, 1, 1});
  const Fp& F17 = fp_table(17);
  CHECK(F17.add(F17.add(F17.sq(pt17[0]), F17.sq(pt17[1])), F17.sq(pt17[2])) == 0);
  CHECK(pt17[0] != 0);
  CHECK(pt17[1] != 0);
  CHECK(pt17[2] != 0);

  auto pt3 = conic_point(3, {1, 1, 1});
  CHECK(pt3 == ProjPoint3{1, 1, 1});

  auto pt7 = conic_point(7, {1, 1, 1});
  const Fp& F7 = fp_table(7);
  CHECK(F7.add(F7.add(F7.sq(pt7[0]), F7.sq(pt7[1])), F7.sq(pt7[2])) == 0);

  // smooth conics over F_p have exactly p+1 points
  for (long p : {3L, 5L, 7L, 13L, 17L})
    CHECK(conic_points(p, {1, 1, 1}).size() == static_cast<std::size_t>(p + 1));
}

TEST_CASE("tangent residue forms") {
  auto f = tangent_residue_form(17, {1, 1, 1}, {5, 5, 1});
  CHECK(f.c == std::array<long, 3>{5, 5, 1});

  // the proposition's global form reduced mod 17: P = (20,13,-9) = (3,13,8)
  auto g = tangent_residue_form(17, {1, 13, 16}, {3, 13, 8});
  CHECK(g.c == std::array<long, 3>{3, 16, 9});

  auto d = tangent_residue_form(3, {1, 1, 2}, {1, 0, 1});
  CHECK(d.c == std::array<long, 3>{1, 0, 2});

  CHECK_THROWS_AS(tangent_residue_form(17, {1, 1, 1}, {1, 1, 1}), FfieldError);
}

TEST_CASE("fermat equivalence") {
  CHECK(fermat_equivalent({17, {1, 13, 16}}));
  CHECK(fermat_equivalent({7, {1, 1, 1}}));
  CHECK_FALSE(fermat_equivalent({5, {1, 1, 2}}));
}

TEST_CASE("both values") {
  CHECK(both_values({17, {1, 1, 1}}, {17, {5, 5, 1}}).takes_square);
  CHECK_FALSE(both_values({17, {1, 1, 1}}, {17, {5, 5, 1}}).takes_nonsquare);

  auto prop = both_values({17, {1, 13, 16}}, {17, {3, 16, 9}});
  CHECK_FALSE(prop.takes_square);
  CHECK(prop.takes_nonsquare);

  for (const auto& P : conic_points(13, {1, 1, 1})) {
    auto f = tangent_residue_form(13, {1, 1, 1}, P);
    auto bv = both_values({13, {1, 1, 1}}, f);
    CHECK(bv.both());
  }
}

TEST_CASE("canonical curve classes") {
  CHECK(canonical_curve_class({17, {1, 13, 16}}) == std::array<long, 3>{1, 1, 1});
  CHECK(canonical_curve_class({5, {2, 2, 2}}) == std::array<long, 3>{1, 1, 1});
  CHECK(canonical_curve_class({5, {1, 2, 1}}) == std::array<long, 3>{1, 1, 2});

  // constant on orbits, idempotent
  for (long p : {5L, 13L, 17L}) {
    const Fp& F = fp_table(p);
    const auto reps = quartic_class_reps(p);
    for (long b2 : reps)
      for (long b3 : reps) {
        auto canon = canonical_curve_class({p, {1, b2, b3}});
        REQUIRE(canonical_curve_class({p, canon}) == canon);
        for (long lam = 1; lam < p; lam += 3) {
          DiagonalCurve twisted{p, {F.mul(lam, b3), F.mul(lam, 1), F.mul(lam, b2)}};
          REQUIRE(canonical_curve_class(twisted) == canon);
        }
      }
  }
}

TEST_CASE("pointless curve census entries") {
  CHECK(pointless_quartic_curves(5) ==
        std::set<std::array<long, 3>>{{1, 1, 1}, {1, 1, 2}});
  CHECK(pointless_quartic_curves(29) == std::set<std::array<long, 3>>{{1, 1, 1}});
  CHECK(pointless_quartic_curves(7).empty());
}

TEST_CASE("conic-point independence of the both-values conclusion") {
  // If one tangent form certifies both values, every other conic point either
  // certifies both values or vanishes somewhere on the curve; if one tangent
  // form is nonvanishing with a single class, no conic point certifies both.
  for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L}) {
    const Fp& F = fp_table(p);
    const auto reps = quartic_class_reps(p);
    for (long b2 : reps)
      for (long b3 : reps) {
        DiagonalCurve c{p, {1, b2, b3}};
        auto pts = curve_points(c);
        if (pts.empty()) continue;
        bool exists_tt = false, exists_nvs = false;
        for (const auto& P : conic_points(p, c.b)) {
          auto f = tangent_residue_form(p, c.b, P);
          bool sq = false, ns = false, zero = false;
          for (const auto& q : pts) {
            long v = f.eval(q);
            if (v == 0) zero = true;
            else if (F.chi(v) == 1) sq = true;
            else ns = true;
          }
          if (sq && ns) exists_tt = true;
          if (!zero && (sq != ns)) exists_nvs = true;
        }
        // the two certificates are mutually exclusive
        REQUIRE_FALSE((exists_tt && exists_nvs));
        if (exists_tt) {
          for (const auto& P : conic_points(p, c.b)) {
            auto f = tangent_residue_form(p, c.b, P);
            bool sq = false, ns = false, zero = false;
            for (const auto& q : pts) {
              long v = f.eval(q);
              if (v == 0) zero = true;
              else if (F.chi(v) == 1) sq = true;
              else ns = true;
            }
            REQUIRE((zero || (sq && ns)));
          }
        }
      }
  }
}
