#include "dq/quadric.hpp"

#include <boost/multiprecision/integer.hpp>

#include "dq/localpoints.hpp"

namespace dq {

bool on_quadric(const Surface& x, const QuadricPoint& p) {
  Int s = 0;
  for (int i = 0; i < 4; ++i) s += x.a[i] * p.y[i] * p.y[i];
  return s == 0;
}

namespace {

bool satisfies_avoid(const std::array<Int, 4>& y, const AvoidConstraint& av) {
  for (int i = 0; i < 4; ++i) {
    if (i == av.exempt_index) continue;
    if (y[i] % av.p != 0) return true;
  }
  return false;
}

std::optional<Int> exact_sqrt(const Int& n) {
  if (n < 0) return std::nullopt;
  Int r = boost::multiprecision::sqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

}  // namespace

QuadricPoint find_point(const Surface& x,
                        const std::optional<AvoidConstraint>& avoid,
                        long height_bound) {
  if (!real_soluble(x))
    throw NoRealPoint("find_point: quadric has no real points (coefficients share a sign)");
  const auto& a = x.a;
  for (long h = 1; h <= height_bound; ++h) {
    Int H = h;
    for (Int y0 = -H; y0 <= H; ++y0) {
      Int t0 = a[0] * y0 * y0;
      for (Int y1 = -H; y1 <= H; ++y1) {
        Int t1 = t0 + a[1] * y1 * y1;
        for (Int y2 = -H; y2 <= H; ++y2) {
          Int rhs_num = -(t1 + a[2] * y2 * y2);
          // a3 y3^2 = rhs_num
          if (rhs_num % a[3] != 0) continue;
          Int q = rhs_num / a[3];
          auto y3 = exact_sqrt(q);
          if (!y3) continue;
          if (*y3 > H) continue;  // appears again in a later shell
          Int mx = abs_of(y0);
          if (abs_of(y1) > mx) mx = abs_of(y1);
          if (abs_of(y2) > mx) mx = abs_of(y2);
          if (*y3 > mx) mx = *y3;
          if (mx != H) continue;  // count each point exactly once
          std::array<Int, 4> cand{y0, y1, y2, *y3};
          Int g = 0;
          for (const auto& c : cand) g = gcd_of(g, c);
          if (g == 0) continue;
          for (auto& c : cand) c /= g;
          if (avoid && !satisfies_avoid(cand, *avoid)) continue;
          return QuadricPoint{cand};
        }
      }
    }
  }
  throw NotFoundWithinBound(
      "find_point: no point of height <= " + std::to_string(height_bound) +
      "; retry with a larger bound");
}

QuadraticForm tangent_form(const Surface& x, const QuadricPoint& p) {
  if (!on_quadric(x, p)) throw NotOnQuadric("tangent_form: point not on the quadric");
  QuadraticForm f;
  Int g = 0;
  for (int i = 0; i < 4; ++i) {
    f.b[i] = x.a[i] * p.y[i];
    g = gcd_of(g, f.b[i]);
  }
  if (g == 0) throw NotOnQuadric("tangent_form: zero point");
  for (auto& c : f.b) c /= g;
  return f;
}

QuadraticForm pullback(const QuadraticForm& g) { return g; }

}  // namespace dq
