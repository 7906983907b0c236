#include "dq/ffield.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace dq {

Fp::Fp(long p) : p_(p) {
  if (p < 3 || p % 2 == 0) throw FfieldError("Fp: p must be an odd prime");
  pow4_.resize(p);
  chi_.assign(p, -1);
  chi_[0] = 0;
  preim4_.assign(p, {});
  for (long x = 0; x < p; ++x) {
    long x2 = (x * x) % p;
    if (x != 0) chi_[x2] = 1;
    long x4 = (x2 * x2) % p;
    pow4_[x] = x4;
    preim4_[x4].push_back(x);
  }
  rep4_.assign(p, 0);
  for (long x = 1; x < p; ++x) {
    if (rep4_[x] != 0) continue;
    // x starts a fresh coset; x is its least member by scan order
    reps_.push_back(x);
    for (long y = 1; y < p; ++y)
      if (pow4_[y] != 0) rep4_[(x * pow4_[y]) % p] = x;
  }
}

long Fp::inv(long a) const {
  long t = 0, newt = 1, r = p_, newr = reduce(a);
  while (newr != 0) {
    long q = r / newr;
    std::swap(t -= q * newt, newt);
    std::swap(r -= q * newr, newr);
  }
  if (r != 1) throw FfieldError("Fp::inv: not invertible");
  return t < 0 ? t + p_ : t;
}

const Fp& fp_table(long p) {
  static std::map<long, std::unique_ptr<Fp>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, std::make_unique<Fp>(p)).first;
  return *it->second;
}

std::vector<long> quartic_class_reps(long p) { return fp_table(p).quartic_reps(); }

std::vector<ProjPoint3> curve_points(const DiagonalCurve& c) {
  const Fp& F = fp_table(c.p);
  for (long bi : c.b)
    if (F.reduce(bi) == 0) throw FfieldError("curve_points: coefficients must be units");
  std::vector<ProjPoint3> pts;
  const long b1 = F.reduce(c.b[0]), b2 = F.reduce(c.b[1]), b3 = F.reduce(c.b[2]);
  // x3 = 1
  long inv_b2 = F.inv(b2);
  for (long x1 = 0; x1 < c.p; ++x1) {
    long need = F.mul(F.neg(F.add(F.mul(b1, F.pow4(x1)), b3)), inv_b2);
    for (long x2 : F.fourth_preimages(need)) pts.push_back({x1, x2, 1});
  }
  // x3 = 0, x2 = 1
  long need = F.mul(F.neg(b2), F.inv(b1));
  for (long x1 : F.fourth_preimages(need))
    if (x1 != 0) pts.push_back({x1, 1, 0});
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::vector<ProjPoint4> surface_points(long p, const std::array<long, 4>& a,
                                       bool smooth_only) {
  const Fp& F = fp_table(p);
  std::array<long, 4> ar;
  for (int i = 0; i < 4; ++i) ar[i] = F.reduce(a[i]);
  auto smooth_at = [&](const ProjPoint4& x) {
    for (int i = 0; i < 4; ++i) {
      // gradient component 4 a_i x_i^3; p odd so 4 is a unit
      if (ar[i] != 0 && x[i] != 0) return true;
    }
    return false;
  };
  std::vector<ProjPoint4> pts;
  auto emit = [&](const ProjPoint4& x) {
    if (!smooth_only || smooth_at(x)) pts.push_back(x);
  };
  // x3 = 1
  for (long x0 = 0; x0 < p; ++x0) {
    for (long x1 = 0; x1 < p; ++x1) {
      long s01 = F.add(F.mul(ar[0], F.pow4(x0)), F.mul(ar[1], F.pow4(x1)));
      long rhs = F.neg(F.add(s01, ar[3]));
      if (ar[2] == 0) {
        if (rhs == 0)
          for (long x2 = 0; x2 < p; ++x2) emit({x0, x1, x2, 1});
      } else {
        long need = F.mul(rhs, F.inv(ar[2]));
        for (long x2 : F.fourth_preimages(need)) emit({x0, x1, x2, 1});
      }
    }
  }
  // x3 = 0, x2 = 1
  for (long x0 = 0; x0 < p; ++x0) {
    long rhs = F.neg(F.add(F.mul(ar[0], F.pow4(x0)), ar[2]));
    if (ar[1] == 0) {
      if (rhs == 0)
        for (long x1 = 0; x1 < p; ++x1) emit({x0, x1, 1, 0});
    } else {
      long need = F.mul(rhs, F.inv(ar[1]));
      for (long x1 : F.fourth_preimages(need)) emit({x0, x1, 1, 0});
    }
  }
  // x3 = x2 = 0, x1 = 1
  {
    long rhs = F.neg(ar[1]);
    if (ar[0] == 0) {
      if (rhs == 0)
        for (long x0 = 0; x0 < p; ++x0) emit({x0, 1, 0, 0});
    } else {
      long need = F.mul(rhs, F.inv(ar[0]));
      for (long x0 : F.fourth_preimages(need))
        if (x0 != 0) emit({x0, 1, 0, 0});
    }
  }
  // [1,0,0,0]
  if (ar[0] == 0) emit({1, 0, 0, 0});
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::vector<ProjPoint3> conic_points(long p, const std::array<long, 3>& c) {
  const Fp& F = fp_table(p);
  std::vector<ProjPoint3> pts;
  for (long y1 = 0; y1 < p; ++y1)
    for (long y2 = 0; y2 < p; ++y2) {
      long v = F.add(F.add(F.mul(c[0], F.sq(y1)), F.mul(c[1], F.sq(y2))), F.reduce(c[2]));
      if (v == 0) pts.push_back({y1, y2, 1});
    }
  for (long y1 = 0; y1 < p; ++y1) {
    long v = F.add(F.mul(c[0], F.sq(y1)), F.reduce(c[1]));
    if (v == 0) pts.push_back({y1, 1, 0});
  }
  return pts;
}

ProjPoint3 conic_point(long p, const std::array<long, 3>& c, bool prefer_nonzero) {
  const Fp& F = fp_table(p);
  for (long ci : c)
    if (F.reduce(ci) == 0) throw FfieldError("conic_point: coefficients must be units");
  if (prefer_nonzero) {
    for (long y1 = 1; y1 < p; ++y1)
      for (long y2 = 1; y2 < p; ++y2) {
        long v = F.add(F.add(F.mul(c[0], F.sq(y1)), F.mul(c[1], F.sq(y2))),
                       F.reduce(c[2]));
        if (v == 0) return {y1, y2, 1};
      }
  }
  for (long y1 = 0; y1 < p; ++y1)
    for (long y2 = 0; y2 < p; ++y2) {
      long v = F.add(F.add(F.mul(c[0], F.sq(y1)), F.mul(c[1], F.sq(y2))),
                     F.reduce(c[2]));
      if (v == 0) return {y1, y2, 1};
    }
  for (long y1 = 0; y1 < p; ++y1) {
    long v = F.add(F.mul(c[0], F.sq(y1)), F.reduce(c[1]));
    if (v == 0) return {y1, 1, 0};
  }
  throw FfieldError("conic_point: no point found (conic not smooth?)");
}

ResidueForm tangent_residue_form(long p, const std::array<long, 3>& c,
                                 const ProjPoint3& pt) {
  const Fp& F = fp_table(p);
  long v = 0;
  for (int i = 0; i < 3; ++i) v = F.add(v, F.mul(F.reduce(c[i]), F.sq(pt[i])));
  if (v != 0) throw FfieldError("tangent_residue_form: point not on conic");
  ResidueForm f{p, {}};
  for (int i = 0; i < 3; ++i) f.c[i] = F.mul(F.reduce(c[i]), F.reduce(pt[i]));
  if (f.c[0] == 0 && f.c[1] == 0 && f.c[2] == 0)
    throw FfieldError("tangent_residue_form: degenerate form");
  return f;
}

bool fermat_equivalent(const DiagonalCurve& c) {
  const Fp& F = fp_table(c.p);
  long b1 = F.reduce(c.b[0]);
  long i1 = F.inv(b1);
  return F.is_fourth_power(F.mul(F.reduce(c.b[1]), i1)) &&
         F.is_fourth_power(F.mul(F.reduce(c.b[2]), i1));
}

BothValues both_values(const DiagonalCurve& c, const ResidueForm& f,
                       const std::vector<ProjPoint3>& pts) {
  if (c.p != f.p) throw FfieldError("both_values: mismatched primes");
  const Fp& F = fp_table(c.p);
  BothValues r;
  for (const auto& q : pts) {
    long v = f.eval(q);
    if (v == 0) continue;
    if (F.chi(v) == 1)
      r.takes_square = true;
    else
      r.takes_nonsquare = true;
    if (r.both()) break;
  }
  return r;
}

BothValues both_values(const DiagonalCurve& c, const ResidueForm& f) {
  return both_values(c, f, curve_points(c));
}

std::array<long, 3> canonical_curve_class(const DiagonalCurve& c) {
  const Fp& F = fp_table(c.p);
  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                  {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::array<long, 3> b;
  for (int i = 0; i < 3; ++i) {
    b[i] = F.reduce(c.b[i]);
    if (b[i] == 0) throw FfieldError("canonical_curve_class: zero coefficient");
  }
  std::array<long, 3> best{};
  bool have = false;
  for (long lam = 1; lam < c.p; ++lam) {
    for (const auto& perm : perms) {
      std::array<long, 3> cand;
      for (int i = 0; i < 3; ++i) cand[i] = F.quartic_rep(F.mul(lam, b[perm[i]]));
      if (!have || cand < best) {
        best = cand;
        have = true;
      }
    }
  }
  return best;
}

std::set<std::array<long, 3>> pointless_quartic_curves(long p) {
  const Fp& F = fp_table(p);
  std::set<std::array<long, 3>> out;
  for (long a2 : F.quartic_reps())
    for (long a3 : F.quartic_reps()) {
      DiagonalCurve c{p, {1, a2, a3}};
      if (curve_points(c).empty()) out.insert(canonical_curve_class(c));
    }
  return out;
}

}  // namespace dq
