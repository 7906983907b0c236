#include "dq/surface.hpp"

#include <sstream>

#include "dq/ffield.hpp"

namespace dq {

Surface Surface::normalize(const std::array<Rat, 4>& raw) {
  std::array<Int, 4> ints;
  for (int i = 0; i < 4; ++i) {
    if (raw[i] == 0) throw SurfaceError("normalize: coefficients must be nonzero");
    // strip fourth powers: exponents mod 4 leaves an integer
    FactoredRational fr = factor_rational(raw[i]);
    Int v = fr.sign;
    for (const auto& [p, e] : fr.factors) {
      long r = ((e % 4) + 4) % 4;
      if (r != 0) v *= pow_int(p, static_cast<unsigned long>(r));
    }
    ints[i] = v;
  }
  Int g = 0;
  for (const auto& v : ints) g = gcd_of(g, v);
  for (auto& v : ints) v /= g;
  Surface s;
  s.a = ints;
  s.theta = factor(ints[0] * ints[1] * ints[2] * ints[3]);
  return s;
}

std::string Surface::str() const {
  std::ostringstream os;
  os << "(" << a[0] << ", " << a[1] << ", " << a[2] << ", " << a[3] << ")";
  return os.str();
}

std::string ReductionType::str() const {
  switch (kind) {
    case ReductionKind::Smooth: return "smooth";
    case ReductionKind::Cone: {
      std::ostringstream os;
      os << "cone(vertex index " << vanishing[0] << ")";
      return os.str();
    }
    case ReductionKind::FourPlanes: {
      std::ostringstream os;
      os << "four-planes(indices " << vanishing[0] << "," << vanishing[1] << ")";
      return os.str();
    }
    case ReductionKind::QuadruplePlane: return "quadruple-plane";
    case ReductionKind::UnclassifiedEven: return "unclassified(p=2)";
  }
  return "?";
}

ReductionType reduction_type(const Surface& x, const Int& p) {
  if (p == 2) return {ReductionKind::UnclassifiedEven, {}};
  if (p < 3) throw SurfaceError("reduction_type: p must be an odd prime");
  ReductionType rt{ReductionKind::Smooth, {}};
  for (int i = 0; i < 4; ++i)
    if (x.a[i] % p == 0) rt.vanishing.push_back(i);
  switch (rt.vanishing.size()) {
    case 0: rt.kind = ReductionKind::Smooth; break;
    case 1: rt.kind = ReductionKind::Cone; break;
    case 2: rt.kind = ReductionKind::FourPlanes; break;
    case 3: rt.kind = ReductionKind::QuadruplePlane; break;
    default:
      throw SurfaceError("reduction_type: surface not normalized (gcd > 1)");
  }
  return rt;
}

std::vector<Int> bad_primes(const Surface& x) {
  std::vector<Int> out{2};
  for (const auto& [p, e] : x.theta.factors)
    if (p != 2) out.push_back(p);
  return out;
}

std::vector<Condition4Witness> condition4_witnesses(const Surface& x) {
  std::vector<Condition4Witness> out;
  for (const auto& [p, e] : x.theta.factors) {
    if (p == 2) continue;
    int idx = -1, count = 0;
    for (int i = 0; i < 4; ++i)
      if (x.a[i] % p == 0) {
        idx = i;
        ++count;
      }
    if (count != 1) continue;
    long vp = valuation(Rat(x.a[idx]), p);
    if (vp % 2 == 0) continue;
    Condition4Witness w{p, idx, true, true};
    if (p == 7 || p == 11 || p == 17 || p == 41) {
      // residual curve: the three unit coefficients mod p
      long pl = static_cast<long>(p);
      std::array<long, 3> b;
      int k = 0;
      for (int i = 0; i < 4; ++i)
        if (i != idx) b[k++] = static_cast<long>(mod_reduce(x.a[i], p));
      if (fermat_equivalent(DiagonalCurve{pl, b})) w.special_ok = false;
    }
    out.push_back(w);
  }
  return out;
}

}  // namespace dq
