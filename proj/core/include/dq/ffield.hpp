#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <vector>

namespace dq {

// Per-prime lookup tables shared by the enumeration kernels: fourth powers,
// quadratic character, fourth-power coset representatives and preimages.
// Built once, read-only afterwards.
class Fp {
 public:
  explicit Fp(long p);

  long p() const { return p_; }
  long reduce(long x) const { long r = x % p_; return r < 0 ? r + p_ : r; }
  long mul(long a, long b) const { return (a * b) % p_; }
  long add(long a, long b) const { long r = a + b; return r >= p_ ? r - p_ : r; }
  long neg(long a) const { return a == 0 ? 0 : p_ - a; }
  long inv(long a) const;
  long sq(long a) const { return (a * a) % p_; }
  long pow4(long a) const { return pow4_[a]; }

  // quadratic character: 0 at 0, else +-1
  int chi(long a) const { return chi_[a]; }
  bool is_fourth_power(long a) const { return a != 0 && rep4_[a] == 1; }
  // least representative of the fourth-power coset of a unit a
  long quartic_rep(long a) const { return rep4_[a]; }
  const std::vector<long>& quartic_reps() const { return reps_; }
  const std::vector<long>& fourth_preimages(long v) const { return preim4_[v]; }

 private:
  long p_;
  std::vector<long> pow4_;
  std::vector<int> chi_;
  std::vector<long> rep4_;
  std::vector<long> reps_;
  std::vector<std::vector<long>> preim4_;
};

// cached, thread-safe table registry
const Fp& fp_table(long p);

// Diagonal quartic plane curve b1*X1^4 + b2*X2^4 + b3*X3^4 = 0 over F_p.
struct DiagonalCurve {
  long p;
  std::array<long, 3> b;  // all nonzero mod p
};

// Diagonal quadratic form c1*X1^2 + c2*X2^2 + c3*X3^2 over F_p.
struct ResidueForm {
  long p;
  std::array<long, 3> c;  // not all zero

  long eval(const std::array<long, 3>& x) const {
    const Fp& F = fp_table(p);
    long v = 0;
    for (int i = 0; i < 3; ++i) v = F.add(v, F.mul(c[i], F.sq(x[i])));
    return v;
  }
};

using ProjPoint3 = std::array<long, 3>;
using ProjPoint4 = std::array<long, 4>;

struct FfieldError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// exactly gcd(4, p-1) coset representatives, least in each coset, 1 first
std::vector<long> quartic_class_reps(long p);

// complete sorted list of projective solutions, last nonzero coordinate = 1
std::vector<ProjPoint3> curve_points(const DiagonalCurve& c);

// complete list of projective solutions of sum a_i x_i^4 = 0 (a_i may be 0
// mod p); when smooth_only, keep points with some 4*a_i*x_i^3 nonzero
std::vector<ProjPoint4> surface_points(long p, const std::array<long, 4>& a,
                                       bool smooth_only = false);

// a point on the smooth conic c1 Y1^2 + c2 Y2^2 + c3 Y3^2 = 0 (c_i != 0);
// prefers a point with all coordinates nonzero when one exists
ProjPoint3 conic_point(long p, const std::array<long, 3>& c,
                       bool prefer_nonzero = true);
std::vector<ProjPoint3> conic_points(long p, const std::array<long, 3>& c);

// tangent form at a conic point: coefficients (c1 y1, c2 y2, c3 y3)
ResidueForm tangent_residue_form(long p, const std::array<long, 3>& c,
                                 const ProjPoint3& pt);

// is the curve equivalent to x^4 + y^4 + z^4 = 0?
bool fermat_equivalent(const DiagonalCurve& c);

struct BothValues {
  bool takes_square = false;
  bool takes_nonsquare = false;
  bool both() const { return takes_square && takes_nonsquare; }
};

// does the reduced tangent form take nonzero square / nonsquare values on
// the curve's rational points?
BothValues both_values(const DiagonalCurve& c, const ResidueForm& f);
BothValues both_values(const DiagonalCurve& c, const ResidueForm& f,
                       const std::vector<ProjPoint3>& pts);

// lexicographically least triple in the full equivalence orbit of b
std::array<long, 3> canonical_curve_class(const DiagonalCurve& c);

// canonical classes of smooth diagonal quartic curves over F_p without
// rational points
std::set<std::array<long, 3>> pointless_quartic_curves(long p);

}  // namespace dq
