#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dq/arith.hpp"
#include "dq/classgroup.hpp"

namespace dq {

struct SurfaceError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Diagonal quartic surface a0 X0^4 + a1 X1^4 + a2 X2^4 + a3 X3^4 = 0 with
// integer coefficients, gcd 1, none divisible by a fourth power.
struct Surface {
  std::array<Int, 4> a;
  FactoredRational theta;  // a0*a1*a2*a3 in factored form

  static Surface normalize(const std::array<Rat, 4>& raw);
  static Surface from_integers(const std::array<Int, 4>& ints) {
    std::array<Rat, 4> r;
    for (int i = 0; i < 4; ++i) r[i] = Rat(ints[i]);
    return normalize(r);
  }

  Rat theta_value() const { return theta.reconstruct(); }
  std::string str() const;
};

enum class ReductionKind { Smooth, Cone, FourPlanes, QuadruplePlane, UnclassifiedEven };

struct ReductionType {
  ReductionKind kind;
  std::vector<int> vanishing;  // indices of coefficients divisible by p
  std::string str() const;
};

// classification of the reduction mod an odd prime by the number of
// coefficients divisible by p
ReductionType reduction_type(const Surface& x, const Int& p);

// 2 together with all odd primes dividing some coefficient, sorted
std::vector<Int> bad_primes(const Surface& x);

struct Condition4Witness {
  Int p;
  int index;        // the unique coefficient index divisible by p
  bool odd_power;   // v_p of that coefficient is odd (always true here)
  bool special_ok;  // false only for p in {7,11,17,41} with Fermat reduction
};

// all odd primes dividing exactly one coefficient, to an odd power
std::vector<Condition4Witness> condition4_witnesses(const Surface& x);

struct TheoremReport {
  bool els = false;
  std::vector<std::pair<Place, bool>> els_places;  // place -> soluble
  std::size_t h_order = 0;
  bool meets_235 = false;
  std::vector<Condition4Witness> condition4;
  bool has_qualifying_prime = false;
  std::optional<std::string> conclusion;
};

// aggregate check of the four main-theorem conditions
TheoremReport theorem_conditions(const Surface& x);

}  // namespace dq
