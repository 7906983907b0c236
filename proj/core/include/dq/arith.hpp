#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dq/numeric.hpp"

namespace dq {

// A place of Q: the real place or a finite prime.
struct Place {
  bool is_real = false;
  Int p = 0;

  static Place real() { return Place{true, 0}; }
  static Place prime(Int q) { return Place{false, std::move(q)}; }

  friend bool operator==(const Place& a, const Place& b) {
    return a.is_real == b.is_real && (a.is_real || a.p == b.p);
  }
  friend bool operator<(const Place& a, const Place& b) {
    if (a.is_real != b.is_real) return a.is_real;  // real place sorts first
    if (a.is_real) return false;
    return a.p < b.p;
  }
  std::string str() const { return is_real ? "real" : p.str(); }
};

// Nonzero rational in fully factored form: sign * prod p^e.
struct FactoredRational {
  int sign = 1;                 // +1 or -1
  std::map<Int, long> factors;  // prime -> nonzero exponent

  Rat reconstruct() const;
  bool is_rational_square() const;
  long exponent_of(const Int& p) const;
  FactoredRational times(const FactoredRational& other) const;
  std::string str() const;
};

struct FactorError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Deterministic primality (Miller-Rabin with a fixed base set, exact for
// anything this library will ever see).
bool is_prime(const Int& n);

// Factor a nonzero integer: trial division by primes <= 10^6, then
// Pollard-Brent rho with deterministic parameters.
FactoredRational factor(const Int& n);
FactoredRational factor_rational(const Rat& q);

// v_p(a) for a nonzero rational.
long valuation(const Rat& a, const Int& p);

// Legendre symbol (a/p) for odd prime p; 0 iff p | a.
int legendre_symbol(const Int& a, const Int& p);

// Hilbert symbol (a,b)_v for nonzero rationals, v real or any prime.
int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);

// Is a nonzero rational a square in the completion at v?
bool is_square_in_completion(const Rat& a, const Place& v);

// a mod p for a rational with v_p(a) >= 0.
Int rational_mod(const Rat& a, const Int& p);

// squarefree integer representing the square class of a nonzero rational
Int square_class_representative(const Rat& a);

const std::vector<long>& sieved_primes();  // all primes <= 10^6

}  // namespace dq
