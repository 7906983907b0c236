#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace dq {

// All exact arithmetic runs on arbitrary-precision integers; coefficient
// products and p-adic moduli must never overflow silently.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign_of(const Int& n) { return n.sign(); }
inline int sign_of(const Rat& q) { return q.sign(); }

inline Int abs_of(const Int& n) { return boost::multiprecision::abs(n); }

inline Int gcd_of(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int pow_int(const Int& base, unsigned long e) {
  return boost::multiprecision::pow(base, e);
}

inline Int numer(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denom(const Rat& q) { return boost::multiprecision::denominator(q); }

// base^e mod m, m >= 1
Int mod_pow(Int base, Int e, const Int& m);

// inverse of a mod m for gcd(a, m) = 1
Int mod_inverse(const Int& a, const Int& m);

// representative of a in [0, m)
inline Int mod_reduce(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace dq
