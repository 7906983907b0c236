#include "dq/arith.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace dq {

Int mod_pow(Int base, Int e, const Int& m) {
  base = mod_reduce(base, m);
  Int r = 1;
  while (e > 0) {
    if ((e & 1) != 0) r = (r * base) % m;
    base = (base * base) % m;
    e >>= 1;
  }
  return r;
}

Int mod_inverse(const Int& a, const Int& m) {
  Int old_r = mod_reduce(a, m), r = m;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw std::invalid_argument("mod_inverse: not invertible");
  return mod_reduce(old_s, m);
}

const std::vector<long>& sieved_primes() {
  static std::vector<long> primes = [] {
    constexpr long kBound = 1000000;
    std::vector<bool> composite(kBound + 1, false);
    std::vector<long> ps;
    for (long i = 2; i <= kBound; ++i) {
      if (!composite[i]) {
        ps.push_back(i);
        for (long j = i * i; j <= kBound; j += i) composite[j] = true;
      }
    }
    return ps;
  }();
  return primes;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  static const long kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (long q : kSmall) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  Int d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (long a : kSmall) {
    Int x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = (x * x) % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

namespace {

Int pollard_brent(const Int& n) {
  // deterministic parameter schedule
  for (Int c = 1; ; ++c) {
    Int x = 2, y = 2, d = 1;
    Int q = 1;
    long iter = 0;
    auto f = [&](const Int& v) { return (v * v + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      Int diff = x >= y ? x - y : y - x;
      if (diff == 0) break;  // cycle without factor, bump c
      q = (q * diff) % n;
      if (++iter % 64 == 0 || q == 0) {
        d = gcd_of(q == 0 ? diff : q, n);
        if (q == 0) q = 1;
      }
    }
    if (d == 1) d = gcd_of(q, n);
    if (d > 1 && d < n) return d;
  }
}

void factor_into(Int n, std::map<Int, long>& out) {
  for (long q : sieved_primes()) {
    if (Int(q) * q > n) break;
    while (n % q == 0) {
      ++out[q];
      n /= q;
    }
    if (n == 1) return;
  }
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Int d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

FactoredRational factor(const Int& n) {
  if (n == 0) throw FactorError("factor: argument must be nonzero");
  FactoredRational fr;
  fr.sign = n < 0 ? -1 : 1;
  factor_into(abs_of(n), fr.factors);
  return fr;
}

FactoredRational factor_rational(const Rat& q) {
  if (q == 0) throw FactorError("factor_rational: argument must be nonzero");
  FactoredRational fr = factor(numer(q));
  FactoredRational den = factor(denom(q));
  for (const auto& [p, e] : den.factors) {
    long& slot = fr.factors[p];
    slot -= e;
    if (slot == 0) fr.factors.erase(p);
  }
  return fr;
}

Rat FactoredRational::reconstruct() const {
  Rat v = sign;
  for (const auto& [p, e] : factors) {
    if (e > 0)
      v *= Rat(pow_int(p, static_cast<unsigned long>(e)));
    else
      v /= Rat(pow_int(p, static_cast<unsigned long>(-e)));
  }
  return v;
}

bool FactoredRational::is_rational_square() const {
  if (sign < 0) return false;
  for (const auto& [p, e] : factors)
    if (e % 2 != 0) return false;
  return true;
}

long FactoredRational::exponent_of(const Int& p) const {
  auto it = factors.find(p);
  return it == factors.end() ? 0 : it->second;
}

FactoredRational FactoredRational::times(const FactoredRational& other) const {
  FactoredRational r = *this;
  r.sign *= other.sign;
  for (const auto& [p, e] : other.factors) {
    long& slot = r.factors[p];
    slot += e;
    if (slot == 0) r.factors.erase(p);
  }
  return r;
}

std::string FactoredRational::str() const {
  std::ostringstream os;
  if (sign < 0) os << "-";
  if (factors.empty()) {
    os << "1";
    return os.str();
  }
  bool first = true;
  for (const auto& [p, e] : factors) {
    if (!first) os << "*";
    first = false;
    os << p;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

long valuation(const Rat& a, const Int& p) {
  if (a == 0) throw std::invalid_argument("valuation: argument must be nonzero");
  long v = 0;
  Int n = numer(a);
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  if (v == 0) {
    Int d = denom(a);
    while (d % p == 0) {
      d /= p;
      --v;
    }
  }
  return v;
}

int legendre_symbol(const Int& a, const Int& p) {
  if (p == 2) throw std::invalid_argument("legendre_symbol: p must be odd");
  // iterative Jacobi algorithm (valid for prime p); the Euler-criterion
  // oracle lives in the tests
  Int m = mod_reduce(a, p);
  if (m == 0) return 0;
  Int n = p;
  int result = 1;
  while (m != 0) {
    while ((m & 1) == 0) {
      m >>= 1;
      Int r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(m, n);
    if ((m % 4 == 3) && (n % 4 == 3)) result = -result;
    m %= n;
  }
  return n == 1 ? result : 0;
}

Int rational_mod(const Rat& a, const Int& p) {
  Int n = mod_reduce(numer(a), p);
  Int d = mod_reduce(denom(a), p);
  return (n * mod_inverse(d, p)) % p;
}

Int square_class_representative(const Rat& a) {
  FactoredRational fr = factor_rational(a);
  Int r = fr.sign;
  for (const auto& [p, e] : fr.factors)
    if (e % 2 != 0) r *= p;
  return r;
}

namespace {

// odd part of a rational reduced mod m for odd-denominator moduli 4 and 8,
// where every odd residue is its own inverse
Int odd_unit_mod(const Rat& u, const Int& m) {
  return (mod_reduce(numer(u), m) * mod_reduce(denom(u), m)) % m;
}

}  // namespace

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
  if (a == 0 || b == 0)
    throw std::invalid_argument("hilbert_symbol: arguments must be nonzero");
  if (v.is_real) return (a < 0 && b < 0) ? -1 : 1;

  // only the local normalization a = p^alpha u, b = p^beta w matters; the
  // arguments are never factored in full
  const Int& p = v.p;
  long va = valuation(a, p), vb = valuation(b, p);
  long alpha = ((va % 2) + 2) % 2, beta = ((vb % 2) + 2) % 2;
  Rat pa = Rat(pow_int(p, static_cast<unsigned long>(va >= 0 ? va : -va)));
  Rat u = va >= 0 ? Rat(a / pa) : Rat(a * pa);
  Rat pb = Rat(pow_int(p, static_cast<unsigned long>(vb >= 0 ? vb : -vb)));
  Rat w = vb >= 0 ? Rat(b / pb) : Rat(b * pb);

  if (p == 2) {
    auto eps = [](const Rat& x) { return odd_unit_mod(x, 4) == 3 ? 1 : 0; };
    auto omega = [](const Rat& x) {
      Int m = odd_unit_mod(x, 8);
      return (m == 3 || m == 5) ? 1 : 0;
    };
    int e = eps(u) * eps(w) + static_cast<int>(alpha) * omega(w) +
            static_cast<int>(beta) * omega(u);
    return (e % 2 == 0) ? 1 : -1;
  }
  int r = 1;
  if (alpha && beta && (p % 4 == 3)) r = -r;
  if (beta) r *= legendre_symbol(rational_mod(u, p), p);
  if (alpha) r *= legendre_symbol(rational_mod(w, p), p);
  return r;
}

bool is_square_in_completion(const Rat& a, const Place& v) {
  if (a == 0) throw std::invalid_argument("is_square_in_completion: nonzero required");
  if (v.is_real) return a > 0;
  const Int& p = v.p;
  long m = valuation(a, p);
  if (m % 2 != 0) return false;
  Rat pm = Rat(pow_int(p, static_cast<unsigned long>(m >= 0 ? m : -m)));
  Rat u = m >= 0 ? Rat(a / pm) : Rat(a * pm);
  if (p == 2) {
    // odd rational x/y is a square unit iff x*y = 1 mod 8
    return (mod_reduce(numer(u), 8) * mod_reduce(denom(u), 8)) % 8 == 1;
  }
  return legendre_symbol(rational_mod(u, p), p) == 1;
}

}  // namespace dq
