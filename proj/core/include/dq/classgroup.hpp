#pragma once

#include <array>
#include <set>
#include <stdexcept>
#include <vector>

#include "dq/arith.hpp"

namespace dq {

// Element of Q^x / (Q^x)^4: a sign bit and prime exponents mod 4.
struct FourthPowerClass {
  int sign_bit = 0;             // 1 iff a negative representative
  std::map<Int, int> exponents; // prime -> exponent in {1,2,3}

  static FourthPowerClass of(const Rat& a);
  FourthPowerClass times(const FourthPowerClass& other) const;
  FourthPowerClass inverse() const;
  bool is_identity() const { return sign_bit == 0 && exponents.empty(); }

  friend bool operator==(const FourthPowerClass& a, const FourthPowerClass& b) {
    return a.sign_bit == b.sign_bit && a.exponents == b.exponents;
  }
  friend bool operator<(const FourthPowerClass& a, const FourthPowerClass& b) {
    if (a.sign_bit != b.sign_bit) return a.sign_bit < b.sign_bit;
    return a.exponents < b.exponents;
  }
  std::string str() const;
};

struct ClassSubgroup {
  std::vector<FourthPowerClass> generators;
  std::set<FourthPowerClass> elements;

  std::size_t order() const { return elements.size(); }
  bool contains(const FourthPowerClass& c) const { return elements.count(c) > 0; }
};

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Smallest group containing gens; throws CapExceeded if it grows past cap.
ClassSubgroup subgroup_closure(const std::vector<FourthPowerClass>& gens,
                               std::size_t cap);

// The group H generated by -1, 4 and all quotients a_i/a_j. Order divides 256.
ClassSubgroup h_group(const std::array<Int, 4>& coeffs);

// True iff H contains the class of 2, 3 or 5.
bool meets_235(const ClassSubgroup& h);

}  // namespace dq
