#include "dq/classgroup.hpp"

#include <deque>
#include <sstream>

namespace dq {

FourthPowerClass FourthPowerClass::of(const Rat& a) {
  FactoredRational fr = factor_rational(a);
  FourthPowerClass c;
  c.sign_bit = fr.sign < 0 ? 1 : 0;
  for (const auto& [p, e] : fr.factors) {
    int r = static_cast<int>(((e % 4) + 4) % 4);
    if (r != 0) c.exponents[p] = r;
  }
  return c;
}

FourthPowerClass FourthPowerClass::times(const FourthPowerClass& other) const {
  FourthPowerClass r = *this;
  r.sign_bit ^= other.sign_bit;
  for (const auto& [p, e] : other.exponents) {
    auto it = r.exponents.find(p);
    int v = (it == r.exponents.end() ? 0 : it->second) + e;
    v %= 4;
    if (v == 0) {
      if (it != r.exponents.end()) r.exponents.erase(it);
    } else {
      r.exponents[p] = v;
    }
  }
  return r;
}

FourthPowerClass FourthPowerClass::inverse() const {
  FourthPowerClass r;
  r.sign_bit = sign_bit;
  for (const auto& [p, e] : exponents) r.exponents[p] = 4 - e;
  return r;
}

std::string FourthPowerClass::str() const {
  std::ostringstream os;
  if (sign_bit) os << "-";
  if (exponents.empty()) {
    os << "1";
    return os.str();
  }
  bool first = true;
  for (const auto& [p, e] : exponents) {
    if (!first) os << "*";
    first = false;
    os << p;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

ClassSubgroup subgroup_closure(const std::vector<FourthPowerClass>& gens,
                               std::size_t cap) {
  ClassSubgroup g;
  g.generators = gens;
  g.elements.insert(FourthPowerClass{});
  std::deque<FourthPowerClass> frontier(g.elements.begin(), g.elements.end());
  while (!frontier.empty()) {
    FourthPowerClass cur = frontier.front();
    frontier.pop_front();
    for (const auto& gen : gens) {
      FourthPowerClass nxt = cur.times(gen);
      if (g.elements.insert(nxt).second) {
        if (g.elements.size() > cap)
          throw CapExceeded("subgroup_closure: closure exceeds cap");
        frontier.push_back(nxt);
      }
    }
  }
  return g;
}

ClassSubgroup h_group(const std::array<Int, 4>& coeffs) {
  std::vector<FourthPowerClass> gens;
  gens.push_back(FourthPowerClass::of(Rat(-1)));
  gens.push_back(FourthPowerClass::of(Rat(4)));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) gens.push_back(FourthPowerClass::of(Rat(coeffs[i]) / Rat(coeffs[j])));
  return subgroup_closure(gens, 256);
}

bool meets_235(const ClassSubgroup& h) {
  for (int q : {2, 3, 5})
    if (h.contains(FourthPowerClass::of(Rat(q)))) return true;
  return false;
}

}  // namespace dq
