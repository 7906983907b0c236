#include <sstream>

#include "dq/classgroup.hpp"
#include "dq/localpoints.hpp"
#include "dq/surface.hpp"

namespace dq {

TheoremReport theorem_conditions(const Surface& x) {
  TheoremReport rep;
  LocalSolubility ls = everywhere_locally_soluble(x);
  rep.els = ls.result;
  for (const auto& [pl, chk] : ls.witnesses)
    rep.els_places.emplace_back(pl, chk.soluble);

  ClassSubgroup h = h_group(x.a);
  rep.h_order = h.order();
  rep.meets_235 = meets_235(h);

  rep.condition4 = condition4_witnesses(x);
  for (const auto& w : rep.condition4)
    if (w.special_ok) rep.has_qualifying_prime = true;

  if (rep.els && !rep.meets_235 && rep.h_order == 256 && rep.has_qualifying_prime) {
    Int qp = 0;
    for (const auto& w : rep.condition4)
      if (w.special_ok) {
        qp = w.p;
        break;
      }
    std::ostringstream os;
    os << "Br X / Br Q has order 2 and gives no obstruction to rational "
          "points: the quaternion class takes both invariant values at p = "
       << qp;
    rep.conclusion = os.str();
  }
  return rep;
}

}  // namespace dq
