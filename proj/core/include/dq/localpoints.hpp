#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dq/surface.hpp"

namespace dq {

struct PadicPoint {
  Int p;
  std::array<Int, 4> coords;  // mod p^precision
  int precision = 0;          // F(coords) == 0 mod p^precision
  bool primitive = true;
  std::optional<int> smooth_index;  // coordinate with the Hensel derivative
};

struct SolubilityCertificate {
  bool soluble = false;
  std::optional<PadicPoint> witness;
  int search_depth = 0;  // completeness bound of the search
};

struct NonSmoothResidue : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Digit-by-digit search for primitive p-adic solutions of sum a_i x_i^4 = 0.
// Coordinates are refined independently: a coordinate's next digit is only
// branched on once the undetermined tail could affect the congruence being
// tested. Acceptance is the strong Hensel criterion
//   v(F(x)) >= max(2 e_i + 1, e_i + k_i)  with  e_i = v(4 a_i x_i^3)
// for some coordinate determined mod p^{k_i}; any primitive solution is
// accepted by the time the tested congruence level reaches
// kmax = 2 (v_p(4) + 3) + 2, since a unit coordinate has e_i <= v_p(4) + 3.
class PadicSolver {
 public:
  PadicSolver(std::array<Int, 4> a, Int p);

  // k[i] == kPinned marks a coordinate held at exactly c[i]; the search works
  // per projective chart (first unit coordinate scaled to 1), which every
  // primitive solution of a fourth-power-free form meets, since it always has
  // a second unit coordinate for the Hensel step.
  static constexpr int kPinned = 64;

  struct Node {
    std::array<Int, 4> c;   // x_i == c[i] mod p^{k[i]}
    std::array<int, 4> k;
  };

  // a node the search has certified to contain p-adic points
  struct Region {
    Node node;
    int smooth_index;
    int level;  // F == 0 mod p^level throughout the certified point set
  };

  enum class VisitAction { Stop, Descend };

  int completeness_depth() const { return kmax_; }
  const Int& prime() const { return p_; }

  std::optional<PadicPoint> find_point();
  std::optional<PadicPoint> find_in_disk(const std::array<Int, 4>& residue);

  // Traverse all point-containing regions (no early exit). The callback runs
  // on each accepted region; Descend refines it further. Returns true iff no
  // region was still being refined when max_target was reached.
  bool visit_regions(const std::function<VisitAction(const Region&)>& cb,
                     int max_target);
  bool visit_regions_from(const std::array<Int, 4>& residue,
                          const std::function<VisitAction(const Region&)>& cb,
                          int max_target);
  bool visit_regions_from_node(const Node& root,
                               const std::function<VisitAction(const Region&)>& cb,
                               int max_target);

  // Value of a diagonal degree-d form sum coeff_i x_i^d on every completion
  // of the node, when determined up to the given p-adic margin.
  std::optional<Int> determined_form_value(const Node& n,
                                           const std::array<Int, 4>& coeffs,
                                           int degree, int margin) const;

  PadicPoint materialize(const Region& r) const;

 private:
  std::array<Int, 4> a_;
  Int p_;
  int vp4_, vp6_;
  int kmax_;
  std::vector<Int> ppow_;

  Node chart_root(int i) const;
  Node disk_root(const std::array<Int, 4>& residue) const;
  const Int& ppow(int k);
  long vp(const Int& x) const;  // valuation, LONG_MAX-ish for 0
  int term_uncertainty(const Node& n, int i, const Int& coeff, int degree) const;
  int form_uncertainty(const Node& n, const std::array<Int, 4>& coeffs,
                       int degree) const;
  Int eval_quartic(const std::array<Int, 4>& x) const;
  bool possibly_primitive(const Node& n) const;

  // shared recursion; returns found witness in decide mode, and sets
  // all_resolved in visit mode
  std::optional<PadicPoint> walk(Node n, int target,
                                 const std::function<VisitAction(const Region&)>* cb,
                                 int max_target, bool* all_resolved);
};

bool real_soluble(const Surface& x);

SolubilityCertificate qp_soluble(const Surface& x, const Int& p);

struct PlaceCheck {
  bool soluble = false;
  std::optional<SolubilityCertificate> certificate;  // absent when skipped
  std::string note;                                  // skip justification
};

struct LocalSolubility {
  bool result = false;
  std::map<Place, PlaceCheck> witnesses;
  std::vector<Place> failing_places() const;
};

// Real, p = 2, all odd p <= 19 and all odd bad primes; good-reduction
// p >= 23 is skipped with a recorded justification.
LocalSolubility everywhere_locally_soluble(const Surface& x);

// Hensel lift of a smooth residue point to precision k (odd p).
PadicPoint lift_residue_point(const Surface& x, const Int& p,
                              const std::array<long, 4>& residue, int k);

struct ResidueDisks {
  std::vector<std::array<long, 4>> smooth;
  std::vector<std::array<long, 4>> singular;
  std::map<std::array<long, 4>, bool> singular_empty;  // true = no Q_p points
};

ResidueDisks residue_disks(const Surface& x, const Int& p);

}  // namespace dq
