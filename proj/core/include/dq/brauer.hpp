#pragma once

#include <optional>
#include <set>
#include <vector>

#include "dq/localpoints.hpp"
#include "dq/quadric.hpp"
#include "dq/surface.hpp"

namespace dq {

struct PrecisionExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConsistencyFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// local invariant in halves: 0 or 1 (meaning 1/2)
using InvHalf = int;

// Quaternion class (theta, f/X_i^2) attached to the surface and a quadric
// point; f is gcd-normalized so the algebra has good reduction away from
// the bad primes.
struct AzumayaAlgebra {
  Surface surface;
  FactoredRational theta;
  QuadraticForm f;
  QuadricPoint source_point;
  bool trivial = false;  // theta is a rational square
};

AzumayaAlgebra construct_algebra(const Surface& x, const QuadricPoint& p);

// invariant at a p-adic point with sufficient precision
InvHalf invariant_at(const AzumayaAlgebra& a, const PadicPoint& q,
                     std::optional<int> denominator_index = std::nullopt);

// Legendre fast path: odd p, v_p(theta) odd, smooth reduction, nonzero
// reduced form value; nullopt when not applicable
std::optional<InvHalf> invariant_fast_path(const AzumayaAlgebra& a,
                                           const PadicPoint& q);

// invariant at an exact rational point of X, localized at v; uses an
// alternative representation when f vanishes at the point
InvHalf invariant_at_rational(const AzumayaAlgebra& a, const Place& v,
                              const std::array<Rat, 4>& q,
                              const std::vector<AzumayaAlgebra>& alternatives = {});

struct DiskRecord {
  std::string disk;
  std::string status;  // "resolved", "resolved-alt", "empty", "unresolved"
  std::optional<InvHalf> value;
};

struct InvariantProfile {
  Place place;
  std::set<InvHalf> values;
  bool exhaustive = false;
  std::string method;
  std::vector<DiskRecord> detail;
};

struct ProfileOptions {
  int precision_cap = 40;
  bool allow_shortcuts = true;
  std::vector<AzumayaAlgebra> alternatives;  // second representations
};

InvariantProfile place_profile(const AzumayaAlgebra& a, const Place& v,
                               const ProfileOptions& opt = {});

// exact sign range of f on the real locus of the surface
struct RealRange {
  bool takes_positive = false;
  bool takes_negative = false;
  bool takes_zero = false;
};
RealRange real_form_range(const Surface& x, const QuadraticForm& f);

enum class VerdictKind {
  ObstructionToRationalPoints,
  NoObstructionNonconstant,
  NoObstructionConstantZero,
  Indeterminate,
};

struct Verdict {
  VerdictKind kind = VerdictKind::Indeterminate;
  bool vacuous = false;  // no adelic points: obstruction question empty
  std::optional<Place> nonconstant_place;
  std::string reason;
  std::optional<AzumayaAlgebra> algebra;
  std::vector<InvariantProfile> profiles;
  std::optional<LocalSolubility> locals;
  std::string kind_str() const;
};

struct VerdictOptions {
  long height_bound = 10000;
  int precision_cap = 40;
};

Verdict compute_verdict(const Surface& x, const VerdictOptions& opt = {});

// Do the algebras from two quadric points differ by a constant at v?
bool independence_check(const Surface& x, const QuadricPoint& p1,
                        const QuadricPoint& p2, const Place& v,
                        int sample_size);

// Emits the conclusion when the four main-theorem conditions hold, after
// cross-checking it against the computed verdict.
std::optional<std::string> apply_main_theorem(const Surface& x);

// first few quadric points in enumeration order (for alternatives)
std::vector<QuadricPoint> find_points(const Surface& x,
                                      const std::optional<AvoidConstraint>& avoid,
                                      long height_bound, int count);

}  // namespace dq
