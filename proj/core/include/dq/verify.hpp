#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "dq/brauer.hpp"
#include "dq/ffield.hpp"
#include "dq/surface.hpp"

namespace dq {

// Reproductions of the exhaustive searches backing the published
// classification results this library is built around. Each report carries
// the recomputed data, the expected table and a match flag; a mismatch quotes
// the violated expectation.

struct PointlessCurveReport {
  struct Row {
    long p;
    std::set<std::array<long, 3>> found;
    std::set<std::array<long, 3>> expected;
    bool match;
  };
  std::vector<Row> rows;
  bool match = true;
  std::vector<std::string> mismatches;
};
PointlessCurveReport verify_pointless_curves(long max_p = 36, int jobs = 0);

struct SurfaceCensusReport {
  struct Row {
    long ell;
    std::vector<std::array<long, 4>> pointless;
    bool match;
  };
  std::vector<Row> rows;
  bool match = true;
  std::vector<std::string> mismatches;
};
SurfaceCensusReport verify_surface_solubility(
    const std::vector<long>& primes = {3, 5, 7, 11, 13, 17, 19}, int jobs = 0);

// one row per enumerated curve class (1, a2, a3) with rational points
struct EcClassRow {
  long p = 0;
  std::array<long, 3> rep{};
  std::array<long, 3> canonical{};
  BothValues first_choice;     // tangent form at the module's conic point
  bool first_choice_fallback;  // that conic point has a zero coordinate
  bool exists_tt;              // some conic point certifies both values
  bool constant_witness;       // some conic point: nonvanishing single class
};
std::vector<EcClassRow> ec_classes_for_prime(long p);

struct EcSweepReport {
  std::vector<EcClassRow> rows;
  // a class fails when no conic point certifies both values
  std::set<std::pair<long, std::array<long, 3>>> exceptions;
  std::set<std::pair<long, std::array<long, 3>>> expected;
  bool match = true;
  std::vector<std::string> mismatches;
};
EcSweepReport verify_ec_exceptions(long max_p = 113, int jobs = 0);

enum class FamilyStatus {
  Accepted,
  RejectedCongruence,
  RejectedFourthPower,
  RejectedLegendre,
  RejectedLocal,
};

struct FamilyCandidate {
  long p = 0, q = 0;
  std::optional<Surface> surface;
  FamilyStatus status = FamilyStatus::RejectedCongruence;
  std::optional<Place> failing_place;
  std::string status_str() const;
};

// ordered pairs (p, q) of odd primes <= max_prime, p != q, sorted by
// (max(p,q), p), each classified against the family conditions
std::vector<FamilyCandidate> family_search(long max_prime, int jobs = 0);

struct CounterexampleReport {
  bool els = false;
  std::size_t h_order = 0;
  bool meets_235 = false;
  bool qualifying_prime_absent = false;
  bool profile_17_is_half_exhaustive = false;
  bool other_profiles_zero = false;
  int residue_curve_classes_at_17 = 0;
  bool vertex_disk_empty = false;
  std::string verdict;
  bool match = false;
  std::vector<std::string> mismatches;
};
CounterexampleReport verify_counterexample();

struct ConstantFamilyReport {
  struct Row {
    long c1, c2;
    bool locally_soluble;
    bool profiles_singletons;
    bool all_exhaustive;
    int half_sum;
    bool ok;
  };
  std::vector<Row> rows;
  int soluble_count = 0;
  bool match = true;
  std::vector<std::string> mismatches;
};
ConstantFamilyReport verify_constant_family(
    const std::vector<std::pair<long, long>>& samples);

}  // namespace dq
