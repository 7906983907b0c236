#include "dq/verify.hpp"

#include <algorithm>
#include <sstream>

#include "dq/parallel.hpp"

namespace dq {

namespace {

std::vector<long> odd_primes_upto(long bound) {
  std::vector<long> out;
  for (long q : sieved_primes()) {
    if (q > bound) break;
    if (q > 2) out.push_back(q);
  }
  return out;
}

std::string triple_str(const std::array<long, 3>& t) {
  std::ostringstream os;
  os << "(" << t[0] << "," << t[1] << "," << t[2] << ")";
  return os.str();
}

}  // namespace

PointlessCurveReport verify_pointless_curves(long max_p, int jobs) {
  auto ps = odd_primes_upto(max_p);
  PointlessCurveReport rep;
  rep.rows.resize(ps.size());
  parallel_for(ps.size(), jobs, [&](std::size_t i) {
    long p = ps[i];
    PointlessCurveReport::Row row;
    row.p = p;
    row.found = pointless_quartic_curves(p);
    if (p == 5) row.expected = {{1, 1, 1}, {1, 1, 2}};
    else if (p == 13) row.expected = {{1, 1, 2}};
    else if (p == 29) row.expected = {{1, 1, 1}};
    row.match = row.found == row.expected;
    rep.rows[i] = std::move(row);
  });
  for (const auto& row : rep.rows) {
    if (row.match) continue;
    rep.match = false;
    std::ostringstream os;
    os << "p=" << row.p << ": expected pointless classes {";
    for (const auto& t : row.expected) os << triple_str(t);
    os << "}, found {";
    for (const auto& t : row.found) os << triple_str(t);
    os << "}";
    rep.mismatches.push_back(os.str());
  }
  return rep;
}

SurfaceCensusReport verify_surface_solubility(const std::vector<long>& primes,
                                              int jobs) {
  SurfaceCensusReport rep;
  rep.rows.resize(primes.size());
  parallel_for(primes.size(), jobs, [&](std::size_t i) {
    long ell = primes[i];
    SurfaceCensusReport::Row row;
    row.ell = ell;
    const auto reps = quartic_class_reps(ell);
    for (long a1 : reps)
      for (long a2 : reps)
        for (long a3 : reps) {
          std::array<long, 4> a{1, a1, a2, a3};
          if (surface_points(ell, a).empty()) row.pointless.push_back(a);
        }
    bool expect_fermat_only = (ell == 5);
    if (expect_fermat_only)
      row.match = row.pointless == std::vector<std::array<long, 4>>{{1, 1, 1, 1}};
    else
      row.match = row.pointless.empty();
    rep.rows[i] = std::move(row);
  });
  for (const auto& row : rep.rows) {
    if (row.match) continue;
    rep.match = false;
    std::ostringstream os;
    os << "ell=" << row.ell << ": expected "
       << (row.ell == 5 ? "exactly the Fermat class" : "no pointless class")
       << ", found " << row.pointless.size() << " pointless classes";
    rep.mismatches.push_back(os.str());
  }
  return rep;
}

std::vector<EcClassRow> ec_classes_for_prime(long p) {
  const Fp& F = fp_table(p);
  std::vector<EcClassRow> rows;
  for (long a2 : F.quartic_reps())
    for (long a3 : F.quartic_reps()) {
      DiagonalCurve c{p, {1, a2, a3}};
      auto pts = curve_points(c);
      if (pts.empty()) continue;
      EcClassRow row;
      row.p = p;
      row.rep = {1, a2, a3};
      row.canonical = canonical_curve_class(c);
      ProjPoint3 cp = conic_point(p, c.b, true);
      row.first_choice_fallback = (cp[0] == 0 || cp[1] == 0 || cp[2] == 0);
      row.first_choice = both_values(c, tangent_residue_form(p, c.b, cp), pts);
      row.exists_tt = false;
      row.constant_witness = false;
      for (const auto& P : conic_points(p, c.b)) {
        ResidueForm f = tangent_residue_form(p, c.b, P);
        bool sq = false, ns = false, zero = false;
        for (const auto& q : pts) {
          long v = f.eval(q);
          if (v == 0) zero = true;
          else if (F.chi(v) == 1) sq = true;
          else ns = true;
        }
        if (sq && ns) row.exists_tt = true;
        if (!zero && (sq != ns)) row.constant_witness = true;
        if (row.exists_tt) break;
      }
      rows.push_back(std::move(row));
    }
  return rows;
}

EcSweepReport verify_ec_exceptions(long max_p, int jobs) {
  auto ps = odd_primes_upto(max_p);
  EcSweepReport rep;
  std::vector<std::vector<EcClassRow>> per_prime(ps.size());
  parallel_for(ps.size(), jobs, [&](std::size_t i) {
    per_prime[i] = ec_classes_for_prime(ps[i]);
  });
  for (auto& rows : per_prime)
    for (auto& row : rows) {
      if (!row.exists_tt) rep.exceptions.insert({row.p, row.canonical});
      rep.rows.push_back(std::move(row));
    }
  rep.expected = {{7, {1, 1, 1}}, {11, {1, 1, 1}}, {17, {1, 1, 1}}, {41, {1, 1, 1}}};
  // the expected table only reaches p = 41; cut it down for truncated sweeps
  for (auto it = rep.expected.begin(); it != rep.expected.end();)
    it = (it->first > max_p) ? rep.expected.erase(it) : std::next(it);
  rep.match = rep.exceptions == rep.expected;
  if (!rep.match) {
    for (const auto& [p, cls] : rep.exceptions)
      if (!rep.expected.count({p, cls})) {
        std::ostringstream os;
        os << "unexpected both-values failure: p=" << p << " class "
           << triple_str(cls);
        rep.mismatches.push_back(os.str());
      }
    for (const auto& [p, cls] : rep.expected)
      if (!rep.exceptions.count({p, cls})) {
        std::ostringstream os;
        os << "expected failure not found: p=" << p << " class "
           << triple_str(cls)
           << " (every conic point with both square classes certifies it)";
        rep.mismatches.push_back(os.str());
      }
  }
  return rep;
}

std::string FamilyCandidate::status_str() const {
  switch (status) {
    case FamilyStatus::Accepted: return "Accepted";
    case FamilyStatus::RejectedCongruence: return "RejectedCongruence";
    case FamilyStatus::RejectedFourthPower: return "RejectedFourthPower";
    case FamilyStatus::RejectedLegendre: return "RejectedLegendre";
    case FamilyStatus::RejectedLocal:
      return "RejectedLocal(" + (failing_place ? failing_place->str() : "?") + ")";
  }
  return "?";
}

std::vector<FamilyCandidate> family_search(long max_prime, int jobs) {
  auto ps = odd_primes_upto(max_prime);
  std::vector<std::pair<long, long>> pairs;
  for (long p : ps)
    for (long q : ps)
      if (p != q) pairs.emplace_back(p, q);
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    long ma = std::max(a.first, a.second), mb = std::max(b.first, b.second);
    if (ma != mb) return ma < mb;
    return a.first < b.first;
  });
  std::vector<FamilyCandidate> out(pairs.size());
  parallel_for(pairs.size(), jobs, [&](std::size_t i) {
    auto [p, q] = pairs[i];
    FamilyCandidate cand;
    cand.p = p;
    cand.q = q;
    if (p % 4 != 3 || q % 4 != 3) {
      cand.status = FamilyStatus::RejectedCongruence;
      out[i] = std::move(cand);
      return;
    }
    const Fp& f17 = fp_table(17);
    if (p % 17 == 0 || q % 17 == 0 || !f17.is_fourth_power(p % 17) ||
        !f17.is_fourth_power(q % 17)) {
      cand.status = FamilyStatus::RejectedFourthPower;
      out[i] = std::move(cand);
      return;
    }
    if (legendre_symbol(p, q) != 1) {
      cand.status = FamilyStatus::RejectedLegendre;
      out[i] = std::move(cand);
      return;
    }
    Surface s = Surface::from_integers(
        {Int(1), Int(q), Int(-p), Int(-17) * p * q});
    cand.surface = s;
    LocalSolubility ls = everywhere_locally_soluble(s);
    if (!ls.result) {
      cand.status = FamilyStatus::RejectedLocal;
      cand.failing_place = ls.failing_places().front();
    } else {
      cand.status = FamilyStatus::Accepted;
    }
    out[i] = std::move(cand);
  });
  return out;
}

CounterexampleReport verify_counterexample() {
  CounterexampleReport rep;
  Surface x = Surface::from_integers({Int(1), Int(47), Int(-103), Int(-82297)});

  auto require = [&](bool ok, const std::string& what) {
    if (!ok) rep.mismatches.push_back(what);
    return ok;
  };

  LocalSolubility ls = everywhere_locally_soluble(x);
  rep.els = ls.result;
  require(rep.els, "expected points in every completion");

  ClassSubgroup h = h_group(x.a);
  rep.h_order = h.order();
  require(rep.h_order == 256, "expected |H| = 256");
  rep.meets_235 = meets_235(h);
  require(!rep.meets_235, "expected H disjoint from {2,3,5}");

  auto c4 = condition4_witnesses(x);
  rep.qualifying_prime_absent = true;
  for (const auto& w : c4)
    if (w.special_ok) rep.qualifying_prime_absent = false;
  require(rep.qualifying_prime_absent,
          "expected no qualifying fourth-condition prime (17 carries the Fermat cone)");

  ResidueDisks rd = residue_disks(x, 17);
  std::set<std::array<long, 3>> curve_classes;
  for (const auto& pt : rd.smooth) {
    // project away the vertex coordinate and normalize the curve part
    std::array<long, 3> c{pt[0], pt[1], pt[2]};
    const Fp& F = fp_table(17);
    for (int i = 2; i >= 0; --i)
      if (c[i] != 0) {
        long inv = F.inv(c[i]);
        for (auto& v : c) v = F.mul(v, inv);
        break;
      }
    curve_classes.insert(c);
  }
  rep.residue_curve_classes_at_17 = static_cast<int>(curve_classes.size());
  require(rep.residue_curve_classes_at_17 == 12,
          "expected 12 residue curve classes at 17");
  rep.vertex_disk_empty = rd.singular.size() == 1 &&
                          rd.singular[0] == std::array<long, 4>{0, 0, 0, 1} &&
                          rd.singular_empty.at(rd.singular[0]);
  require(rep.vertex_disk_empty, "expected exactly one singular disk [0,0,0,1], empty");

  Verdict v = compute_verdict(x);
  rep.verdict = v.kind_str();
  require(v.kind == VerdictKind::ObstructionToRationalPoints,
          "expected verdict ObstructionToRationalPoints");
  for (const auto& prof : v.profiles) {
    bool at17 = !prof.place.is_real && prof.place.p == 17;
    if (at17) {
      rep.profile_17_is_half_exhaustive =
          prof.exhaustive && prof.values == std::set<InvHalf>{1};
      require(rep.profile_17_is_half_exhaustive,
              "expected exhaustive invariant profile {1/2} at 17");
    } else {
      bool zero = prof.exhaustive && prof.values == std::set<InvHalf>{0};
      if (!zero) {
        std::ostringstream os;
        os << "expected exhaustive profile {0} at " << prof.place.str();
        rep.mismatches.push_back(os.str());
      }
    }
  }
  rep.other_profiles_zero = true;
  for (const auto& m : rep.mismatches)
    if (m.find("expected exhaustive profile {0}") == 0) rep.other_profiles_zero = false;

  rep.match = rep.mismatches.empty();
  return rep;
}

ConstantFamilyReport verify_constant_family(
    const std::vector<std::pair<long, long>>& samples) {
  ConstantFamilyReport rep;
  for (auto [c1, c2] : samples) {
    ConstantFamilyReport::Row row{c1, c2, false, true, true, 0, true};
    Int c1i = c1, c2i = c2;
    Surface x = Surface::from_integers(
        {Int(1), c1i, c2i, -c1i * c1i * c2i * c2i});
    LocalSolubility ls = everywhere_locally_soluble(x);
    row.locally_soluble = ls.result;
    if (!row.locally_soluble) {
      rep.rows.push_back(row);
      continue;
    }
    ++rep.soluble_count;
    Verdict v = compute_verdict(x);
    for (const auto& prof : v.profiles) {
      if (prof.values.size() > 1) row.profiles_singletons = false;
      if (!prof.exhaustive) row.all_exhaustive = false;
      if (prof.values.size() == 1) row.half_sum += *prof.values.begin();
    }
    row.half_sum %= 2;
    row.ok = row.profiles_singletons && row.all_exhaustive && row.half_sum == 0;
    if (!row.ok) {
      rep.match = false;
      std::ostringstream os;
      os << "family member (c1,c2)=(" << c1 << "," << c2
         << "): expected constant zero profiles, got verdict " << v.kind_str();
      rep.mismatches.push_back(os.str());
    }
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace dq
