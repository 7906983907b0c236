#include "dq/localpoints.hpp"

#include <algorithm>
#include <climits>

#include "dq/ffield.hpp"

namespace dq {

namespace {
constexpr int kInf = INT_MAX / 4;
}

PadicSolver::PadicSolver(std::array<Int, 4> a, Int p) : a_(std::move(a)), p_(std::move(p)) {
  vp4_ = static_cast<int>(valuation(Rat(4), p_));
  vp6_ = static_cast<int>(valuation(Rat(6), p_));
  kmax_ = 2 * (vp4_ + 3) + 2;
  ppow_.push_back(1);
}

const Int& PadicSolver::ppow(int k) {
  while (static_cast<int>(ppow_.size()) <= k) ppow_.push_back(ppow_.back() * p_);
  return ppow_[k];
}

long PadicSolver::vp(const Int& x) const {
  if (x == 0) return kInf;
  long v = 0;
  Int t = x;
  while (t % p_ == 0) {
    t /= p_;
    ++v;
  }
  return v;
}

int PadicSolver::term_uncertainty(const Node& n, int i, const Int& coeff,
                                  int degree) const {
  if (coeff == 0) return kInf;
  int va = static_cast<int>(valuation(Rat(coeff), p_));
  int k = n.k[i];
  long vc = vp(n.c[i]);
  if (vc >= k) {
    // no known nonzero digits: term = coeff * (p^k t)^degree
    return va + degree * k;
  }
  // binomial tail of coeff*(c + p^k t)^degree
  int best = kInf;
  for (int j = 1; j <= degree; ++j) {
    Int binom = 1;
    for (int t = 0; t < j; ++t) binom = binom * (degree - t) / (t + 1);
    int vb = static_cast<int>(valuation(Rat(binom), p_));
    int cand = va + vb + static_cast<int>(vc) * (degree - j) + k * j;
    best = std::min(best, cand);
  }
  return best;
}

int PadicSolver::form_uncertainty(const Node& n, const std::array<Int, 4>& coeffs,
                                  int degree) const {
  int m = kInf;
  for (int i = 0; i < 4; ++i)
    m = std::min(m, term_uncertainty(n, i, coeffs[i], degree));
  return m;
}

Int PadicSolver::eval_quartic(const std::array<Int, 4>& x) const {
  Int s = 0;
  for (int i = 0; i < 4; ++i) {
    Int t = x[i] * x[i];
    s += a_[i] * t * t;
  }
  return s;
}

bool PadicSolver::possibly_primitive(const Node& n) const {
  for (int i = 0; i < 4; ++i) {
    if (n.k[i] == 0) return true;
    if (n.c[i] % p_ != 0) return true;
  }
  return false;
}

std::optional<Int> PadicSolver::determined_form_value(
    const Node& n, const std::array<Int, 4>& coeffs, int degree,
    int margin) const {
  Int v = 0;
  for (int i = 0; i < 4; ++i) {
    Int t = 1;
    for (int d = 0; d < degree; ++d) t *= n.c[i];
    v += coeffs[i] * t;
  }
  int unc = form_uncertainty(n, coeffs, degree);
  if (unc >= kInf / 2) return v;  // exact
  long val = vp(v);
  if (val + margin <= unc) return v;
  return std::nullopt;
}

PadicPoint PadicSolver::materialize(const Region& r) const {
  PadicPoint pt;
  pt.p = p_;
  Int mod = 1;
  for (int i = 0; i < r.level; ++i) mod *= p_;
  for (int i = 0; i < 4; ++i) pt.coords[i] = mod_reduce(r.node.c[i], mod);
  pt.precision = r.level;
  pt.primitive = true;
  pt.smooth_index = r.smooth_index;
  return pt;
}

std::optional<PadicPoint> PadicSolver::walk(
    Node n, int target, const std::function<VisitAction(const Region&)>* cb,
    int max_target, bool* all_resolved) {
  if (!possibly_primitive(n)) return std::nullopt;

  // branch on further digits while the undetermined tails reach below target
  for (int i = 0; i < 4; ++i) {
    if (term_uncertainty(n, i, a_[i], 4) < target) {
      Node child = n;
      ++child.k[i];
      const Int step = ppow(n.k[i]);
      for (Int d = 0; d < p_; ++d) {
        child.c[i] = n.c[i] + d * step;
        auto found = walk(child, target, cb, max_target, all_resolved);
        if (found) return found;
      }
      return std::nullopt;
    }
  }

  const int fd = form_uncertainty(n, a_, 4);
  const Int fval = eval_quartic(n.c);
  const long vf = vp(fval);
  if (vf < fd) return std::nullopt;  // F nonzero on every completion
  const int level = static_cast<int>(std::min<long>(vf, fd));

  // strong Hensel acceptance through a coordinate with determined valuation
  int accept_index = -1;
  for (int i = 0; i < 4; ++i) {
    if (a_[i] == 0) continue;
    long vc = vp(n.c[i]);
    if (vc >= n.k[i]) continue;  // valuation not pinned down yet
    long e = vp4_ + valuation(Rat(a_[i]), p_) + 3 * vc;
    if (level >= 2 * e + 1 && level >= e + n.k[i]) {
      accept_index = i;
      break;
    }
  }

  if (accept_index >= 0) {
    Region r{n, accept_index, level};
    if (cb == nullptr) return materialize(r);
    if ((*cb)(r) == VisitAction::Stop) return std::nullopt;
    // caller wants more precision inside this certified region
  }

  if (target > (cb ? max_target : kmax_)) {
    if (cb && accept_index >= 0 && all_resolved) *all_resolved = false;
    return std::nullopt;
  }
  return walk(n, std::max(target, level) + 1, cb, max_target, all_resolved);
}

PadicSolver::Node PadicSolver::chart_root(int i) const {
  Node n{{0, 0, 0, 0}, {0, 0, 0, 0}};
  n.c[i] = 1;
  n.k[i] = kPinned;
  for (int j = 0; j < i; ++j) n.k[j] = 1;  // earlier coordinates divisible by p
  return n;
}

PadicSolver::Node PadicSolver::disk_root(const std::array<Int, 4>& residue) const {
  int u = -1;
  for (int i = 0; i < 4 && u < 0; ++i)
    if (mod_reduce(residue[i], p_) != 0) u = i;
  if (u < 0) throw std::invalid_argument("disk_root: residue point not primitive");
  Int lam = mod_inverse(residue[u], p_);
  Node n{{0, 0, 0, 0}, {1, 1, 1, 1}};
  for (int i = 0; i < 4; ++i) n.c[i] = mod_reduce(residue[i] * lam, p_);
  n.c[u] = 1;
  n.k[u] = kPinned;
  return n;
}

std::optional<PadicPoint> PadicSolver::find_point() {
  for (int i = 0; i < 4; ++i) {
    auto found = walk(chart_root(i), 1, nullptr, 0, nullptr);
    if (found) return found;
  }
  return std::nullopt;
}

std::optional<PadicPoint> PadicSolver::find_in_disk(const std::array<Int, 4>& residue) {
  return walk(disk_root(residue), 1, nullptr, 0, nullptr);
}

bool PadicSolver::visit_regions(const std::function<VisitAction(const Region&)>& cb,
                                int max_target) {
  bool all_resolved = true;
  for (int i = 0; i < 4; ++i) walk(chart_root(i), 1, &cb, max_target, &all_resolved);
  return all_resolved;
}

bool PadicSolver::visit_regions_from(const std::array<Int, 4>& residue,
                                     const std::function<VisitAction(const Region&)>& cb,
                                     int max_target) {
  bool all_resolved = true;
  walk(disk_root(residue), 1, &cb, max_target, &all_resolved);
  return all_resolved;
}

bool PadicSolver::visit_regions_from_node(const Node& root,
                                          const std::function<VisitAction(const Region&)>& cb,
                                          int max_target) {
  bool all_resolved = true;
  walk(root, 1, &cb, max_target, &all_resolved);
  return all_resolved;
}

bool real_soluble(const Surface& x) {
  bool pos = false, neg = false;
  for (const auto& ai : x.a) (ai > 0 ? pos : neg) = true;
  return pos && neg;
}

SolubilityCertificate qp_soluble(const Surface& x, const Int& p) {
  PadicSolver solver(x.a, p);
  SolubilityCertificate cert;
  cert.search_depth = solver.completeness_depth();
  auto found = solver.find_point();
  cert.soluble = found.has_value();
  cert.witness = found;
  return cert;
}

std::vector<Place> LocalSolubility::failing_places() const {
  std::vector<Place> out;
  for (const auto& [pl, chk] : witnesses)
    if (!chk.soluble) out.push_back(pl);
  return out;
}

LocalSolubility everywhere_locally_soluble(const Surface& x) {
  LocalSolubility ls;
  ls.result = true;
  auto record = [&](const Place& pl, PlaceCheck chk) {
    if (!chk.soluble) ls.result = false;
    ls.witnesses.emplace(pl, std::move(chk));
  };

  PlaceCheck real;
  real.soluble = real_soluble(x);
  real.note = "sign criterion";
  record(Place::real(), std::move(real));

  std::vector<Int> ps = {2, 3, 5, 7, 11, 13, 17, 19};
  for (const Int& q : bad_primes(x))
    if (q > 19) ps.push_back(q);
  for (const Int& q : ps) {
    PlaceCheck chk;
    chk.certificate = qp_soluble(x, q);
    chk.soluble = chk.certificate->soluble;
    record(Place::prime(q), std::move(chk));
  }
  // Good reduction at p >= 23 needs no search: a smooth quartic surface over
  // F_p has at least p^2 - 21p + 1 > 0 points by the Weil bounds, all smooth,
  // so Hensel lifting applies. Recorded once as a blanket entry.
  ls.witnesses.emplace(
      Place::prime(-1),
      PlaceCheck{true, std::nullopt,
                 "all remaining places: good reduction for p >= 23, soluble by "
                 "the Weil bound and Hensel lifting"});
  return ls;
}

PadicPoint lift_residue_point(const Surface& x, const Int& p,
                              const std::array<long, 4>& residue, int k) {
  if (p == 2) throw std::invalid_argument("lift_residue_point: p must be odd");
  std::array<Int, 4> c;
  for (int i = 0; i < 4; ++i) c[i] = mod_reduce(residue[i], p);
  // smooth coordinate: 4 a_i c_i^3 a unit
  int s = -1;
  for (int i = 0; i < 4; ++i)
    if (x.a[i] % p != 0 && c[i] % p != 0) {
      s = i;
      break;
    }
  if (s < 0) throw NonSmoothResidue("lift_residue_point: all partials vanish mod p");

  Int mod = pow_int(p, static_cast<unsigned long>(k));
  auto F = [&](const std::array<Int, 4>& v) {
    Int r = 0;
    for (int i = 0; i < 4; ++i) {
      Int t = v[i] * v[i];
      r += x.a[i] * t * t;
    }
    return mod_reduce(r, mod);
  };
  Int fs = mod_reduce(4 * x.a[s] * c[s] * c[s] * c[s], mod);
  Int fs_inv = mod_inverse(fs, mod);
  for (int iter = 0; iter < 2 * k + 4; ++iter) {
    Int fv = F(c);
    if (fv == 0) break;
    c[s] = mod_reduce(c[s] - fv * fs_inv, mod);
    fs = mod_reduce(4 * x.a[s] * c[s] * c[s] * c[s], mod);
    fs_inv = mod_inverse(fs, mod);
  }
  if (F(c) != 0) throw std::runtime_error("lift_residue_point: Newton failed to converge");
  PadicPoint pt;
  pt.p = p;
  pt.coords = c;
  pt.precision = k;
  pt.primitive = true;
  pt.smooth_index = s;
  return pt;
}

ResidueDisks residue_disks(const Surface& x, const Int& p) {
  if (p == 2 || p < 3) throw std::invalid_argument("residue_disks: p must be odd");
  long pl = static_cast<long>(p);
  std::array<long, 4> ar;
  for (int i = 0; i < 4; ++i) ar[i] = static_cast<long>(mod_reduce(x.a[i], p));
  ResidueDisks rd;
  PadicSolver solver(x.a, p);
  for (const auto& pt : surface_points(pl, ar, false)) {
    bool smooth = false;
    for (int i = 0; i < 4; ++i)
      if (ar[i] != 0 && pt[i] != 0) smooth = true;
    if (smooth) {
      rd.smooth.push_back(pt);
    } else {
      rd.singular.push_back(pt);
      std::array<Int, 4> c;
      for (int i = 0; i < 4; ++i) c[i] = pt[i];
      rd.singular_empty[pt] = !solver.find_in_disk(c).has_value();
    }
  }
  return rd;
}

}  // namespace dq
