#include "dq/analysis.hpp"

#include <sstream>

#include "json.hpp"

namespace dq {

AnalysisDocument analyze(const std::array<Int, 4>& input, const AnalysisOptions& opt) {
  AnalysisDocument doc;
  doc.input = input;
  std::array<Rat, 4> raw;
  for (int i = 0; i < 4; ++i) raw[i] = Rat(input[i]);
  doc.surface = Surface::normalize(raw);
  ClassSubgroup h = h_group(doc.surface.a);
  doc.h_order = h.order();
  doc.h_meets_235 = meets_235(h);
  doc.theorem = theorem_conditions(doc.surface);
  VerdictOptions vopt;
  vopt.height_bound = opt.height_bound;
  vopt.precision_cap = opt.precision_cap;
  doc.verdict = compute_verdict(doc.surface, vopt);
  return doc;
}

namespace {

using ordered_json = nlohmann::ordered_json;

std::string half_str(InvHalf v) { return v == 0 ? "0" : "1/2"; }

ordered_json place_key(const Place& pl) { return pl.str(); }

ordered_json theta_json(const FactoredRational& fr) {
  ordered_json j;
  j["sign"] = fr.sign;
  ordered_json fac = ordered_json::object();
  for (const auto& [p, e] : fr.factors) fac[p.str()] = e;
  j["factors"] = fac;
  j["value"] = fr.reconstruct().str();
  return j;
}

ordered_json profiles_json(const Verdict& v) {
  ordered_json arr = ordered_json::array();
  for (const auto& prof : v.profiles) {
    ordered_json p;
    p["place"] = place_key(prof.place);
    ordered_json vals = ordered_json::array();
    for (InvHalf h : prof.values) vals.push_back(half_str(h));
    p["values"] = vals;
    p["exhaustive"] = prof.exhaustive;
    p["method"] = prof.method;
    arr.push_back(p);
  }
  return arr;
}

}  // namespace

std::string to_json(const AnalysisDocument& doc) {
  ordered_json j;
  {
    ordered_json s;
    ordered_json in = ordered_json::array(), nrm = ordered_json::array();
    for (const auto& c : doc.input) in.push_back(c.str());
    for (const auto& c : doc.surface.a) nrm.push_back(c.str());
    s["input"] = in;
    s["normalized"] = nrm;
    s["theta"] = theta_json(doc.surface.theta);
    j["surface"] = s;
  }
  {
    ordered_json h;
    h["order"] = doc.h_order;
    h["meets_235"] = doc.h_meets_235;
    j["h_group"] = h;
  }
  {
    ordered_json l;
    const auto& locals = doc.verdict.locals;
    l["result"] = locals ? locals->result : false;
    ordered_json w = ordered_json::object();
    if (locals) {
      for (const auto& [pl, chk] : locals->witnesses) {
        ordered_json e;
        e["soluble"] = chk.soluble;
        if (chk.certificate) {
          e["search_depth"] = chk.certificate->search_depth;
          if (chk.certificate->witness) {
            const auto& pt = *chk.certificate->witness;
            ordered_json c = ordered_json::array();
            for (const auto& x : pt.coords) c.push_back(x.str());
            e["witness"] = c;
            e["precision"] = pt.precision;
          }
        }
        if (!chk.note.empty()) e["note"] = chk.note;
        std::string key = pl.is_real ? "real" : (pl.p < 0 ? "other" : pl.p.str());
        w[key] = e;
      }
    }
    l["witnesses"] = w;
    j["local"] = l;
  }
  {
    ordered_json a;
    if (doc.verdict.algebra) {
      const auto& alg = *doc.verdict.algebra;
      a["theta"] = theta_json(alg.theta);
      ordered_json f = ordered_json::array(), sp = ordered_json::array();
      for (const auto& c : alg.f.b) f.push_back(c.str());
      for (const auto& c : alg.source_point.y) sp.push_back(c.str());
      a["f"] = f;
      a["source_point"] = sp;
      a["trivial"] = alg.trivial;
    }
    j["algebra"] = a;
  }
  j["profiles"] = profiles_json(doc.verdict);
  {
    ordered_json v;
    v["kind"] = doc.verdict.kind_str();
    v["vacuous"] = doc.verdict.vacuous;
    if (doc.verdict.nonconstant_place)
      v["nonconstant_place"] = place_key(*doc.verdict.nonconstant_place);
    v["reason"] = doc.verdict.reason;
    j["verdict"] = v;
  }
  {
    ordered_json t;
    t["els"] = doc.theorem.els;
    t["h_order"] = doc.theorem.h_order;
    t["meets_235"] = doc.theorem.meets_235;
    ordered_json c4 = ordered_json::array();
    for (const auto& w : doc.theorem.condition4) {
      ordered_json e;
      e["p"] = w.p.str();
      e["index"] = w.index;
      e["odd_power"] = w.odd_power;
      e["special_ok"] = w.special_ok;
      c4.push_back(e);
    }
    t["condition4"] = c4;
    t["has_qualifying_prime"] = doc.theorem.has_qualifying_prime;
    if (doc.theorem.conclusion) t["conclusion"] = *doc.theorem.conclusion;
    else t["conclusion"] = nullptr;
    j["theorem"] = t;
  }
  return j.dump(2) + "\n";
}

std::string to_text(const AnalysisDocument& doc) {
  std::ostringstream os;
  os << "surface: input " << "(" << doc.input[0] << ", " << doc.input[1] << ", "
     << doc.input[2] << ", " << doc.input[3] << ")"
     << " normalized " << doc.surface.str() << "\n";
  os << "theta:   " << doc.surface.theta.str() << "\n";
  os << "H:       order " << doc.h_order << ", meets {2,3,5}: "
     << (doc.h_meets_235 ? "yes" : "no") << "\n";
  const auto& locals = doc.verdict.locals;
  os << "local:   everywhere locally soluble: "
     << (locals && locals->result ? "yes" : "no") << "\n";
  if (locals)
    for (const auto& [pl, chk] : locals->witnesses) {
      std::string key = pl.is_real ? "real" : (pl.p < 0 ? "other" : pl.p.str());
      os << "         " << key << ": " << (chk.soluble ? "soluble" : "insoluble");
      if (!chk.note.empty()) os << " (" << chk.note << ")";
      os << "\n";
    }
  if (doc.verdict.algebra) {
    const auto& alg = *doc.verdict.algebra;
    os << "algebra: theta = " << alg.theta.str() << ", f = (" << alg.f.b[0]
       << ", " << alg.f.b[1] << ", " << alg.f.b[2] << ", " << alg.f.b[3]
       << ") from P = (" << alg.source_point.y[0] << ", "
       << alg.source_point.y[1] << ", " << alg.source_point.y[2] << ", "
       << alg.source_point.y[3] << ")"
       << (alg.trivial ? " [trivial]" : "") << "\n";
  }
  for (const auto& prof : doc.verdict.profiles) {
    os << "profile  " << prof.place.str() << ": {";
    bool first = true;
    for (InvHalf h : prof.values) {
      if (!first) os << ", ";
      first = false;
      os << half_str(h);
    }
    os << "}" << (prof.exhaustive ? " exhaustive" : " partial") << " — "
       << prof.method << "\n";
  }
  os << "verdict: " << doc.verdict.kind_str();
  if (!doc.verdict.reason.empty()) os << " (" << doc.verdict.reason << ")";
  os << "\n";
  os << "theorem: els=" << (doc.theorem.els ? "yes" : "no")
     << " |H|=" << doc.theorem.h_order
     << " meets235=" << (doc.theorem.meets_235 ? "yes" : "no")
     << " qualifying-prime=" << (doc.theorem.has_qualifying_prime ? "yes" : "no")
     << "\n";
  if (doc.theorem.conclusion) os << "         " << *doc.theorem.conclusion << "\n";
  return os.str();
}

}  // namespace dq
