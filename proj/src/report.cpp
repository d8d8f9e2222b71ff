#include "osbc/report.hpp"

#include <algorithm>

#include "osbc/error.hpp"
#include "osbc/tame.hpp"

namespace osbc {

namespace {

Json labels_of(const StratumPoset& p, HyperplaneSet hs) {
  Json a = Json::array();
  for (auto h : members(hs)) a.push_back(p.forms()[h].label);
  return a;
}

Json color_json(const std::optional<Color>& c) { return c ? Json(color_name(*c)) : Json(nullptr); }

Json strata_json(const StratumLattice& L, const Bicomplex* bc) {
  Json a = Json::array();
  for (std::size_t s = 0; s < L.size(); ++s) {
    const auto& n = L.node(s);
    Json o;
    o["label"] = n.label;
    o["codim"] = n.codim;
    o["irreducible"] = n.irreducible;
    o["color"] = color_json(n.irreducible ? n.color : L.effective_color(s));
    if (bc) o["dims"] = bc->dims(s);
    a.push_back(std::move(o));
  }
  return a;
}

Json witness_json(const SequenceWitness& w) {
  Json o;
  o[w.row ? "row" : "column"] = w.index;
  o["dims"] = w.dims;
  o["homology"] = w.homology;
  o["sequence"] = w.describe();
  return o;
}

void flatten(const Json& j, const std::string& path, std::string& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (j.is_array()) {
    if (!j.empty() && std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); })) {
      out += path;
      for (const auto& x : j) out += "\t" + (x.is_string() ? x.get<std::string>() : x.dump());
      out += "\n";
      return;
    }
    for (std::size_t k = 0; k < j.size(); ++k) flatten(j[k], path + "." + std::to_string(k), out);
  } else {
    out += path + "\t" + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
  }
}

}  // namespace

Json analyze_report(const BiArrangement& b, std::size_t cap) {
  const auto& p = b.poset();
  Json doc;
  doc["schema"] = 1;
  doc["command"] = "analyze";
  doc["ambient_dim"] = p.ambient_dim();
  Json hs = Json::array();
  for (const auto& f : p.forms()) {
    Json o;
    o["label"] = f.label;
    o["side"] = f.side == Color::Lambda ? "L" : "M";
    Json c = Json::array();
    for (const auto& q : f.coefficients) c.push_back(to_string(q));
    o["coefficients"] = std::move(c);
    hs.push_back(std::move(o));
  }
  doc["hyperplanes"] = std::move(hs);
  doc["strata_count"] = p.size();
  Json strata = Json::array();
  for (std::size_t s = 0; s < p.size(); ++s) {
    Json o;
    o["label"] = p.label(s);
    o["codim"] = p.stratum(s).codim;
    o["irreducible"] = p.is_irreducible(s);
    Json f = Json::array();
    for (auto x : p.factors(s)) f.push_back(p.label(x));
    o["factors"] = std::move(f);
    o["color"] = color_json(b.color(s));
    Json up = Json::array();
    for (auto t : p.up(s)) up.push_back(p.label(t));
    o["covered_by"] = std::move(up);
    strata.push_back(std::move(o));
  }
  doc["strata"] = std::move(strata);
  Json cs = Json::array();
  for (const auto& c : circuits(b, cap)) {
    Json o;
    o["support"] = labels_of(p, c.support);
    o["stratum"] = p.label(p.stratum_of(c.support));
    o["color"] = color_json(b.color(p.stratum_of(c.support)));
    cs.push_back(std::move(o));
  }
  doc["circuits"] = std::move(cs);
  Json irr = Json::array();
  for (std::size_t s = 1; s < p.size(); ++s)
    if (p.is_irreducible(s) && p.stratum(s).codim >= 2) irr.push_back(p.label(s));
  doc["irreducible_codim_ge_2"] = std::move(irr);
  return doc;
}

Json oscomplex_report(const Bicomplex& bc) {
  const auto& L = bc.lattice();
  Json doc;
  doc["schema"] = 1;
  doc["command"] = "oscomplex";
  doc["strata"] = strata_json(L, &bc);
  Json edges = Json::array();
  for (const auto& e : bc.all_maps()) {
    Json o;
    o["lower"] = L.node(e.lower).label;
    o["upper"] = L.node(e.upper).label;
    Json r1 = Json::array(), r2 = Json::array();
    for (const auto& m : e.d1) r1.push_back(rank(m));
    for (const auto& m : e.d2) r2.push_back(rank(m));
    o["rank_dprime"] = std::move(r1);
    o["rank_ddouble"] = std::move(r2);
    edges.push_back(std::move(o));
  }
  doc["covers"] = std::move(edges);
  auto v = verify_bicomplex_identities(bc);
  doc["identities"] = v ? Json(v->describe()) : Json("ok");
  return doc;
}

Json check_report(const BiArrangement& b, const Bicomplex& bc, std::size_t cap) {
  Json doc;
  doc["schema"] = 1;
  doc["command"] = "check";
  doc["kunneth"] = true;
  auto tame = check_tameness(b, cap);
  Json t;
  t["tame"] = tame.tame;
  Json ts = Json::array();
  for (const auto& s : tame.strata) {
    Json o;
    o["stratum"] = s.label;
    o["tame"] = s.tame;
    o["witness"] = s.witness ? Json(b.forms()[*s.witness].label) : Json(nullptr);
    ts.push_back(std::move(o));
  }
  t["strata"] = std::move(ts);
  doc["tameness"] = std::move(t);

  auto ex = check_exactness(bc);
  Json e;
  e["exact"] = ex.exact;
  Json es = Json::array();
  for (const auto& s : ex.strata) {
    Json o;
    o["stratum"] = s.label;
    o["color"] = color_json(s.color);
    o["exact"] = s.exact;
    o["derived"] = s.derived;
    if (s.failure) o["witness"] = witness_json(*s.failure);
    es.push_back(std::move(o));
  }
  e["strata"] = std::move(es);
  if (auto f = ex.first_failure()) {
    Json o;
    o["stratum"] = f->label;
    if (f->failure) o["witness"] = witness_json(*f->failure);
    e["first_failure"] = std::move(o);
  }
  doc["exactness"] = std::move(e);
  auto v = verify_bicomplex_identities(bc);
  doc["identities"] = v ? Json(v->describe()) : Json("ok");
  return doc;
}

Json projective_report(const ProjectiveBiArrangement& pb) {
  Json o;
  o["n"] = pb.n;
  o["origin"] = pb.arrangement.poset().label(pb.origin);
  o["b_lambda_defined"] = pb.lambda_defined;
  o["b_mu_defined"] = pb.mu_defined;
  o["deduplicated"] = pb.deduplicated;
  return o;
}

Json weight_table_report(const WeightTable& table, const std::string& method) {
  Json o;
  o["method"] = method;
  Json rows = Json::array();
  for (std::size_t r = 0; r < table.size(); ++r) {
    Json row;
    row["r"] = r;
    Json w;
    for (std::size_t k = 0; k < table[r].size(); ++k) w["gr_" + std::to_string(2 * k)] = table[r][k];
    row["weights"] = std::move(w);
    rows.push_back(std::move(row));
  }
  o["table"] = std::move(rows);
  return o;
}

Json blowup_report(const AbstractStratifiedBiArrangement& start, const std::vector<BlowupStep>& steps,
                   bool trace) {
  Json doc;
  doc["schema"] = 1;
  doc["command"] = "blowup";
  doc["initial_irreducibles"] = start.lattice().irreducibles_of_codim_at_least(2).size();
  doc["steps_count"] = steps.size();
  Json ss = Json::array();
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const auto& st = steps[k];
    Json o;
    o["center"] = st.center;
    o["color"] = color_name(st.color);
    o["strata_count"] = st.result.complex.size();
    if (trace) o["strata"] = strata_json(st.result.lattice(), &st.result.complex);
    ss.push_back(std::move(o));
  }
  doc["steps"] = std::move(ss);
  const auto& last = steps.empty() ? start : steps.back().result;
  Json term = Json::array();
  for (const auto& [div, dims] : terminal_signature(last)) {
    Json o;
    o["divisors"] = div;
    o["dims"] = dims;
    term.push_back(std::move(o));
  }
  doc["terminal"] = std::move(term);
  doc["terminal_exact"] = check_exactness(last.complex).exact;
  return doc;
}

Json error_report(const std::string& kind, const std::string& message) {
  Json doc;
  doc["schema"] = 1;
  doc["error"] = {{"kind", kind}, {"message", message}};
  return doc;
}

std::string to_tsv(const Json& doc) {
  std::string out;
  flatten(doc, "", out);
  return out;
}

}  // namespace osbc
