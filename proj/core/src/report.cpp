#include "borelgin/report.hpp"

#include <sstream>

#include "json.hpp"

#include "borelgin/errors.hpp"

namespace borelgin {

using Json = nlohmann::ordered_json;

Invariants compute_invariants(const MonomialIdeal& g) {
  if (!g.is_strongly_stable()) throw ComputationError("Gin is not strongly stable");
  Invariants inv;
  HilbertSeries hs = hilbert_series(g);
  inv.dimension = hs.dimension();
  inv.degree = hs.degree();
  inv.saturated = g.is_saturated();
  if (g.is_zero()) return inv;
  inv.D = g.D();
  inv.M = g.M();
  inv.regularity = g.regularity();
  inv.ek_regularity = eliahou_kervaire(g).regularity;
  inv.sat_degree = g.sat_degree();
  inv.alpha = g.min_generator_degree();
  inv.cm = *inv.D == *inv.M;
  inv.spor = g.spor_set();
  return inv;
}

namespace {

template <class T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json monomials(const std::vector<Monomial>& ms, const std::vector<std::string>& names) {
  Json a = Json::array();
  for (const Monomial& m : ms) a.push_back(m.to_string(names));
  return a;
}

Json polynomials(const std::vector<Polynomial>& ps, const std::vector<std::string>& names) {
  Json a = Json::array();
  for (const Polynomial& p : ps) a.push_back(p.to_string(names));
  return a;
}

Json to_json(const HilbertTable& t) {
  Json j;
  j["from"] = 0;
  j["to"] = t.t_max();
  j["values"] = t.values();
  j["delta1"] = t.delta(1);
  j["delta2"] = t.delta(2);
  j["dimension"] = opt(t.dimension());
  j["degree"] = opt(t.degree());
  j["h_vector"] = opt(t.h_vector());
  j["alpha"] = opt(t.alpha());
  j["exact"] = t.exact();
  return j;
}

Json to_json(const Invariants& inv, const std::vector<std::string>& names) {
  Json j;
  j["dim"] = inv.dimension;
  j["degree"] = inv.degree;
  j["D"] = opt(inv.D);
  j["M"] = opt(inv.M);
  j["reg"] = opt(inv.regularity);
  j["ek_reg"] = opt(inv.ek_regularity);
  j["satdeg"] = opt(inv.sat_degree);
  j["alpha"] = opt(inv.alpha);
  j["saturated"] = inv.saturated;
  j["cm"] = opt(inv.cm);
  j["spor"] = monomials(inv.spor, names);
  return j;
}

Json to_json(const GinResult& g, const std::vector<std::string>& names) {
  Json j;
  j["generators"] = monomials(g.ideal.generators(), names);
  j["trials"] = g.trials;
  j["agreed"] = g.agreed;
  j["borel_verified"] = g.borel_verified;
  j["seeds"] = g.seeds;
  return j;
}

Json to_json(const GrowthReport& r, const std::vector<std::string>& names) {
  Json j;
  j["label"] = r.label;
  j["pipeline"] = r.pipeline;
  j["applicable"] = r.applicable;
  j["reason"] = r.reason;
  j["d"] = opt(r.d);
  j["s"] = opt(r.s);
  j["r2"] = opt(r.r2);
  j["r3"] = opt(r.r3);
  j["truncation"] = polynomials(r.truncation, names);
  j["saturated"] = opt(r.saturated);
  j["d_regular"] = opt(r.d_regular);
  j["truncation_reg"] = opt(r.truncation_regularity);
  j["scheme_dim"] = opt(r.scheme_dimension);
  j["scheme_degree"] = opt(r.scheme_degree);
  j["injective"] = opt(r.injective);
  j["wlp"] = opt(r.wlp);
  j["common_factor"] = r.common_factor ? Json(r.common_factor->to_string(names)) : Json(nullptr);
  j["common_factor_degree"] = r.common_factor ? Json(r.common_factor->degree()) : Json(nullptr);
  j["decreasing_criterion"] = opt(r.decreasing_criterion);
  j["strictly_decreasing"] = opt(r.strictly_decreasing);
  j["gin_generic"] = r.gin_generic;
  j["seed"] = r.seed;
  j["violations"] = r.violations;
  j["warnings"] = r.warnings;
  return j;
}

Json to_json(const ReductionProfile& p) {
  Json j;
  j["s"] = p.s;
  j["value"] = opt(p.value);
  j["crosscheck"] = opt(p.crosscheck);
  j["certified"] = p.certified;
  j["section_seed"] = p.seed;
  j["attempts"] = p.attempts;
  j["warning"] = p.warning;
  return j;
}

Json to_json(const WlpResult& w) {
  Json j;
  j["holds"] = w.holds;
  j["conclusive"] = w.conclusive;
  j["failing_degrees"] = w.failing_degrees;
  j["socle_degree"] = w.socle_degree;
  j["seeds"] = w.seeds;
  return j;
}

Json to_json(const TruncationSummary& t, const std::vector<std::string>& names) {
  Json j;
  j["d"] = t.d;
  j["generators"] = polynomials(t.generators, names);
  j["count"] = t.generators.size();
  j["saturated"] = t.saturated;
  j["reg"] = t.regularity;
  j["d_regular"] = t.d_regular;
  j["dim"] = t.dimension;
  j["degree"] = t.degree;
  return j;
}

Json to_json(const PointsSummary& p) {
  Json j;
  j["count"] = p.count;
  j["coordinates"] = p.coordinates;
  j["h_vector"] = p.h_vector;
  j["upp"] = opt(p.upp);
  return j;
}

template <class T, class... Extra>
Json section(const std::optional<T>& v, const Extra&... extra) {
  return v ? to_json(*v, extra...) : Json(nullptr);
}

Json to_json(const Report& r) {
  Json j;
  j["label"] = r.label;
  j["verb"] = r.verb;
  j["field"] = r.field.to_string();
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["invariants"] = section(r.invariants, r.variables);
  j["hilbert"] = section(r.hilbert);
  j["gin"] = section(r.gin, r.variables);
  j["growth"] = section(r.growth, r.variables);
  j["reduction"] = section(r.reduction);
  j["wlp"] = section(r.wlp);
  j["truncation"] = section(r.truncation, r.variables);
  j["points"] = section(r.points);
  return j;
}

bool is_scalar_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const Json& e : j) {
    if (e.is_structured()) return false;
  }
  return true;
}

void flatten(const Json& j, const std::string& path, std::ostringstream& out) {
  if (j.is_null()) return;
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
    }
    return;
  }
  if (j.is_array() && !is_scalar_array(j)) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
    return;
  }
  out << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

}  // namespace

std::string emit_json(const Report& report, int indent) { return to_json(report).dump(indent); }

std::string emit_text(const Report& report) {
  std::ostringstream out;
  flatten(to_json(report), "", out);
  return out.str();
}

std::string emit_json(const HilbertTable& table, int indent) { return to_json(table).dump(indent); }

std::string emit_json(const Invariants& inv, const std::vector<std::string>& names, int indent) {
  return to_json(inv, names).dump(indent);
}

std::string emit_json(const GrowthReport& growth, const std::vector<std::string>& names, int indent) {
  return to_json(growth, names).dump(indent);
}

}  // namespace borelgin
