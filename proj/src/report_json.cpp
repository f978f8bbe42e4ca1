#include "diffeocert/report_json.hpp"

#include <stdexcept>

namespace diffeocert {
namespace {

using nlohmann::json;

json rational_to_json(const Rational& r) { return format_rational(r); }
Rational rational_from_json(const json& j) { return parse_rational(j.get<std::string>()); }

json point_to_json(const std::vector<Rational>& p) {
  json out = json::array();
  for (const Rational& v : p) out.push_back(rational_to_json(v));
  return out;
}

std::vector<Rational> point_from_json(const json& j) {
  std::vector<Rational> out;
  for (const json& v : j) out.push_back(rational_from_json(v));
  return out;
}

json exponents_to_json(const ExponentVector& alpha) { return json(alpha); }
ExponentVector exponents_from_json(const json& j) { return j.get<ExponentVector>(); }

json exponent_list_to_json(const std::vector<ExponentVector>& list) {
  json out = json::array();
  for (const ExponentVector& alpha : list) out.push_back(exponents_to_json(alpha));
  return out;
}

std::vector<ExponentVector> exponent_list_from_json(const json& j) {
  std::vector<ExponentVector> out;
  for (const json& v : j) out.push_back(exponents_from_json(v));
  return out;
}

const char* nonvanishing_tag_name(NonvanishingTag tag) {
  switch (tag) {
    case NonvanishingTag::PositiveEverywhere: return "PositiveEverywhere";
    case NonvanishingTag::NegativeEverywhere: return "NegativeEverywhere";
    case NonvanishingTag::ZeroWitness: return "ZeroWitness";
    case NonvanishingTag::SignChangeWitness: return "SignChangeWitness";
    case NonvanishingTag::AssertedNonvanishing: return "AssertedNonvanishing";
    case NonvanishingTag::Unknown: return "Unknown";
  }
  throw std::logic_error("unreachable");
}

NonvanishingTag nonvanishing_tag_from(const std::string& name) {
  if (name == "PositiveEverywhere") return NonvanishingTag::PositiveEverywhere;
  if (name == "NegativeEverywhere") return NonvanishingTag::NegativeEverywhere;
  if (name == "ZeroWitness") return NonvanishingTag::ZeroWitness;
  if (name == "SignChangeWitness") return NonvanishingTag::SignChangeWitness;
  if (name == "AssertedNonvanishing") return NonvanishingTag::AssertedNonvanishing;
  if (name == "Unknown") return NonvanishingTag::Unknown;
  throw std::invalid_argument("bad nonvanishing tag: " + name);
}

const char* certificate_name(NonvanishingCertificate c) {
  switch (c) {
    case NonvanishingCertificate::EvenPositiveMonomials: return "even-positive-monomials";
    case NonvanishingCertificate::EvenNegativeMonomials: return "even-negative-monomials";
    case NonvanishingCertificate::SamplingAssertion: return "sampling-assertion";
  }
  throw std::logic_error("unreachable");
}

NonvanishingCertificate certificate_from(const std::string& name) {
  if (name == "even-positive-monomials") return NonvanishingCertificate::EvenPositiveMonomials;
  if (name == "even-negative-monomials") return NonvanishingCertificate::EvenNegativeMonomials;
  if (name == "sampling-assertion") return NonvanishingCertificate::SamplingAssertion;
  throw std::invalid_argument("bad certificate name: " + name);
}

const char* coercivity_tag_name(CoercivityTag tag) {
  switch (tag) {
    case CoercivityTag::Coercive: return "Coercive";
    case CoercivityTag::NotCoercive: return "NotCoercive";
    case CoercivityTag::Unknown: return "Unknown";
  }
  throw std::logic_error("unreachable");
}

CoercivityTag coercivity_tag_from(const std::string& name) {
  if (name == "Coercive") return CoercivityTag::Coercive;
  if (name == "NotCoercive") return CoercivityTag::NotCoercive;
  if (name == "Unknown") return CoercivityTag::Unknown;
  throw std::invalid_argument("bad coercivity tag: " + name);
}

const char* theorem_name(CoercivityTheorem t) {
  switch (t) {
    case CoercivityTheorem::Characterization: return "characterization";
    case CoercivityTheorem::Sufficient: return "sufficient-inequalities";
    case CoercivityTheorem::NecessaryViolation: return "necessary-violation";
    case CoercivityTheorem::None: return "none";
  }
  throw std::logic_error("unreachable");
}

CoercivityTheorem theorem_from(const std::string& name) {
  if (name == "characterization") return CoercivityTheorem::Characterization;
  if (name == "sufficient-inequalities") return CoercivityTheorem::Sufficient;
  if (name == "necessary-violation") return CoercivityTheorem::NecessaryViolation;
  if (name == "none") return CoercivityTheorem::None;
  throw std::invalid_argument("bad theorem name: " + name);
}

json gem_to_json(const GemAnalysis& g) {
  return json{{"vertices", exponent_list_to_json(g.vertices)},
              {"degenerate", exponent_list_to_json(g.degenerate)},
              {"remaining", exponent_list_to_json(g.remaining)},
              {"origin_is_vertex", g.origin_is_vertex}};
}

GemAnalysis gem_from_json(const json& j) {
  GemAnalysis g;
  g.vertices = exponent_list_from_json(j.at("vertices"));
  g.degenerate = exponent_list_from_json(j.at("degenerate"));
  g.remaining = exponent_list_from_json(j.at("remaining"));
  g.origin_is_vertex = j.at("origin_is_vertex").get<bool>();
  return g;
}

json conditions_to_json(const ConditionsReport& c) {
  json axis = json::array();
  for (const auto& v : c.c3_axis_vertices) {
    if (v)
      axis.push_back(exponents_to_json(*v));
    else
      axis.push_back(nullptr);
  }
  return json{{"c1_holds", c.c1_holds},
              {"c1_violations", exponent_list_to_json(c.c1_violations)},
              {"c2_holds", c.c2_holds},
              {"c2_violations", exponent_list_to_json(c.c2_violations)},
              {"c3_holds", c.c3_holds},
              {"c3_axis_vertices", axis},
              {"c3_missing_axes", c.c3_missing_axes}};
}

ConditionsReport conditions_from_json(const json& j) {
  ConditionsReport c;
  c.c1_holds = j.at("c1_holds").get<bool>();
  c.c1_violations = exponent_list_from_json(j.at("c1_violations"));
  c.c2_holds = j.at("c2_holds").get<bool>();
  c.c2_violations = exponent_list_from_json(j.at("c2_violations"));
  c.c3_holds = j.at("c3_holds").get<bool>();
  for (const json& v : j.at("c3_axis_vertices")) {
    if (v.is_null())
      c.c3_axis_vertices.push_back(std::nullopt);
    else
      c.c3_axis_vertices.push_back(exponents_from_json(v));
  }
  c.c3_missing_axes = j.at("c3_missing_axes").get<std::vector<int>>();
  return c;
}

json circuit_to_json(const CircuitWitness& w) {
  json lambdas = json::array();
  for (const Rational& l : w.lambdas) lambdas.push_back(rational_to_json(l));
  return json{{"alpha_star", exponents_to_json(w.alpha_star)},
              {"support", exponent_list_to_json(w.support)},
              {"lambdas", lambdas},
              {"power_exponent", w.power_exponent},
              {"power_form", rational_to_json(w.power_form)},
              {"float_hint", w.float_hint},
              {"weight", rational_to_json(w.weight)},
              {"inequality", w.inequality},
              {"satisfied", w.satisfied}};
}

CircuitWitness circuit_from_json(const json& j) {
  CircuitWitness w;
  w.alpha_star = exponents_from_json(j.at("alpha_star"));
  w.support = exponent_list_from_json(j.at("support"));
  for (const json& l : j.at("lambdas")) w.lambdas.push_back(rational_from_json(l));
  w.power_exponent = j.at("power_exponent").get<unsigned long long>();
  w.power_form = rational_from_json(j.at("power_form"));
  w.float_hint = j.at("float_hint").get<double>();
  w.weight = rational_from_json(j.at("weight"));
  w.inequality = j.at("inequality").get<std::string>();
  w.satisfied = j.at("satisfied").get<bool>();
  return w;
}

json coercivity_to_json(const CoercivityVerdict& v) {
  json circuits = json::array();
  for (const CircuitWitness& w : v.circuits) circuits.push_back(circuit_to_json(w));
  return json{{"tag", coercivity_tag_name(v.tag)},
              {"theorem", theorem_name(v.theorem)},
              {"gem", gem_to_json(v.gem)},
              {"conditions", conditions_to_json(v.conditions)},
              {"circuits", circuits},
              {"notes", v.notes}};
}

CoercivityVerdict coercivity_from_json(const json& j) {
  CoercivityVerdict v;
  v.tag = coercivity_tag_from(j.at("tag").get<std::string>());
  v.theorem = theorem_from(j.at("theorem").get<std::string>());
  v.gem = gem_from_json(j.at("gem"));
  v.conditions = conditions_from_json(j.at("conditions"));
  for (const json& w : j.at("circuits")) v.circuits.push_back(circuit_from_json(w));
  v.notes = j.at("notes").get<std::vector<std::string>>();
  return v;
}

json nonvanishing_to_json(const NonvanishingStatus& s) {
  json out{{"tag", nonvanishing_tag_name(s.tag)}, {"seed", s.seed}};
  if (s.witness) out["witness"] = point_to_json(*s.witness);
  if (s.witness_opposite) out["witness_opposite"] = point_to_json(*s.witness_opposite);
  if (s.certificate) out["certificate"] = certificate_name(*s.certificate);
  return out;
}

NonvanishingStatus nonvanishing_from_json(const json& j) {
  NonvanishingStatus s;
  s.tag = nonvanishing_tag_from(j.at("tag").get<std::string>());
  s.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("witness")) s.witness = point_from_json(j.at("witness"));
  if (j.contains("witness_opposite")) s.witness_opposite = point_from_json(j.at("witness_opposite"));
  if (j.contains("certificate")) s.certificate = certificate_from(j.at("certificate").get<std::string>());
  return s;
}

json matrix_to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (const auto& row : m.rows()) {
    json r = json::array();
    for (const Rational& v : row) r.push_back(rational_to_json(v));
    rows.push_back(r);
  }
  return rows;
}

RationalMatrix matrix_from_json(const json& j) {
  std::vector<std::vector<Rational>> rows;
  for (const json& r : j) {
    std::vector<Rational> row;
    for (const json& v : r) row.push_back(rational_from_json(v));
    rows.push_back(std::move(row));
  }
  return RationalMatrix(std::move(rows));
}

}  // namespace

std::string verdict_name(DiffeomorphismTag tag) {
  switch (tag) {
    case DiffeomorphismTag::Diffeomorphism: return "Diffeomorphism";
    case DiffeomorphismTag::NotDiffeomorphism: return "NotDiffeomorphism";
    case DiffeomorphismTag::Unknown: return "Unknown";
  }
  throw std::logic_error("unreachable");
}

namespace {
DiffeomorphismTag verdict_from(const std::string& name) {
  if (name == "Diffeomorphism") return DiffeomorphismTag::Diffeomorphism;
  if (name == "NotDiffeomorphism") return DiffeomorphismTag::NotDiffeomorphism;
  if (name == "Unknown") return DiffeomorphismTag::Unknown;
  throw std::invalid_argument("bad verdict name: " + name);
}
}  // namespace

nlohmann::json polynomial_to_json(const Polynomial& f) {
  json terms = json::array();
  for (const auto& [alpha, c] : f.terms())
    terms.push_back(json{{"alpha", exponents_to_json(alpha)}, {"coeff", rational_to_json(c)}});
  return json{{"dimension", f.dimension()}, {"terms", terms}, {"text", f.to_string()}};
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  Polynomial f(j.at("dimension").get<int>());
  for (const json& t : j.at("terms"))
    f.add_term(exponents_from_json(t.at("alpha")), rational_from_json(t.at("coeff")));
  return f;
}

nlohmann::json report_to_json(const DiffeomorphismReport& report) {
  json out{{"verdict", verdict_name(report.verdict)},
           {"jacobian_determinant", polynomial_to_json(report.jacobian_det)},
           {"h1_nonvanishing", nonvanishing_to_json(report.h1)},
           {"h2_coercivity", coercivity_to_json(report.h2)},
           {"notes", report.notes}};
  if (report.transform) {
    out["transform"] = json{{"inverse_matrix", matrix_to_json(*report.transform)},
                            {"coercivity", coercivity_to_json(*report.transform_verdict)}};
  }
  return out;
}

DiffeomorphismReport report_from_json(const nlohmann::json& j) {
  DiffeomorphismReport report;
  report.verdict = verdict_from(j.at("verdict").get<std::string>());
  report.jacobian_det = polynomial_from_json(j.at("jacobian_determinant"));
  report.h1 = nonvanishing_from_json(j.at("h1_nonvanishing"));
  report.h2 = coercivity_from_json(j.at("h2_coercivity"));
  report.notes = j.at("notes").get<std::vector<std::string>>();
  if (j.contains("transform")) {
    report.transform = matrix_from_json(j.at("transform").at("inverse_matrix"));
    report.transform_verdict = coercivity_from_json(j.at("transform").at("coercivity"));
  }
  return report;
}

nlohmann::json document_to_json(const ReportDocument& doc, bool include_timing) {
  json input{{"name", doc.input.name},
             {"dimension", doc.input.dimension},
             {"components", doc.input.component_expressions},
             {"comments", doc.input.comments}};
  if (doc.source_path) input["file"] = *doc.source_path;

  json parameters = json::object();
  for (const auto& [name, value] : doc.parameters) parameters[name] = rational_to_json(value);

  json out{{"schema", doc.schema},
           {"tool", doc.tool},
           {"version", doc.version},
           {"input", input},
           {"parameters", parameters},
           {"seed", doc.seed},
           {"report", report_to_json(doc.report)}};
  if (include_timing && doc.timing_ms) out["timing_ms"] = *doc.timing_ms;
  return out;
}

ReportDocument document_from_json(const nlohmann::json& j) {
  ReportDocument doc;
  doc.schema = j.at("schema").get<int>();
  doc.tool = j.at("tool").get<std::string>();
  doc.version = j.at("version").get<std::string>();
  const json& input = j.at("input");
  doc.input.name = input.at("name").get<std::string>();
  doc.input.dimension = input.at("dimension").get<int>();
  doc.input.component_expressions = input.at("components").get<std::vector<std::string>>();
  doc.input.comments = input.at("comments").get<std::vector<std::string>>();
  if (input.contains("file")) doc.source_path = input.at("file").get<std::string>();
  for (const auto& [name, value] : j.at("parameters").items())
    doc.parameters.emplace(name, rational_from_json(value));
  doc.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("timing_ms")) doc.timing_ms = j.at("timing_ms").get<double>();
  doc.report = report_from_json(j.at("report"));
  return doc;
}

}  // namespace diffeocert
