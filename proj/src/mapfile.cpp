#include "diffeocert/mapfile.hpp"

#include "diffeocert/parse.hpp"

#include <cctype>
#include <chrono>
#include <fstream>
#include <regex>
#include <sstream>

namespace diffeocert {
namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool is_variable_name(const std::string& name) {
  if (name.size() < 2 || name[0] != 'x') return false;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
  return true;
}

void validate_parameter_name(const std::string& name) {
  static const std::regex shape("[A-Za-z_][A-Za-z0-9_]*");
  if (!std::regex_match(name, shape))
    throw MapFileError("invalid parameter name: " + name);
  if (is_variable_name(name))
    throw MapFileError("parameter name collides with a variable: " + name);
}

}  // namespace

MapFile parse_map_text(const std::string& text, const std::string& name) {
  MapFile map;
  map.name = name;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  std::vector<std::pair<int, std::string>> components;  // (index, expression)
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = trim(line);
    if (body.empty()) continue;
    if (body[0] == '#') {
      map.comments.push_back(body);
      continue;
    }
    const std::size_t eq = body.find('=');
    if (eq == std::string::npos)
      throw MapFileError("line " + std::to_string(line_no) + ": expected 'name = value'");
    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    if (key == "n") {
      if (map.dimension != 0)
        throw MapFileError("line " + std::to_string(line_no) + ": duplicate dimension declaration");
      try {
        map.dimension = std::stoi(value);
      } catch (const std::exception&) {
        throw MapFileError("line " + std::to_string(line_no) + ": bad dimension: " + value);
      }
      if (map.dimension < 1)
        throw MapFileError("line " + std::to_string(line_no) + ": dimension must be >= 1");
      continue;
    }
    if (key.size() >= 2 && (key[0] == 'F' || key[0] == 'f')) {
      bool digits = true;
      for (std::size_t i = 1; i < key.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(key[i]))) digits = false;
      if (digits) {
        if (value.empty())
          throw MapFileError("line " + std::to_string(line_no) + ": empty component expression");
        components.emplace_back(std::stoi(key.substr(1)), value);
        continue;
      }
    }
    throw MapFileError("line " + std::to_string(line_no) + ": unrecognized key: " + key);
  }
  if (map.dimension == 0) throw MapFileError("missing dimension declaration 'n = <count>'");
  if (static_cast<int>(components.size()) != map.dimension)
    throw MapFileError("expected exactly " + std::to_string(map.dimension) + " components, found " +
                       std::to_string(components.size()));
  map.component_expressions.assign(static_cast<std::size_t>(map.dimension), "");
  std::vector<bool> seen(static_cast<std::size_t>(map.dimension), false);
  for (const auto& [index, expr] : components) {
    if (index < 1 || index > map.dimension)
      throw MapFileError("component index out of range: F" + std::to_string(index));
    if (seen[static_cast<std::size_t>(index - 1)])
      throw MapFileError("duplicate component: F" + std::to_string(index));
    seen[static_cast<std::size_t>(index - 1)] = true;
    map.component_expressions[static_cast<std::size_t>(index - 1)] = expr;
  }
  return map;
}

MapFile load_map_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MapFileError("cannot open map file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string base = path;
  const std::size_t slash = base.find_last_of('/');
  if (slash != std::string::npos) base = base.substr(slash + 1);
  return parse_map_text(buffer.str(), base);
}

std::vector<std::string> substitute_parameters(const std::vector<std::string>& expressions,
                                               const std::map<std::string, Rational>& bindings) {
  for (const auto& [name, value] : bindings) validate_parameter_name(name);
  std::vector<std::string> out;
  out.reserve(expressions.size());
  for (const std::string& expr : expressions) {
    std::string result = expr;
    for (const auto& [name, value] : bindings) {
      // Whole-word replacement; the replacement text may start with '-',
      // which the polynomial grammar folds into the preceding sign.
      const std::regex word("\\b" + name + "\\b");
      result = std::regex_replace(result, word, format_rational(value));
    }
    out.push_back(std::move(result));
  }
  return out;
}

void check_no_unbound(const std::vector<std::string>& expressions) {
  static const std::regex identifier("[A-Za-z_][A-Za-z0-9_]*");
  for (const std::string& expr : expressions) {
    for (auto it = std::sregex_iterator(expr.begin(), expr.end(), identifier);
         it != std::sregex_iterator(); ++it) {
      const std::string name = it->str();
      if (!is_variable_name(name)) throw UnboundParameterError(name);
    }
  }
}

ReportDocument run_map(const MapFile& map, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();

  const std::vector<std::string> substituted =
      substitute_parameters(map.component_expressions, options.bindings);
  check_no_unbound(substituted);

  std::vector<Polynomial> components;
  components.reserve(substituted.size());
  for (const std::string& expr : substituted)
    components.push_back(parse_polynomial(expr, map.dimension));
  const PolynomialMap F(std::move(components));

  ReportDocument doc;
  doc.version = DIFFEOCERT_VERSION;
  doc.input = map;
  doc.source_path = options.source_path;
  doc.parameters = options.bindings;
  doc.seed = options.certify.budget.seed;
  doc.report = diffeomorphism_verdict(F, options.certify);

  if (options.include_timing) {
    const auto end = std::chrono::steady_clock::now();
    doc.timing_ms = std::chrono::duration<double, std::milli>(end - start).count();
  }
  return doc;
}

SweepSpec parse_sweep_spec(const std::string& text) {
  // "t=-2..2 step 1/2" or "t=-2..2:1/2"
  SweepSpec spec;
  const std::size_t eq = text.find('=');
  if (eq == std::string::npos) throw MapFileError("sweep spec needs '<name>=<from>..<to>'");
  spec.parameter = trim(text.substr(0, eq));
  validate_parameter_name(spec.parameter);

  std::string rest = trim(text.substr(eq + 1));
  std::string step_text = "1";
  const std::size_t colon = rest.find(':');
  if (colon != std::string::npos) {
    step_text = trim(rest.substr(colon + 1));
    rest = trim(rest.substr(0, colon));
  } else {
    const std::size_t step_kw = rest.find("step");
    if (step_kw != std::string::npos) {
      step_text = trim(rest.substr(step_kw + 4));
      rest = trim(rest.substr(0, step_kw));
    }
  }
  const std::size_t dots = rest.find("..");
  if (dots == std::string::npos) throw MapFileError("sweep spec needs '<from>..<to>'");
  try {
    spec.from = parse_rational(rest.substr(0, dots));
    spec.to = parse_rational(rest.substr(dots + 2));
    spec.step = parse_rational(step_text);
  } catch (const std::invalid_argument& e) {
    throw MapFileError(std::string("bad sweep bound: ") + e.what());
  }
  if (spec.step <= 0) throw MapFileError("sweep step must be positive");
  return spec;
}

SweepResult sweep_map(const MapFile& map, const SweepSpec& spec, const RunOptions& options) {
  SweepResult result;
  result.spec = spec;

  std::vector<Rational> values;
  for (Rational v = spec.from; v <= spec.to; v += spec.step) {
    values.push_back(v);
    if (values.size() > 100000) throw MapFileError("sweep produces too many values");
  }
  result.reports.resize(values.size(), ReportDocument{});

  // Values are independent; any parse error is rethrown after the loop
  // (exceptions must not escape an OpenMP region).
  std::vector<std::exception_ptr> errors(values.size());
  const int count = static_cast<int>(values.size());
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < count; ++i) {
    try {
      RunOptions per_value = options;
      per_value.bindings[spec.parameter] = values[static_cast<std::size_t>(i)];
      result.reports[static_cast<std::size_t>(i)] = run_map(map, per_value);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);
  return result;
}

nlohmann::json sweep_to_json(const SweepResult& result, bool include_timing) {
  nlohmann::json reports = nlohmann::json::array();
  nlohmann::json summary = nlohmann::json::array();
  for (const ReportDocument& doc : result.reports) {
    reports.push_back(document_to_json(doc, include_timing));
    summary.push_back(nlohmann::json{
        {"value", format_rational(doc.parameters.at(result.spec.parameter))},
        {"verdict", verdict_name(doc.report.verdict)}});
  }
  return nlohmann::json{{"schema", 1},
                        {"tool", "diffeocert"},
                        {"sweep", nlohmann::json{{"parameter", result.spec.parameter},
                                                 {"from", format_rational(result.spec.from)},
                                                 {"to", format_rational(result.spec.to)},
                                                 {"step", format_rational(result.spec.step)}}},
                        {"summary", summary},
                        {"reports", reports}};
}

}  // namespace diffeocert
