#pragma once

#include "diffeocert/report_json.hpp"

#include <map>
#include <string>

namespace diffeocert {

class MapFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a component expression still contains an identifier after
/// parameter substitution; the CLI maps it to exit code 65.
class UnboundParameterError : public std::runtime_error {
 public:
  explicit UnboundParameterError(const std::string& name)
      : std::runtime_error("unbound parameter: " + name), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// Map-file syntax:
///   # comment
///   n = 2
///   F1 = x1 + x1^3 - t*x2^3
///   F2 = x2 + x1^3 + x2^3
/// Exactly the declared components F1..Fn must be present, each once.
MapFile parse_map_text(const std::string& text, const std::string& name = "<inline>");
MapFile load_map_file(const std::string& path);

/// Replaces whole-word occurrences of bound parameter names with their
/// rational values (parenthesis-free: the grammar folds consecutive signs,
/// so negative substitutions stay parseable).  A parameter name must match
/// [A-Za-z_][A-Za-z0-9_]* and must not look like a variable x<k>.
std::vector<std::string> substitute_parameters(const std::vector<std::string>& expressions,
                                               const std::map<std::string, Rational>& bindings);

/// Throws UnboundParameterError if any identifier other than the variables
/// x1..xn survives in the expressions.
void check_no_unbound(const std::vector<std::string>& expressions);

struct RunOptions {
  std::map<std::string, Rational> bindings;
  CertifyOptions certify;
  bool include_timing = true;
  std::optional<std::string> source_path;
};

/// Substitutes, parses, certifies and wraps everything in a ReportDocument.
ReportDocument run_map(const MapFile& map, const RunOptions& options);

struct SweepSpec {
  std::string parameter;
  Rational from = 0;
  Rational to = 0;
  Rational step = 1;
};

/// Accepts "t=-2..2 step 1/2" and the shorthand "t=-2..2:1/2".
SweepSpec parse_sweep_spec(const std::string& text);

struct SweepResult {
  SweepSpec spec;
  std::vector<ReportDocument> reports;  // one per parameter value, in order
};

/// Runs the map once per sweep value (data-parallel over values).  The
/// sweep parameter overrides any identical binding in `options`.
SweepResult sweep_map(const MapFile& map, const SweepSpec& spec, const RunOptions& options);

nlohmann::json sweep_to_json(const SweepResult& result, bool include_timing = true);

}  // namespace diffeocert
