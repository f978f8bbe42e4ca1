#include "diffeocert/mapfile.hpp"
#include "diffeocert/parse.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kExitDiffeomorphism = 0;
constexpr int kExitNotDiffeomorphism = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitParseError = 64;
constexpr int kExitUnboundParameter = 65;
constexpr int kExitInternalCheck = 70;

struct CommonFlags {
  std::vector<std::string> set_values;
  bool transforms = false;
  int transform_bound = 1;
  std::string weights = "default";
  bool assert_nonvanishing = false;
  int samples = -1;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string out_path;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--set", flags.set_values, "Bind a parameter, e.g. --set t=-1/2 (repeatable)");
  cmd->add_flag("--transforms", flags.transforms, "Search linear changes of variables when coercivity is inconclusive");
  cmd->add_option("--transform-bound", flags.transform_bound, "Integer entry bound for the transform family")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--weights", flags.weights, "Weight strategy: default | proportional")
      ->check(CLI::IsMember({"default", "proportional"}));
  cmd->add_flag("--assert-nonvanishing", flags.assert_nonvanishing,
                "Accept det JF != 0 as a user assertion when sampling is inconclusive");
  cmd->add_option("--samples", flags.samples, "Uniform sample count for the nonvanishing search")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--seed", flags.seed, "Sampling seed")->each([&flags](const std::string&) {
    flags.seed_given = true;
  });
  cmd->add_option("--out", flags.out_path, "Write the JSON report to this path instead of stdout");
}

diffeocert::RunOptions make_options(const CommonFlags& flags, const std::string& path) {
  diffeocert::RunOptions options;
  options.source_path = path;
  for (const std::string& binding : flags.set_values) {
    const std::size_t eq = binding.find('=');
    if (eq == std::string::npos)
      throw diffeocert::MapFileError("--set expects NAME=RATIONAL, got: " + binding);
    options.bindings[binding.substr(0, eq)] = diffeocert::parse_rational(binding.substr(eq + 1));
  }
  options.certify.transforms = flags.transforms;
  options.certify.transform_bound = flags.transform_bound;
  options.certify.weights = flags.weights == "proportional"
                                ? diffeocert::WeightStrategy::ProportionalSlack
                                : diffeocert::WeightStrategy::EqualSplit;
  options.certify.assert_nonvanishing = flags.assert_nonvanishing;
  if (flags.samples >= 0) options.certify.budget.uniform_points = flags.samples;
  if (flags.seed_given) options.certify.budget.seed = flags.seed;
  return options;
}

void emit(const nlohmann::json& doc, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write: " + out_path);
    out << doc.dump(2) << "\n";
  }
}

int verdict_exit_code(diffeocert::DiffeomorphismTag tag) {
  switch (tag) {
    case diffeocert::DiffeomorphismTag::Diffeomorphism: return kExitDiffeomorphism;
    case diffeocert::DiffeomorphismTag::NotDiffeomorphism: return kExitNotDiffeomorphism;
    case diffeocert::DiffeomorphismTag::Unknown: return kExitUnknown;
  }
  return kExitUnknown;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"diffeocert: certify whether a polynomial map is a global C1 diffeomorphism"};
  app.set_version_flag("--version", DIFFEOCERT_VERSION);
  app.require_subcommand(1);

  std::string run_path;
  CommonFlags run_flags;
  CLI::App* run_cmd = app.add_subcommand("run", "Certify a single map");
  run_cmd->add_option("map", run_path, "Map file")->required();
  add_common_flags(run_cmd, run_flags);

  std::string sweep_path;
  std::string sweep_spec_text;
  CommonFlags sweep_flags;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Certify a map across a parameter range");
  sweep_cmd->add_option("map", sweep_path, "Map file")->required();
  sweep_cmd->add_option("--sweep", sweep_spec_text, "Range, e.g. t=-2..2 step 1/2")->required();
  add_common_flags(sweep_cmd, sweep_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (run_cmd->parsed()) {
      const diffeocert::MapFile map = diffeocert::load_map_file(run_path);
      const diffeocert::ReportDocument doc = diffeocert::run_map(map, make_options(run_flags, run_path));
      emit(diffeocert::document_to_json(doc), run_flags.out_path);
      std::cerr << "verdict: " << diffeocert::verdict_name(doc.report.verdict) << "\n";
      return verdict_exit_code(doc.report.verdict);
    }
    const diffeocert::MapFile map = diffeocert::load_map_file(sweep_path);
    const diffeocert::SweepSpec spec = diffeocert::parse_sweep_spec(sweep_spec_text);
    const diffeocert::SweepResult result =
        diffeocert::sweep_map(map, spec, make_options(sweep_flags, sweep_path));
    emit(diffeocert::sweep_to_json(result), sweep_flags.out_path);
    for (const diffeocert::ReportDocument& doc : result.reports)
      std::cerr << spec.parameter << " = "
                << diffeocert::format_rational(doc.parameters.at(spec.parameter)) << "  ->  "
                << diffeocert::verdict_name(doc.report.verdict) << "\n";
    return 0;  // a completed sweep is a success regardless of per-value verdicts
  } catch (const diffeocert::UnboundParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnboundParameter;
  } catch (const diffeocert::InternalCheckError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternalCheck;
  } catch (const diffeocert::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const diffeocert::MapFileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternalCheck;
  }
}
