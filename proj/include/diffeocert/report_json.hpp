#pragma once

#include "diffeocert/certify.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>

namespace diffeocert {

/// Map-file contents: the declared dimension, the raw component expression
/// strings (still containing named parameters), and any comment lines.
struct MapFile {
  int dimension = 0;
  std::vector<std::string> component_expressions;
  std::string name;  // basename of the file, or "<inline>"
  std::vector<std::string> comments;
  bool operator==(const MapFile& other) const = default;
};

/// Top-level report: schema version, tool identity, the input echo, the
/// parameter bindings, the sampling seed, optional wall-clock timing, and
/// the verdict payload.  Everything except timing is byte-deterministic.
struct ReportDocument {
  int schema = 1;
  std::string tool = "diffeocert";
  std::string version;
  MapFile input;
  std::optional<std::string> source_path;
  std::map<std::string, Rational> parameters;
  std::uint64_t seed = 0;
  std::optional<double> timing_ms;
  DiffeomorphismReport report;
  bool operator==(const ReportDocument& other) const = default;
};

/// Serialization.  `include_timing` controls whether timing_ms appears; the
/// byte-determinism guarantee applies to serialization without timing.
nlohmann::json document_to_json(const ReportDocument& doc, bool include_timing = true);
ReportDocument document_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const DiffeomorphismReport& report);
DiffeomorphismReport report_from_json(const nlohmann::json& j);

nlohmann::json polynomial_to_json(const Polynomial& f);
Polynomial polynomial_from_json(const nlohmann::json& j);

std::string verdict_name(DiffeomorphismTag tag);

}  // namespace diffeocert
