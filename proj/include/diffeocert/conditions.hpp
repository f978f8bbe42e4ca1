#pragma once

#include "diffeocert/geometry.hpp"

#include <optional>

namespace diffeocert {

/// The three vertex conditions every coercive polynomial must satisfy:
///   C1: every vertex of V(f) has only even entries,
///   C2: the coefficient at every vertex is strictly positive,
///   C3: every coordinate axis i carries a vertex of the form 2k·e_i, k >= 1.
struct ConditionsReport {
  bool c1_holds = true;
  std::vector<ExponentVector> c1_violations;  // vertices with an odd entry
  bool c2_holds = true;
  std::vector<ExponentVector> c2_violations;  // vertices with f_alpha <= 0
  bool c3_holds = true;
  std::vector<std::optional<ExponentVector>> c3_axis_vertices;  // per axis, the 2k e_i found
  std::vector<int> c3_missing_axes;                             // 1-based axes with none

  bool all_hold() const { return c1_holds && c2_holds && c3_holds; }
  bool operator==(const ConditionsReport& other) const = default;
};

ConditionsReport check_conditions(const Polynomial& f, const GemAnalysis& gem);

}  // namespace diffeocert
