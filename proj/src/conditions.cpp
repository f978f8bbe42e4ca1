#include "diffeocert/conditions.hpp"

namespace diffeocert {

ConditionsReport check_conditions(const Polynomial& f, const GemAnalysis& gem) {
  ConditionsReport report;
  const int n = f.dimension();

  for (const ExponentVector& v : gem.vertices) {
    if (!all_even(v)) {
      report.c1_holds = false;
      report.c1_violations.push_back(v);
    }
    if (f.coefficient(v) <= 0) {
      report.c2_holds = false;
      report.c2_violations.push_back(v);
    }
  }

  // At most one vertex can sit on a given open axis ray: among the support
  // points k·e_i only the one with maximal k survives the vertex test.
  report.c3_axis_vertices.assign(static_cast<std::size_t>(n), std::nullopt);
  for (const ExponentVector& v : gem.vertices) {
    int axis = -1;
    bool on_axis = true;
    for (int i = 0; i < n; ++i) {
      if (v[i] == 0) continue;
      if (axis >= 0) {
        on_axis = false;
        break;
      }
      axis = i;
    }
    if (!on_axis || axis < 0) continue;
    if (v[axis] > 0 && v[axis] % 2 == 0) report.c3_axis_vertices[static_cast<std::size_t>(axis)] = v;
  }
  for (int i = 0; i < n; ++i) {
    if (!report.c3_axis_vertices[static_cast<std::size_t>(i)]) {
      report.c3_holds = false;
      report.c3_missing_axes.push_back(i + 1);
    }
  }
  return report;
}

}  // namespace diffeocert
