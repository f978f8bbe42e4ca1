#pragma once

#include "diffeocert/rational.hpp"

#include <optional>
#include <vector>

namespace diffeocert {

enum class RowSense { LessEqual, Equal };

/// A small linear program over Q.  Variables are free by default; set
/// `nonnegative[j]` to constrain x_j >= 0.  The objective is optional and
/// only used by lp_optimize.
struct LinearProgram {
  int num_vars = 0;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  std::vector<RowSense> sense;
  std::vector<bool> nonnegative;  // resized to num_vars on demand, default false
  std::optional<std::vector<Rational>> objective;  // minimized

  void add_row(std::vector<Rational> coefficients, RowSense s, Rational b);
};

/// Feasibility result.  Exactly one of `point` / `farkas` is meaningful:
/// a feasible point satisfying every row exactly, or Farkas multipliers
/// (one per row, nonnegative on inequality rows) proving infeasibility.
/// Both certificates are re-verified exactly before being returned.
struct LpFeasibility {
  bool feasible = false;
  std::vector<Rational> point;
  std::vector<Rational> farkas;
};

/// Phase-I simplex with Bland's rule; exact arithmetic throughout, so the
/// method terminates and never misclassifies.
LpFeasibility lp_feasible(const LinearProgram& lp);

/// Checks that `multipliers` certify infeasibility: y >= 0 on LessEqual
/// rows, y^T A = 0, and y^T b < 0.
bool verify_farkas(const LinearProgram& lp, const std::vector<Rational>& multipliers);

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> point;   // Optimal
  Rational value = 0;            // Optimal
  std::vector<Rational> farkas;  // Infeasible
};

/// Two-phase simplex minimizing lp.objective (which must be set).
LpSolution lp_optimize(const LinearProgram& lp);

}  // namespace diffeocert
