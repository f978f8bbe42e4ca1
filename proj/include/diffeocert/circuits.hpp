#pragma once

#include "diffeocert/conditions.hpp"
#include "diffeocert/geometry.hpp"

#include <optional>
#include <string>

namespace diffeocert {

/// alpha_star = sum_i lambda_i * support[i] with lambda > 0 summing to 1 and
/// affinely independent support (a minimal representation; dropping any
/// support point breaks containment).
struct CaratheodoryDecomposition {
  ExponentVector alpha_star;
  std::vector<ExponentVector> support;  // graded lex ascending
  std::vector<Rational> lambdas;        // aligned with support, all > 0
  bool operator==(const CaratheodoryDecomposition& other) const = default;
};

/// The circuit number Theta = prod_i (f_{v_i} / lambda_i)^{lambda_i} for a
/// decomposition of alpha_star over vertices v_i with positive coefficients.
/// Theta is irrational in general, so it is stored exactly as its N-th power
/// (N clears all lambda denominators); comparisons against a rational r go
/// through r^N.  `float_hint` is advisory only.
struct CircuitNumber {
  CaratheodoryDecomposition decomposition;
  unsigned long long power_exponent = 1;  // N
  Rational power_form = 0;                // Theta^N, exact
  double float_hint = 0.0;
  bool operator==(const CircuitNumber& other) const = default;
};

/// All minimal decompositions of alpha_star over subsets of vertex_set,
/// ordered by (support size, index order).  Throws std::logic_error when
/// alpha_star is not in conv(vertex_set) at all — callers only ask about
/// points already known to lie on the gem.
std::vector<CaratheodoryDecomposition> caratheodory_decompose(
    const ExponentVector& alpha_star, const std::vector<ExponentVector>& vertex_set);

/// Computes Theta for f and the given decomposition.  Requires f to have a
/// strictly positive coefficient at every support point with lambda > 0.
CircuitNumber circuit_number(const Polynomial& f, const CaratheodoryDecomposition& decomposition);

/// Compares |r| against weight * Theta exactly: returns -1, 0, +1 for
/// |r| <, =, > weight*Theta.  Used by both inequality directions.
int compare_abs_to_weighted_circuit(const Rational& r, const Rational& weight, const CircuitNumber& theta);

/// The strict inequality required by the sufficiency theorem for one
/// degenerate point: for even alpha_star, f_{alpha_star} > -w*Theta;
/// otherwise |f_{alpha_star}| < w*Theta.  Exact.
bool sufficient_inequality(const Polynomial& f, const CircuitNumber& theta, const Rational& weight,
                           bool alpha_star_even);

/// Outcome of the necessary conditions: the vertex conditions C1-C3 plus,
/// for every degenerate point alpha_star isolated on a simplicial face G
/// (D(f) ∩ G = {alpha_star}), the non-strict bounds
///   f_{alpha_star} >= -Theta(f, V_G, alpha_star), and additionally
///   f_{alpha_star} <= Theta when alpha_star has an odd entry.
/// A single violated bound refutes coercivity outright.
struct NecessaryCheck {
  bool pass = true;
  ConditionsReport conditions;
  std::string violated_clause;  // empty when pass
  std::optional<ExponentVector> witness_alpha;
  std::optional<std::vector<ExponentVector>> witness_face;
  std::vector<ExponentVector> unconstrained;  // degenerate points with no isolating face
  std::vector<CircuitNumber> circuits_checked;
  bool operator==(const NecessaryCheck& other) const = default;
};

NecessaryCheck necessary_condition_check(const Polynomial& f, const GemAnalysis& gem);

}  // namespace diffeocert
