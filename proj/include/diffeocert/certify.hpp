#pragma once

#include "diffeocert/circuits.hpp"
#include "diffeocert/jacobian.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace diffeocert {

enum class CoercivityTag { Coercive, NotCoercive, Unknown };

enum class CoercivityTheorem {
  Characterization,    // gem regular: C1-C3 are equivalent to coercivity
  Sufficient,          // circuit-number inequalities with a weight split
  NecessaryViolation,  // a necessary condition fails, refuting coercivity
  None,                // no certificate either way
};

enum class WeightStrategy {
  EqualSplit,         // w(alpha_star) = 1/|D(f)|
  ProportionalSlack,  // float-guided reallocation, exactly re-verified
};

/// Per-variable weights for the sufficiency inequalities, keyed by the
/// degenerate point they are charged to.  Must sum to at most 1.
struct WeightAssignment {
  std::map<ExponentVector, Rational, GradedLexLess> weights;
  bool operator==(const WeightAssignment& other) const = default;
};

/// One circuit-number inequality instance recorded in a verdict, either
/// from the sufficiency pass (strict) or the necessary bounds (non-strict).
struct CircuitWitness {
  ExponentVector alpha_star;
  std::vector<ExponentVector> support;
  std::vector<Rational> lambdas;
  unsigned long long power_exponent = 1;
  Rational power_form = 0;
  double float_hint = 0.0;
  Rational weight = 0;
  std::string inequality;
  bool satisfied = false;
  bool operator==(const CircuitWitness& other) const = default;
};

struct CoercivityVerdict {
  CoercivityTag tag = CoercivityTag::Unknown;
  CoercivityTheorem theorem = CoercivityTheorem::None;
  GemAnalysis gem;
  ConditionsReport conditions;
  std::vector<CircuitWitness> circuits;
  std::vector<std::string> notes;
  bool operator==(const CoercivityVerdict& other) const = default;
};

/// Decides coercivity of f by the vertex conditions, gem regularity, the
/// necessary circuit bounds, and the sufficient strict inequalities with
/// the requested weight strategy (or explicit weights, which bypass the
/// strategy).  Sound in both directions; Unknown is possible.
CoercivityVerdict coercivity_verdict(const Polynomial& f,
                                     const std::optional<WeightAssignment>& weights = std::nullopt,
                                     WeightStrategy strategy = WeightStrategy::EqualSplit);

enum class DiffeomorphismTag { Diffeomorphism, NotDiffeomorphism, Unknown };

struct TransformFamily {
  int entry_bound = 1;  // inverse matrices with integer entries in [-bound, bound]
};

struct CertifyOptions {
  bool transforms = false;
  int transform_bound = 1;
  WeightStrategy weights = WeightStrategy::EqualSplit;
  bool assert_nonvanishing = false;
  SamplingBudget budget;
};

struct DiffeomorphismReport {
  DiffeomorphismTag verdict = DiffeomorphismTag::Unknown;
  Polynomial jacobian_det;
  NonvanishingStatus h1;
  CoercivityVerdict h2;
  std::optional<RationalMatrix> transform;            // inverse matrix that rescued h2
  std::optional<CoercivityVerdict> transform_verdict; // verdict for f∘transform
  std::vector<std::string> notes;
  bool operator==(const DiffeomorphismReport& other) const = default;

  DiffeomorphismReport() : jacobian_det(1) {}
};

/// The deterministic enumeration order of candidate inverse matrices:
/// integer entries in [-bound, bound], columns canonicalized (gcd 1, leading
/// sign positive — column scalings are plain dilations), regular only,
/// sorted by total absolute entry mass then entry order 1, 0, -1, 2, -2, ...
/// The identity comes first.
std::vector<RationalMatrix> transform_family(int dimension, int entry_bound);

/// Scans the family for a change of variables making ||F∘A^{-1}||^2
/// certifiably coercive; the first hit in family order is returned.
std::optional<std::pair<RationalMatrix, CoercivityVerdict>> transform_search(
    const PolynomialMap& F, const TransformFamily& family,
    WeightStrategy strategy = WeightStrategy::EqualSplit);

/// Raised when the always-on cross-check between the determinant formula
/// and the cofactor oracle fails; the CLI maps it to exit code 70.
class InternalCheckError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Full pipeline: det JF via the formula (cross-checked against the oracle
/// on every call), nonvanishing analysis, coercivity of ||F||^2, optional
/// transform rescue, and the final Hadamard-style verdict.
DiffeomorphismReport diffeomorphism_verdict(const PolynomialMap& F, const CertifyOptions& options = {});

}  // namespace diffeocert
