#pragma once

#include "diffeocert/polynomial.hpp"

#include <cstdint>
#include <optional>

namespace diffeocert {

/// Direct expansion of det JF as a polynomial: the sum over support tuples
/// (alpha^1, ..., alpha^n) in A(F_1) x ... x A(F_n) with alpha^1+...+alpha^n
/// >= (1,...,1) componentwise of
///   det(alpha^1 ... alpha^n) * prod_i (F_i)_{alpha^i} * x^(sum alpha^i - 1).
/// The OpenMP kernel partitions the outermost support; partial sums merge in
/// a fixed order, so serial and parallel results are identical term maps.
Polynomial jacobian_determinant(const PolynomialMap& F);
Polynomial jacobian_determinant_serial(const PolynomialMap& F);
Polynomial jacobian_determinant_parallel(const PolynomialMap& F);

/// Independent oracle: builds the matrix of partial derivatives and expands
/// its determinant by cofactors.  Quadratically slower, kept for testing and
/// for the always-on cross-check in the certification pipeline.
Polynomial jacobian_determinant_oracle(const PolynomialMap& F);

/// det JF(0): only tuples with sum alpha^i exactly (1,...,1) contribute.
Rational det_at_origin(const PolynomialMap& F);

enum class NonvanishingTag {
  PositiveEverywhere,
  NegativeEverywhere,
  ZeroWitness,
  SignChangeWitness,
  AssertedNonvanishing,
  Unknown,
};

enum class NonvanishingCertificate {
  EvenPositiveMonomials,   // structural: even support, positive coefficients, positive constant
  EvenNegativeMonomials,   // mirrored certificate
  SamplingAssertion,       // user-asserted on top of constant-sign sampling
};

struct SamplingBudget {
  int diagonal_steps = 64;    // diagonal grid +-k/step_denominator, k = 0..diagonal_steps
  int step_denominator = 8;
  int uniform_points = 500;
  int random_lines = 50;
  int box_radius = 10;
  std::uint64_t seed = 2024;
};

struct NonvanishingStatus {
  NonvanishingTag tag = NonvanishingTag::Unknown;
  // ZeroWitness: `witness` is a root.  SignChangeWitness: `witness` has
  // positive value, `witness_opposite` negative.  Positive/NegativeEverywhere
  // carry no points.
  std::optional<std::vector<Rational>> witness;
  std::optional<std::vector<Rational>> witness_opposite;
  std::optional<NonvanishingCertificate> certificate;
  std::uint64_t seed = 0;
  bool operator==(const NonvanishingStatus& other) const = default;
};

/// Decides what can be decided about the sign of d on R^n: a structural
/// constant-sign certificate when available, otherwise exact evaluation on a
/// deterministic sample family (diagonal grid, uniform box points, random
/// lines) hunting for roots or sign changes.  Sampling is refutation-only:
/// with no structural certificate and no witness the result is Unknown.
NonvanishingStatus nonvanishing_analysis(const Polynomial& d, const SamplingBudget& budget = {});

/// The deterministic sample family used by nonvanishing_analysis, exposed
/// for tests and the kernel benchmark.
std::vector<std::vector<Rational>> nonvanishing_sample_points(int dimension, const SamplingBudget& budget);

}  // namespace diffeocert
