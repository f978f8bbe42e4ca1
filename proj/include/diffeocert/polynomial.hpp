#pragma once

#include "diffeocert/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace diffeocert {

/// A monomial exponent vector alpha in N_0^n; alpha[i] is the power of
/// x_{i+1}.  The vector length always equals the ambient dimension.
using ExponentVector = std::vector<int>;

int total_degree(const ExponentVector& alpha);
bool all_even(const ExponentVector& alpha);
ExponentVector add_exponents(const ExponentVector& a, const ExponentVector& b);

/// Graded lexicographic order: compare total degree first, then
/// lexicographically.  This is the canonical term order used everywhere a
/// deterministic ordering of exponent vectors is needed.
struct GradedLexLess {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

/// Sparse multivariate polynomial over Q with a fixed ambient dimension.
///
/// Invariants: every stored coefficient is nonzero (operations prune zeros
/// eagerly), every stored exponent vector has length dimension(), and terms
/// are kept in graded lex order.  The zero polynomial has an empty term map.
class Polynomial {
 public:
  using TermMap = std::map<ExponentVector, Rational, GradedLexLess>;

  explicit Polynomial(int dimension);

  static Polynomial constant(int dimension, const Rational& value);
  static Polynomial monomial(int dimension, const ExponentVector& alpha, const Rational& coefficient);
  /// The coordinate polynomial x_index (index is 1-based).
  static Polynomial variable(int dimension, int index);

  int dimension() const { return dimension_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of x^alpha; zero when the term is absent.
  Rational coefficient(const ExponentVector& alpha) const;
  /// The support A(f): exponents of the nonzero terms, graded lex ascending.
  std::vector<ExponentVector> support() const;

  /// Adds value * x^alpha, pruning the term if the sum cancels.
  void add_term(const ExponentVector& alpha, const Rational& value);

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(const Rational& factor) const;
  Polynomial pow(unsigned exponent) const;

  bool operator==(const Polynomial& other) const = default;

  /// Exact evaluation; point.size() must equal dimension().
  Rational evaluate(const std::vector<Rational>& point) const;

  /// d/dx_index, index 1-based.  Throws std::out_of_range on a bad index.
  Polynomial partial_derivative(int index) const;

  /// Canonical text form, graded lex descending, matching the input grammar
  /// (e.g. "2*x1^6 - 1/2*x1*x2 + 3").  The zero polynomial prints "0".
  std::string to_string() const;

 private:
  int dimension_;
  TermMap terms_;
};

/// A polynomial map F = (F_1, ..., F_n) : R^n -> R^n.  Always square.
class PolynomialMap {
 public:
  explicit PolynomialMap(std::vector<Polynomial> components);

  int dimension() const { return static_cast<int>(components_.size()); }
  const std::vector<Polynomial>& components() const { return components_; }
  const Polynomial& component(int index) const;  // 1-based

  bool operator==(const PolynomialMap& other) const = default;

  std::vector<Rational> evaluate(const std::vector<Rational>& point) const;

 private:
  std::vector<Polynomial> components_;
};

/// Dense square matrix over Q; used for linear changes of variables.
class RationalMatrix {
 public:
  explicit RationalMatrix(std::vector<std::vector<Rational>> rows);
  static RationalMatrix identity(int n);

  int size() const { return static_cast<int>(rows_.size()); }
  const Rational& at(int row, int col) const { return rows_[row][col]; }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }

  /// Exact determinant by Gaussian elimination over Q.
  Rational determinant() const;
  bool is_regular() const;

  std::vector<Rational> apply(const std::vector<Rational>& x) const;

  bool operator==(const RationalMatrix& other) const = default;

 private:
  std::vector<std::vector<Rational>> rows_;
};

/// Sum of squares of the components, ||F||_2^2.  This is the polynomial whose
/// coercivity decides the norm-growth half of the diffeomorphism question.
Polynomial sos_polynomial(const PolynomialMap& F);

/// f(inverse * y): substitute the linear forms given by the rows of
/// `inverse` for the variables.  Throws std::domain_error when `inverse` is
/// singular (only regular changes of variables are meaningful here).
Polynomial compose_linear(const Polynomial& f, const RationalMatrix& inverse);
PolynomialMap compose_linear(const PolynomialMap& F, const RationalMatrix& inverse);

}  // namespace diffeocert
