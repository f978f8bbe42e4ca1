#include "diffeocert/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace diffeocert {

int total_degree(const ExponentVector& alpha) {
  int d = 0;
  for (int e : alpha) d += e;
  return d;
}

bool all_even(const ExponentVector& alpha) {
  for (int e : alpha)
    if (e % 2 != 0) return false;
  return true;
}

ExponentVector add_exponents(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("exponent dimension mismatch");
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

bool GradedLexLess::operator()(const ExponentVector& a, const ExponentVector& b) const {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

Polynomial::Polynomial(int dimension) : dimension_(dimension) {
  if (dimension < 1) throw std::invalid_argument("polynomial dimension must be >= 1");
}

Polynomial Polynomial::constant(int dimension, const Rational& value) {
  Polynomial p(dimension);
  p.add_term(ExponentVector(dimension, 0), value);
  return p;
}

Polynomial Polynomial::monomial(int dimension, const ExponentVector& alpha, const Rational& coefficient) {
  Polynomial p(dimension);
  p.add_term(alpha, coefficient);
  return p;
}

Polynomial Polynomial::variable(int dimension, int index) {
  if (index < 1 || index > dimension) throw std::out_of_range("variable index out of range");
  ExponentVector alpha(dimension, 0);
  alpha[index - 1] = 1;
  return monomial(dimension, alpha, 1);
}

Rational Polynomial::coefficient(const ExponentVector& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<ExponentVector> Polynomial::support() const {
  std::vector<ExponentVector> out;
  out.reserve(terms_.size());
  for (const auto& [alpha, c] : terms_) out.push_back(alpha);
  return out;
}

void Polynomial::add_term(const ExponentVector& alpha, const Rational& value) {
  if (static_cast<int>(alpha.size()) != dimension_)
    throw std::invalid_argument("exponent vector length does not match polynomial dimension");
  for (int e : alpha)
    if (e < 0) throw std::invalid_argument("negative exponent");
  if (value == 0) return;
  auto [it, inserted] = terms_.try_emplace(alpha, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out(dimension_);
  for (const auto& [alpha, c] : terms_) out.terms_.emplace(alpha, -c);
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  if (dimension_ != other.dimension_) throw std::invalid_argument("polynomial dimension mismatch");
  Polynomial out = *this;
  for (const auto& [alpha, c] : other.terms_) out.add_term(alpha, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  if (dimension_ != other.dimension_) throw std::invalid_argument("polynomial dimension mismatch");
  Polynomial out = *this;
  for (const auto& [alpha, c] : other.terms_) out.add_term(alpha, -c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (dimension_ != other.dimension_) throw std::invalid_argument("polynomial dimension mismatch");
  Polynomial out(dimension_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : other.terms_) out.add_term(add_exponents(a, b), ca * cb);
  return out;
}

Polynomial Polynomial::scaled(const Rational& factor) const {
  Polynomial out(dimension_);
  if (factor == 0) return out;
  for (const auto& [alpha, c] : terms_) out.terms_.emplace(alpha, c * factor);
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = Polynomial::constant(dimension_, 1);
  for (unsigned i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != dimension_)
    throw std::invalid_argument("evaluation point dimension mismatch");
  Rational total = 0;
  for (const auto& [alpha, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < dimension_; ++i)
      if (alpha[i] != 0) term *= rational_pow(point[i], static_cast<unsigned long long>(alpha[i]));
    total += term;
  }
  return total;
}

Polynomial Polynomial::partial_derivative(int index) const {
  if (index < 1 || index > dimension_) throw std::out_of_range("derivative index out of range");
  Polynomial out(dimension_);
  for (const auto& [alpha, c] : terms_) {
    const int e = alpha[index - 1];
    if (e == 0) continue;
    ExponentVector beta = alpha;
    beta[index - 1] = e - 1;
    out.add_term(beta, c * e);
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print leading terms first: iterate the graded lex map in reverse.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const ExponentVector& alpha = it->first;
    const Rational& c = it->second;
    const bool negative = c < 0;
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    const Rational mag = negative ? Rational(-c) : c;
    const bool constant_term = total_degree(alpha) == 0;
    const bool print_coeff = constant_term || mag != 1;
    if (print_coeff) os << format_rational(mag);
    bool printed_factor = false;
    for (int i = 0; i < dimension_; ++i) {
      if (alpha[i] == 0) continue;
      if (print_coeff || printed_factor) os << "*";
      os << "x" << (i + 1);
      if (alpha[i] > 1) os << "^" << alpha[i];
      printed_factor = true;
    }
    first = false;
  }
  return os.str();
}

PolynomialMap::PolynomialMap(std::vector<Polynomial> components) : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("polynomial map needs at least one component");
  const int n = static_cast<int>(components_.size());
  for (const Polynomial& f : components_)
    if (f.dimension() != n)
      throw std::invalid_argument("polynomial map must be square (component dimension != component count)");
}

const Polynomial& PolynomialMap::component(int index) const {
  if (index < 1 || index > dimension()) throw std::out_of_range("component index out of range");
  return components_[static_cast<std::size_t>(index - 1)];
}

std::vector<Rational> PolynomialMap::evaluate(const std::vector<Rational>& point) const {
  std::vector<Rational> out;
  out.reserve(components_.size());
  for (const Polynomial& f : components_) out.push_back(f.evaluate(point));
  return out;
}

RationalMatrix::RationalMatrix(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {
  const std::size_t n = rows_.size();
  if (n == 0) throw std::invalid_argument("matrix must be nonempty");
  for (const auto& row : rows_)
    if (row.size() != n) throw std::invalid_argument("matrix must be square");
}

RationalMatrix RationalMatrix::identity(int n) {
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) rows[i][i] = 1;
  return RationalMatrix(std::move(rows));
}

Rational RationalMatrix::determinant() const {
  const int n = size();
  std::vector<std::vector<Rational>> a = rows_;
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (a[row][col] != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    const Rational inv = Rational(1) / a[col][col];
    for (int row = col + 1; row < n; ++row) {
      if (a[row][col] == 0) continue;
      const Rational factor = a[row][col] * inv;
      for (int k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
    }
  }
  return det;
}

bool RationalMatrix::is_regular() const { return determinant() != 0; }

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != size()) throw std::invalid_argument("matrix/vector size mismatch");
  std::vector<Rational> out(x.size(), Rational(0));
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) out[i] += rows_[i][j] * x[j];
  return out;
}

Polynomial sos_polynomial(const PolynomialMap& F) {
  Polynomial total(F.dimension());
  for (const Polynomial& f : F.components()) total = total + f * f;
  return total;
}

Polynomial compose_linear(const Polynomial& f, const RationalMatrix& inverse) {
  if (inverse.size() != f.dimension())
    throw std::invalid_argument("matrix size does not match polynomial dimension");
  if (!inverse.is_regular()) throw std::domain_error("change of variables must be regular");
  const int n = f.dimension();

  // Linear substitution x_i = sum_j inverse[i][j] * y_j.  Powers of each
  // linear form are cached since supports typically reuse exponents.
  std::vector<Polynomial> linear;
  linear.reserve(n);
  for (int i = 0; i < n; ++i) {
    Polynomial li(n);
    for (int j = 0; j < n; ++j) {
      if (inverse.at(i, j) == 0) continue;
      ExponentVector alpha(n, 0);
      alpha[j] = 1;
      li.add_term(alpha, inverse.at(i, j));
    }
    linear.push_back(li);
  }
  std::vector<std::vector<Polynomial>> powers(n);
  for (int i = 0; i < n; ++i) powers[i].push_back(Polynomial::constant(n, 1));

  Polynomial out(n);
  for (const auto& [alpha, c] : f.terms()) {
    Polynomial term = Polynomial::constant(n, c);
    for (int i = 0; i < n; ++i) {
      const int e = alpha[i];
      while (static_cast<int>(powers[i].size()) <= e)
        powers[i].push_back(powers[i].back() * linear[i]);
      if (e > 0) term = term * powers[i][e];
    }
    out = out + term;
  }
  return out;
}

PolynomialMap compose_linear(const PolynomialMap& F, const RationalMatrix& inverse) {
  std::vector<Polynomial> comps;
  comps.reserve(F.components().size());
  for (const Polynomial& f : F.components()) comps.push_back(compose_linear(f, inverse));
  return PolynomialMap(std::move(comps));
}

}  // namespace diffeocert
