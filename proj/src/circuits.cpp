#include "diffeocert/circuits.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace diffeocert {
namespace {

RationalPoint to_point(const ExponentVector& alpha) {
  RationalPoint p;
  p.reserve(alpha.size());
  for (int e : alpha) p.emplace_back(e);
  return p;
}

}  // namespace

std::vector<CaratheodoryDecomposition> caratheodory_decompose(
    const ExponentVector& alpha_star, const std::vector<ExponentVector>& vertex_set) {
  std::vector<CaratheodoryDecomposition> out;
  const int n = static_cast<int>(alpha_star.size());
  const int vn = static_cast<int>(vertex_set.size());
  const RationalPoint target = to_point(alpha_star);

  const int max_size = std::min(vn, n + 1);
  for (int size = 1; size <= max_size; ++size) {
    std::vector<int> pick(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i;
    for (;;) {
      std::vector<RationalPoint> pts;
      pts.reserve(static_cast<std::size_t>(size));
      for (int i : pick) pts.push_back(to_point(vertex_set[static_cast<std::size_t>(i)]));
      // Only affinely independent supports yield minimal (and unique)
      // barycentric coordinates; dependent subsets are never circuits here.
      if (affinely_independent(pts)) {
        const ConvexCombination combo = convex_combination(target, pts);
        if (combo.inside) {
          bool strictly_positive = true;
          for (const Rational& l : combo.lambdas)
            if (l <= 0) {
              strictly_positive = false;  // a zero weight means a smaller subset suffices
              break;
            }
          if (strictly_positive) {
            CaratheodoryDecomposition d;
            d.alpha_star = alpha_star;
            for (int i : pick) d.support.push_back(vertex_set[static_cast<std::size_t>(i)]);
            d.lambdas = combo.lambdas;
            out.push_back(std::move(d));
          }
        }
      }
      int i = size - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == vn - size + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j)
        pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    if (vn < size + 1) break;
  }

  if (out.empty()) {
    // Callers only decompose points known to lie in conv(vertex_set); if we
    // get here either the precondition was violated or the enumeration is
    // wrong, both internal errors.
    const ConvexCombination whole = convex_combination(target, [&] {
      std::vector<RationalPoint> pts;
      for (const ExponentVector& v : vertex_set) pts.push_back(to_point(v));
      return pts;
    }());
    if (whole.inside)
      throw std::logic_error("caratheodory_decompose found no minimal decomposition for a contained point");
    throw std::logic_error("caratheodory_decompose precondition violated: point outside conv(vertex_set)");
  }
  return out;
}

CircuitNumber circuit_number(const Polynomial& f, const CaratheodoryDecomposition& decomposition) {
  CircuitNumber theta;
  theta.decomposition = decomposition;

  const Integer N_int = denominator_lcm(decomposition.lambdas);
  if (N_int > Integer(1000000000))
    throw std::overflow_error("circuit number exponent too large");
  const unsigned long long N = N_int.convert_to<unsigned long long>();
  theta.power_exponent = N;

  Rational power = 1;
  double hint = 0.0;  // accumulated in log space
  for (std::size_t i = 0; i < decomposition.support.size(); ++i) {
    const Rational& lambda = decomposition.lambdas[i];
    if (lambda == 0) continue;  // 0^0 = 1 contributes nothing
    const Rational coeff = f.coefficient(decomposition.support[i]);
    if (coeff <= 0)
      throw std::domain_error("circuit number requires positive coefficients on the support");
    const Rational base = coeff / lambda;
    const Rational exponent_times_N = lambda * Rational(N_int);
    if (boost::multiprecision::denominator(exponent_times_N) != 1)
      throw std::logic_error("lambda*N must be integral");
    const unsigned long long e =
        boost::multiprecision::numerator(exponent_times_N).convert_to<unsigned long long>();
    power *= rational_pow(base, e);
    hint += to_double_hint(lambda) * std::log(to_double_hint(base));
  }
  theta.power_form = power;
  theta.float_hint = std::exp(hint);
  return theta;
}

int compare_abs_to_weighted_circuit(const Rational& r, const Rational& weight, const CircuitNumber& theta) {
  if (weight < 0) throw std::invalid_argument("weight must be nonnegative");
  // |r| vs w*Theta with Theta > 0: raise both sides to the N-th power.
  const Rational lhs = rational_pow(r < 0 ? Rational(-r) : r, theta.power_exponent);
  const Rational rhs = rational_pow(weight, theta.power_exponent) * theta.power_form;
  if (lhs < rhs) return -1;
  if (lhs == rhs) return 0;
  return 1;
}

bool sufficient_inequality(const Polynomial& f, const CircuitNumber& theta, const Rational& weight,
                           bool alpha_star_even) {
  if (weight <= 0) return false;  // a vanishing weight certifies nothing
  const Rational coeff = f.coefficient(theta.decomposition.alpha_star);
  if (alpha_star_even && coeff >= 0) return true;  // nonnegative even terms are harmless
  return compare_abs_to_weighted_circuit(coeff, weight, theta) < 0;
}

NecessaryCheck necessary_condition_check(const Polynomial& f, const GemAnalysis& gem) {
  NecessaryCheck check;
  check.conditions = check_conditions(f, gem);
  if (!check.conditions.all_hold()) {
    check.pass = false;
    if (!check.conditions.c1_holds)
      check.violated_clause = "C1: a vertex has an odd entry";
    else if (!check.conditions.c2_holds)
      check.violated_clause = "C2: a vertex coefficient is not strictly positive";
    else
      check.violated_clause = "C3: a coordinate axis carries no even vertex";
    if (!check.conditions.c1_violations.empty())
      check.witness_alpha = check.conditions.c1_violations.front();
    else if (!check.conditions.c2_violations.empty())
      check.witness_alpha = check.conditions.c2_violations.front();
    return check;
  }

  for (const ExponentVector& alpha_star : gem.degenerate) {
    const std::vector<std::vector<ExponentVector>> faces = simplicial_faces_through(f, alpha_star);
    bool constrained = false;
    for (const std::vector<ExponentVector>& face : faces) {
      // The bound only applies when alpha_star is the unique degenerate
      // point on the face.
      bool isolated = true;
      std::vector<RationalPoint> pts;
      for (const ExponentVector& v : face) pts.push_back(to_point(v));
      for (const ExponentVector& other : gem.degenerate) {
        if (other == alpha_star) continue;
        if (convex_combination(to_point(other), pts).inside) {
          isolated = false;
          break;
        }
      }
      if (!isolated) continue;
      constrained = true;

      CaratheodoryDecomposition d;
      d.alpha_star = alpha_star;
      d.support = face;
      d.lambdas = convex_combination(to_point(alpha_star), pts).lambdas;
      const CircuitNumber theta = circuit_number(f, d);
      check.circuits_checked.push_back(theta);

      const Rational coeff = f.coefficient(alpha_star);
      const int cmp = compare_abs_to_weighted_circuit(coeff, 1, theta);
      if (coeff < 0 && cmp > 0) {
        check.pass = false;
        check.violated_clause = "necessary bound violated: f_alpha < -Theta";
        check.witness_alpha = alpha_star;
        check.witness_face = face;
        return check;
      }
      if (!all_even(alpha_star) && coeff > 0 && cmp > 0) {
        check.pass = false;
        check.violated_clause = "necessary bound violated: f_alpha > Theta at an odd exponent";
        check.witness_alpha = alpha_star;
        check.witness_face = face;
        return check;
      }
    }
    if (!constrained) check.unconstrained.push_back(alpha_star);
  }
  return check;
}

}  // namespace diffeocert
