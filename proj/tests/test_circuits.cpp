#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diffeocert/circuits.hpp"
#include "diffeocert/parse.hpp"

#include "test_support.hpp"

#include <cmath>

using namespace diffeocert;
using testsupport::ev;

namespace {

CircuitNumber family_circuit(const Rational& t) {
  const Polynomial s = sos_polynomial(testsupport::family_map(t));
  const auto decs = caratheodory_decompose(ev({3, 3}), vertices_at_infinity(s));
  REQUIRE(decs.size() == 1);
  return circuit_number(s, decs[0]);
}

}  // namespace

TEST_CASE("caratheodory_decompose: the family midpoint") {
  const auto decs = caratheodory_decompose(ev({3, 3}), {ev({0, 6}), ev({6, 0})});
  REQUIRE(decs.size() == 1);
  CHECK(decs[0].support == std::vector<ExponentVector>{ev({0, 6}), ev({6, 0})});
  CHECK(decs[0].lambdas == std::vector<Rational>{Rational("1/2"), Rational("1/2")});
}

TEST_CASE("caratheodory_decompose: the transformed fixture skips the idle vertex") {
  // (4,2) over {(0,2), (2,4), (6,0)}: the minimal decomposition uses only
  // (2,4) and (6,0) with weights 1/2 each.
  const auto decs = caratheodory_decompose(ev({4, 2}), {ev({0, 2}), ev({2, 4}), ev({6, 0})});
  REQUIRE(decs.size() == 1);
  CHECK(decs[0].support == std::vector<ExponentVector>{ev({2, 4}), ev({6, 0})});
  CHECK(decs[0].lambdas == std::vector<Rational>{Rational("1/2"), Rational("1/2")});
}

TEST_CASE("caratheodory_decompose: a vertex decomposes as itself") {
  const auto decs = caratheodory_decompose(ev({6, 0}), {ev({0, 6}), ev({6, 0})});
  REQUIRE(decs.size() == 1);
  CHECK(decs[0].support == std::vector<ExponentVector>{ev({6, 0})});
  CHECK(decs[0].lambdas == std::vector<Rational>{Rational(1)});
}

TEST_CASE("caratheodory_decompose: multiple minimal decompositions are all found") {
  // The center of a square has two diagonal decompositions (and no smaller
  // ones); edge midpoint combinations are not minimal representations of it.
  const std::vector<ExponentVector> square{ev({0, 0}), ev({0, 2}), ev({2, 0}), ev({2, 2})};
  const auto decs = caratheodory_decompose(ev({1, 1}), square);
  REQUIRE(decs.size() == 2);
  for (const auto& d : decs) {
    CHECK(d.support.size() == 2);
    CHECK(d.lambdas == std::vector<Rational>{Rational("1/2"), Rational("1/2")});
  }
}

TEST_CASE("caratheodory_decompose: outside point is an internal error") {
  CHECK_THROWS_AS(caratheodory_decompose(ev({9, 9}), {ev({0, 6}), ev({6, 0})}), std::logic_error);
}

TEST_CASE("decomposition exactness on random hull points") {
  std::mt19937_64 rng(2101);
  for (int round = 0; round < 60; ++round) {
    const int n = static_cast<int>(testsupport::rand_int(rng, 2, 3));
    // Random vertex set and a random rational convex combination target.
    const int count = static_cast<int>(testsupport::rand_int(rng, 2, 5));
    std::vector<ExponentVector> vertices;
    for (int i = 0; i < count; ++i) {
      ExponentVector v(static_cast<std::size_t>(n), 0);
      for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] = static_cast<int>(testsupport::rand_int(rng, 0, 6)) * 2;
      vertices.push_back(std::move(v));
    }
    // Midpoints of even points stay integral, so they make valid targets
    // guaranteed to lie in the hull.
    const int i1 = static_cast<int>(testsupport::rand_int(rng, 0, count - 1));
    const int i2 = static_cast<int>(testsupport::rand_int(rng, 0, count - 1));
    ExponentVector target(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < n; ++k)
      target[static_cast<std::size_t>(k)] = (vertices[static_cast<std::size_t>(i1)][static_cast<std::size_t>(k)] +
                                             vertices[static_cast<std::size_t>(i2)][static_cast<std::size_t>(k)]) /
                                            2;

    const auto decs = caratheodory_decompose(target, vertices);
    for (const auto& d : decs) {
      Rational lam_total = 0;
      std::vector<Rational> recombined(static_cast<std::size_t>(n), Rational(0));
      for (std::size_t i = 0; i < d.support.size(); ++i) {
        CHECK(d.lambdas[i] > 0);
        lam_total += d.lambdas[i];
        for (int k = 0; k < n; ++k)
          recombined[static_cast<std::size_t>(k)] += d.lambdas[i] * d.support[i][static_cast<std::size_t>(k)];
      }
      CHECK(lam_total == 1);
      for (int k = 0; k < n; ++k) CHECK(recombined[static_cast<std::size_t>(k)] == target[static_cast<std::size_t>(k)]);
    }
  }
}

TEST_CASE("circuit number of the cubic family: Theta^2 = 8(1+t^2)") {
  // Both vertex coefficients are positive (2 and 1+t^2), lambdas are 1/2,
  // so Theta^2 = (2/(1/2)) * ((1+t^2)/(1/2)) = 8(1+t^2).
  for (const long t : {0L, 2L, -1L, -2L, 5L}) {
    const CircuitNumber theta = family_circuit(Rational(t));
    CHECK(theta.power_exponent == 2);
    CHECK(theta.power_form == Rational(8) * (1 + Rational(t) * Rational(t)));
    const double expected = std::sqrt(8.0 * (1.0 + static_cast<double>(t) * static_cast<double>(t)));
    CHECK(std::abs(theta.float_hint - expected) < 1e-9 * expected);
  }
}

TEST_CASE("circuit number of the transformed fixture: Theta = 48") {
  // Support {(2,4), (6,0)} carries coefficients 72 and 8; lambdas are 1/2:
  // Theta^2 = (72/(1/2)) * (8/(1/2)) = 144*16 = 2304, i.e. Theta = 48.
  const Polynomial f = testsupport::transformed_fixture();
  const auto decs = caratheodory_decompose(ev({4, 2}), vertices_at_infinity(f));
  REQUIRE(decs.size() == 1);
  const CircuitNumber theta = circuit_number(f, decs[0]);
  CHECK(theta.power_exponent == 2);
  CHECK(theta.power_form == 2304);
  CHECK(std::abs(theta.float_hint - 48.0) < 1e-9 * 48.0);
}

TEST_CASE("circuit number of a singleton decomposition is the coefficient") {
  const Polynomial f = parse_polynomial("3*x1^4 + x2^4", 2);
  CaratheodoryDecomposition d;
  d.alpha_star = ev({4, 0});
  d.support = {ev({4, 0})};
  d.lambdas = {Rational(1)};
  const CircuitNumber theta = circuit_number(f, d);
  CHECK(theta.power_exponent == 1);
  CHECK(theta.power_form == 3);
}

TEST_CASE("circuit number demands positive support coefficients") {
  const Polynomial f = parse_polynomial("-2*x1^4 + x2^4", 2);
  CaratheodoryDecomposition d;
  d.alpha_star = ev({2, 2});
  d.support = {ev({4, 0}), ev({0, 4})};
  d.lambdas = {Rational("1/2"), Rational("1/2")};
  CHECK_THROWS_AS(circuit_number(f, d), std::domain_error);
}

TEST_CASE("power-form comparisons agree with long-double evaluation") {
  // The exact N-th power comparison and the float hint must order the same
  // way on randomized instances (floats only confirm, never decide).
  std::mt19937_64 rng(2202);
  for (int round = 0; round < 100; ++round) {
    const long c1 = testsupport::rand_int(rng, 1, 40);
    const long c2 = testsupport::rand_int(rng, 1, 40);
    const long num = testsupport::rand_int(rng, 1, 7);
    const Rational lambda(num, 8);  // lambda in (0,1) with denominator 8
    Polynomial f(2);
    f.add_term(ev({8, 0}), c1);
    f.add_term(ev({0, 8}), c2);
    CaratheodoryDecomposition d;
    d.alpha_star = ev({static_cast<int>(num), static_cast<int>(8 - num)});
    d.support = {ev({8, 0}), ev({0, 8})};
    d.lambdas = {lambda, 1 - lambda};
    const CircuitNumber theta = circuit_number(f, d);

    const Rational r(testsupport::rand_int(rng, -60, 60));
    const int exact = compare_abs_to_weighted_circuit(r, 1, theta);
    const long double lhs = std::abs(static_cast<long double>(r.convert_to<double>()));
    const long double rhs = static_cast<long double>(theta.float_hint);
    if (std::abs(static_cast<double>(lhs - rhs)) > 1e-6) {
      CHECK(exact == (lhs < rhs ? -1 : 1));
    }
  }
}

TEST_CASE("sufficient inequality on the cubic family: strict for t != -1") {
  // |2(1-t)| < sqrt(8(1+t^2)) iff (1+t)^2 > 0 iff t != -1 (weight 1).
  for (const long t : {0L, 2L, -2L, 7L}) {
    const Polynomial s = sos_polynomial(testsupport::family_map(Rational(t)));
    const CircuitNumber theta = family_circuit(Rational(t));
    CHECK(sufficient_inequality(s, theta, 1, false));
  }
  const Polynomial s = sos_polynomial(testsupport::family_map(-1));
  const CircuitNumber theta = family_circuit(-1);
  CHECK_FALSE(sufficient_inequality(s, theta, 1, false));
}

TEST_CASE("boundary sharpness at t = -1: both squared sides equal 16") {
  // |f_(3,3)|^2 = (2(1-t))^2 = 16 and Theta^2 = 8(1+t^2) = 16 at t = -1:
  // the strict sufficient inequality fails exactly, no epsilon involved.
  const Polynomial s = sos_polynomial(testsupport::family_map(-1));
  const CircuitNumber theta = family_circuit(-1);
  const Rational coeff = s.coefficient(ev({3, 3}));
  CHECK(coeff == 4);
  CHECK(theta.power_form == 16);
  CHECK(rational_pow(coeff, theta.power_exponent) == 16);
  CHECK(compare_abs_to_weighted_circuit(coeff, 1, theta) == 0);
  // The non-strict necessary bound still passes.
  const GemAnalysis g = classify_support(s);
  CHECK(necessary_condition_check(s, g).pass);
}

TEST_CASE("sufficient inequality: even degenerate points with nonnegative coefficients") {
  // f = x1^4 + x2^4 + c*x1^2*x2^2 with c >= 0 passes for any weight.
  const Polynomial f = parse_polynomial("x1^4 + x2^4 + 5*x1^2*x2^2", 2);
  const auto decs = caratheodory_decompose(ev({2, 2}), vertices_at_infinity(f));
  const CircuitNumber theta = circuit_number(f, decs[0]);
  CHECK(sufficient_inequality(f, theta, Rational("1/1000"), true));
  // Zero weight certifies nothing even then.
  CHECK_FALSE(sufficient_inequality(f, theta, 0, true));
}

TEST_CASE("necessary check: C3 refutation for x1^2 in two variables") {
  const Polynomial f = parse_polynomial("x1^2", 2);
  const GemAnalysis g = classify_support(f);
  const NecessaryCheck check = necessary_condition_check(f, g);
  CHECK_FALSE(check.pass);
  CHECK_FALSE(check.conditions.c3_holds);
  CHECK(check.conditions.c3_missing_axes == std::vector<int>{2});
}

TEST_CASE("necessary check: circuit bound refutation for the quartic with -3") {
  // x1^4 + x2^4 - 3 x1^2 x2^2: Theta((2,2)) = 2 and f_(2,2) = -3 < -2.
  const Polynomial f = parse_polynomial("x1^4 + x2^4 - 3*x1^2*x2^2", 2);
  const GemAnalysis g = classify_support(f);
  REQUIRE(g.degenerate == std::vector<ExponentVector>{ev({2, 2})});
  const NecessaryCheck check = necessary_condition_check(f, g);
  CHECK_FALSE(check.pass);
  REQUIRE(check.witness_alpha.has_value());
  CHECK(*check.witness_alpha == ev({2, 2}));
  REQUIRE(check.witness_face.has_value());
  CHECK(*check.witness_face == std::vector<ExponentVector>{ev({0, 4}), ev({4, 0})});
  CHECK(check.violated_clause == "necessary bound violated: f_alpha < -Theta");
}

TEST_CASE("necessary check: the boundary quartic -2 passes (non-strict)") {
  const Polynomial f = parse_polynomial("x1^4 + x2^4 - 2*x1^2*x2^2", 2);
  const NecessaryCheck check = necessary_condition_check(f, classify_support(f));
  CHECK(check.pass);
  REQUIRE(check.circuits_checked.size() == 1);
  CHECK(check.circuits_checked[0].power_form == 4);  // Theta = 2, N = 2
}

TEST_CASE("necessary check: odd upper bound f_alpha <= Theta") {
  // x1^4 + x2^4 + 3 x1^3 x2: (3,1) is odd with Theta^4 = (4/3)^3 * 4 =
  // 256/27, and 3^4 = 81 > 256/27, violating f <= Theta.
  const Polynomial f = parse_polynomial("x1^4 + x2^4 + 3*x1^3*x2", 2);
  const GemAnalysis g = classify_support(f);
  REQUIRE(g.degenerate == std::vector<ExponentVector>{ev({3, 1})});
  const NecessaryCheck check = necessary_condition_check(f, g);
  CHECK_FALSE(check.pass);
  CHECK(check.violated_clause == "necessary bound violated: f_alpha > Theta at an odd exponent");

  // The same magnitude on an even degenerate point is fine upward.
  const Polynomial even = parse_polynomial("x1^4 + x2^4 + 3*x1^2*x2^2", 2);
  CHECK(necessary_condition_check(even, classify_support(even)).pass);
}

TEST_CASE("necessary check: the cubic family passes off the boundary") {
  for (const long t : {0L, 2L, -2L}) {
    const Polynomial s = sos_polynomial(testsupport::family_map(Rational(t)));
    const NecessaryCheck check = necessary_condition_check(s, classify_support(s));
    CHECK(check.pass);
    CHECK(check.unconstrained.empty());
    REQUIRE(check.circuits_checked.size() == 1);
    CHECK(check.circuits_checked[0].power_form == Rational(8) * (1 + Rational(t) * Rational(t)));
  }
}
