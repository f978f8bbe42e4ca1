#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diffeocert/parse.hpp"
#include "diffeocert/polynomial.hpp"

#include "test_support.hpp"

using namespace diffeocert;
using testsupport::ev;

TEST_CASE("parse: basic expression with signs and powers") {
  const Polynomial f = parse_polynomial("x1 + x1^3 - 1*x2^3", 2);
  REQUIRE(f.terms().size() == 3);
  CHECK(f.coefficient(ev({1, 0})) == 1);
  CHECK(f.coefficient(ev({3, 0})) == 1);
  CHECK(f.coefficient(ev({0, 3})) == -1);
}

TEST_CASE("parse: rational coefficients, implicit '*', repeated variables") {
  const Polynomial f = parse_polynomial("2*x1^3*x2 - 1/2*x2^6 + 3", 2);
  CHECK(f.coefficient(ev({3, 1})) == 2);
  CHECK(f.coefficient(ev({0, 6})) == Rational("-1/2"));
  CHECK(f.coefficient(ev({0, 0})) == 3);

  CHECK(parse_polynomial("2x1x2", 2) == parse_polynomial("2*x1*x2", 2));
  CHECK(parse_polynomial("x1*x1*x1", 1) == parse_polynomial("x1^3", 1));
  CHECK(parse_polynomial("x1 x2^2", 2) == parse_polynomial("x1*x2^2", 2));
}

TEST_CASE("parse: zero and cancellation yield the zero polynomial") {
  CHECK(parse_polynomial("0", 3).is_zero());
  CHECK(parse_polynomial("x1 - x1", 2).is_zero());
  CHECK(parse_polynomial("1/2*x1*x2 + 1/2*x1*x2 - x2*x1", 2).is_zero());
}

TEST_CASE("parse: consecutive signs fold (parameter substitution shape)") {
  // "t = -2" substituted into "x1 - t*x2^3" produces exactly this text.
  const Polynomial f = parse_polynomial("x1 - -2*x2^3", 2);
  CHECK(f.coefficient(ev({0, 3})) == 2);
  CHECK(parse_polynomial("- -x1", 1) == parse_polynomial("x1", 1));
  CHECK(parse_polynomial("+-+ 3*x1", 1).coefficient(ev({1})) == -3);
}

TEST_CASE("parse: errors carry positions") {
  CHECK_THROWS_AS(parse_polynomial("", 2), ParseError);
  CHECK_THROWS_AS(parse_polynomial("   ", 2), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x1 + ", 2), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x1 ^ x2", 2), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x1^-2", 2), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x1^1/2", 2), ParseError);  // fractional exponent
  CHECK_THROWS_AS(parse_polynomial("x3", 2), ParseError);      // index out of range
  CHECK_THROWS_AS(parse_polynomial("x0", 2), ParseError);
  CHECK_THROWS_AS(parse_polynomial("t*x1", 2), ParseError);    // unbound identifier
  CHECK_THROWS_AS(parse_polynomial("1/0", 1), ParseError);

  try {
    parse_polynomial("x1 + y", 2);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("terms are pruned and graded-lex ordered") {
  Polynomial f(2);
  f.add_term(ev({6, 0}), 1);
  f.add_term(ev({0, 2}), 1);
  f.add_term(ev({3, 3}), Rational("1/3"));
  f.add_term(ev({3, 3}), Rational("-1/3"));  // cancels
  REQUIRE(f.terms().size() == 2);
  std::vector<ExponentVector> order = f.support();
  CHECK(order == std::vector<ExponentVector>{ev({0, 2}), ev({6, 0})});
  for (const auto& [alpha, c] : f.terms()) CHECK(c != 0);
}

TEST_CASE("add_term validates dimension and sign of exponents") {
  Polynomial f(2);
  CHECK_THROWS_AS(f.add_term(ev({1}), 1), std::invalid_argument);
  CHECK_THROWS_AS(f.add_term(ev({1, 2, 3}), 1), std::invalid_argument);
  CHECK_THROWS_AS(f.add_term(ev({-1, 0}), 1), std::invalid_argument);
}

TEST_CASE("arithmetic: worked multiplication examples") {
  const Polynomial a = parse_polynomial("x1 + x2", 2);
  CHECK(a * a == parse_polynomial("x1^2 + 2*x1*x2 + x2^2", 2));

  const Polynomial b = parse_polynomial("x1 - x2", 2);
  CHECK(a * b == parse_polynomial("x1^2 - x2^2", 2));

  const Polynomial c = parse_polynomial("1/2*x1^2 + 3", 2);
  const Polynomial d = parse_polynomial("2*x2 - 1", 2);
  CHECK(c * d == parse_polynomial("x1^2*x2 - 1/2*x1^2 + 6*x2 - 3", 2));
}

TEST_CASE("arithmetic: ring laws on random operands") {
  std::mt19937_64 rng(101);
  for (int round = 0; round < 60; ++round) {
    const int n = static_cast<int>(testsupport::rand_int(rng, 1, 4));
    const Polynomial f = testsupport::rand_polynomial(rng, n, 5, 4);
    const Polynomial g = testsupport::rand_polynomial(rng, n, 5, 4);
    const Polynomial h = testsupport::rand_polynomial(rng, n, 4, 3);
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK(f * (g + h) == f * g + f * h);
    CHECK((f - f).is_zero());
    CHECK(f * (g * h) == (f * g) * h);
  }
}

TEST_CASE("evaluation: worked values") {
  const Polynomial f = parse_polynomial("x1^2*x2", 2);
  CHECK(f.evaluate({Rational(2), Rational(3)}) == 12);

  // ||F_1||^2 at (1,1): components 1+1-1=1 and 1+1+1=3, so 1+9 = 10.
  const Polynomial s = sos_polynomial(testsupport::family_map(1));
  CHECK(s.evaluate({Rational(1), Rational(1)}) == 10);

  const Polynomial c = parse_polynomial("5 - x1", 1);
  CHECK(c.evaluate({Rational(0)}) == 5);
  CHECK_THROWS_AS(f.evaluate({Rational(1)}), std::invalid_argument);
}

TEST_CASE("evaluation distributes over the ring operations") {
  std::mt19937_64 rng(202);
  for (int round = 0; round < 40; ++round) {
    const int n = static_cast<int>(testsupport::rand_int(rng, 1, 3));
    const Polynomial f = testsupport::rand_polynomial(rng, n, 5, 4);
    const Polynomial g = testsupport::rand_polynomial(rng, n, 5, 4);
    const std::vector<Rational> p = testsupport::rand_point(rng, n, 5);
    CHECK((f + g).evaluate(p) == f.evaluate(p) + g.evaluate(p));
    CHECK((f * g).evaluate(p) == f.evaluate(p) * g.evaluate(p));
  }
}

TEST_CASE("partial derivatives: worked examples") {
  const Polynomial f = parse_polynomial("x1^3*x2 + 2*x2^2", 2);
  CHECK(f.partial_derivative(1) == parse_polynomial("3*x1^2*x2", 2));
  CHECK(f.partial_derivative(2) == parse_polynomial("x1^3 + 4*x2", 2));
  CHECK(parse_polynomial("7", 2).partial_derivative(1).is_zero());
  CHECK_THROWS_AS(f.partial_derivative(0), std::out_of_range);
  CHECK_THROWS_AS(f.partial_derivative(3), std::out_of_range);
}

TEST_CASE("product rule holds on random polynomials") {
  std::mt19937_64 rng(303);
  for (int round = 0; round < 30; ++round) {
    const int n = static_cast<int>(testsupport::rand_int(rng, 1, 3));
    const int i = static_cast<int>(testsupport::rand_int(rng, 1, n));
    const Polynomial f = testsupport::rand_polynomial(rng, n, 4, 4);
    const Polynomial g = testsupport::rand_polynomial(rng, n, 4, 4);
    CHECK((f * g).partial_derivative(i) ==
          f.partial_derivative(i) * g + f * g.partial_derivative(i));
  }
}

TEST_CASE("polynomial map: squareness enforced, evaluation works") {
  CHECK_THROWS_AS(PolynomialMap({parse_polynomial("x1", 2)}), std::invalid_argument);
  const PolynomialMap F = testsupport::family_map(-1);
  const auto y = F.evaluate({Rational(1), Rational(1)});
  CHECK(y[0] == 3);  // 1 + 1 + 1 (t = -1 makes the x2^3 term +1)
  CHECK(y[1] == 3);
}

TEST_CASE("sos: worked expansions") {
  // Identity map: x1^2 + x2^2.
  const PolynomialMap id({parse_polynomial("x1", 2), parse_polynomial("x2", 2)});
  CHECK(sos_polynomial(id) == parse_polynomial("x1^2 + x2^2", 2));

  // ||F_t||^2 frozen at t = 1 (the (3,3) term 2(1-t) vanishes):
  const Polynomial s1 = sos_polynomial(testsupport::family_map(1));
  const Polynomial expected = parse_polynomial(
      "2*x1^6 + 2*x2^6 + 2*x1^4 + 2*x2^4 + 2*x1^3*x2 - 2*x1*x2^3 + x1^2 + x2^2", 2);
  CHECK(s1 == expected);

  // The parameter-dependent coefficients: (3,3) is 2(1-t), (0,6) is 1+t^2.
  for (const long t : {-3L, -1L, 0L, 2L, 5L}) {
    const Polynomial st = sos_polynomial(testsupport::family_map(Rational(t)));
    CHECK(st.coefficient(ev({3, 3})) == Rational(2) * (1 - Rational(t)));
    CHECK(st.coefficient(ev({0, 6})) == 1 + Rational(t) * Rational(t));
    CHECK(st.coefficient(ev({6, 0})) == 2);
  }
}

TEST_CASE("sos agrees with pointwise sum of squares") {
  std::mt19937_64 rng(404);
  for (int round = 0; round < 25; ++round) {
    const int n = static_cast<int>(testsupport::rand_int(rng, 1, 3));
    std::vector<Polynomial> comps;
    for (int i = 0; i < n; ++i) comps.push_back(testsupport::rand_polynomial(rng, n, 4, 3));
    const PolynomialMap F{std::move(comps)};
    const Polynomial s = sos_polynomial(F);
    const std::vector<Rational> p = testsupport::rand_point(rng, n, 4);
    Rational direct = 0;
    for (const Rational& v : F.evaluate(p)) direct += v * v;
    CHECK(s.evaluate(p) == direct);
  }
}

TEST_CASE("support of a square is contained in the doubled support") {
  std::mt19937_64 rng(505);
  for (int round = 0; round < 20; ++round) {
    const int n = static_cast<int>(testsupport::rand_int(rng, 1, 3));
    const Polynomial f = testsupport::rand_polynomial(rng, n, 5, 4);
    const Polynomial sq = f * f;
    const auto base = f.support();
    for (const ExponentVector& gamma : sq.support()) {
      bool found = false;
      for (const ExponentVector& a : base) {
        for (const ExponentVector& b : base)
          if (add_exponents(a, b) == gamma) {
            found = true;
            break;
          }
        if (found) break;
      }
      CHECK(found);
    }
  }
}

TEST_CASE("rational matrix: determinant and regularity") {
  const RationalMatrix a({{Rational(1), Rational(1)}, {Rational(1), Rational(-1)}});
  CHECK(a.determinant() == -2);
  CHECK(a.is_regular());
  const RationalMatrix singular({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}});
  CHECK(singular.determinant() == 0);
  CHECK_FALSE(singular.is_regular());
  CHECK(RationalMatrix::identity(4).determinant() == 1);
  CHECK_THROWS_AS(RationalMatrix({{Rational(1), Rational(2)}}), std::invalid_argument);
}

TEST_CASE("compose_linear: identity, dilation, and the worked transform") {
  const Polynomial f = parse_polynomial("x1^2 + x1*x2 - 3", 2);
  CHECK(compose_linear(f, RationalMatrix::identity(2)) == f);

  // x -> (2y1, 2y2)
  const RationalMatrix dil({{Rational(2), Rational(0)}, {Rational(0), Rational(2)}});
  CHECK(compose_linear(f, dil) == parse_polynomial("4*x1^2 + 4*x1*x2 - 3", 2));

  // The paper-level worked example: ||F_{-1}||^2 composed with
  // A^{-1} = [[1,1],[1,-1]] equals the frozen seven-term fixture.
  const Polynomial s = sos_polynomial(testsupport::family_map(-1));
  const RationalMatrix inverse({{Rational(1), Rational(1)}, {Rational(1), Rational(-1)}});
  CHECK(compose_linear(s, inverse) == testsupport::transformed_fixture());

  const RationalMatrix singular({{Rational(1), Rational(1)}, {Rational(1), Rational(1)}});
  CHECK_THROWS_AS(compose_linear(f, singular), std::domain_error);
}

TEST_CASE("compose_linear respects evaluation") {
  std::mt19937_64 rng(606);
  for (int round = 0; round < 25; ++round) {
    const int n = static_cast<int>(testsupport::rand_int(rng, 1, 3));
    const Polynomial f = testsupport::rand_polynomial(rng, n, 5, 4);
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(n),
                                            std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) rows[r][c] = Rational(testsupport::rand_int(rng, -2, 2));
    RationalMatrix m(rows);
    if (!m.is_regular()) continue;
    const std::vector<Rational> y = testsupport::rand_point(rng, n, 3);
    CHECK(compose_linear(f, m).evaluate(y) == f.evaluate(m.apply(y)));
  }
}

TEST_CASE("to_string round-trips through the parser") {
  CHECK(Polynomial(2).to_string() == "0");
  CHECK(parse_polynomial("2*x1^6 - 1/2*x1*x2 + 3", 2).to_string() == "2*x1^6 - 1/2*x1*x2 + 3");
  std::mt19937_64 rng(707);
  for (int round = 0; round < 50; ++round) {
    const int n = static_cast<int>(testsupport::rand_int(rng, 1, 4));
    const Polynomial f = testsupport::rand_polynomial(rng, n, 6, 5);
    CHECK(parse_polynomial(f.to_string(), n) == f);
  }
}
