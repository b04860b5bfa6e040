#include <cmath>
#include <numbers>

#include "ajack/theta.hpp"
#include "test_util.hpp"

using namespace ajack;
using testutil::q;
using testutil::series;

TEST_CASE("rationals are canonical and print as num/den") {
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(make_rational(5)) == "5/1");
  CHECK(to_string(make_rational(0, 7)) == "0/1");
  CHECK(parse_rational("10/4") == q(5, 2));
  CHECK(parse_rational("-3") == q(-3));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("Laurent polynomials never store zeros") {
  LaurentX a = LaurentX::monomial(2, q(1)) + LaurentX::monomial(-1, q(3));
  a.add_term(2, q(-1));
  CHECK(a.size() == 1);
  CHECK(a.coeff(-1) == 3);
  const LaurentX p = LaurentX::monomial(1, q(1)) - LaurentX::monomial(-1, q(1));
  const LaurentX r = LaurentX::monomial(1, q(1)) + LaurentX::monomial(-1, q(1));
  CHECK(p * r == LaurentX::monomial(2, q(1)) - LaurentX::monomial(-2, q(1)));
  CHECK(divide_exact(p * r, r) == p);
  CHECK_THROWS_AS(divide_exact(p, LaurentX::monomial(0, q(1)) + LaurentX::monomial(3, q(1))), SeriesError);
}

TEST_CASE("add cancels and keeps shared leads") {
  const auto a = series(0, 3, {{0, 0, 1, 1}, {1, 0, -1, 1}});
  const auto b = series(0, 3, {{1, 0, 1, 1}});
  CHECK_SERIES_EQ(a + b, NomeSeries::one(3));

  const auto c = series(0, 2, {{0, 0, 1, 1}}, q(1, 8));
  const auto d = series(0, 2, {{0, 2, 1, 1}}, q(1, 8));
  const auto sum = c + d;
  CHECK(sum.lead() == q(1, 8));
  CHECK(sum.coefficient(q(1, 8), 0) == 1);
  CHECK(sum.coefficient(q(1, 8), 2) == 1);

  CHECK_THROWS_AS(series(1, 2, {{0, 0, 1, 1}}) + series(2, 2, {{0, 0, 1, 1}}), SeriesError);
}

TEST_CASE("add truncates to the common known order") {
  const auto a = series(0, 5, {{0, 0, 1, 1}});
  const auto b = series(0, 2, {{0, 0, 1, 1}});
  CHECK((a + b).top() == q(2));
}

TEST_CASE("mul examples") {
  const auto a = series(0, 4, {{0, 0, 1, 1}, {1, 0, -1, 1}});
  const auto b = series(0, 4, {{0, 0, 1, 1}, {1, 0, 1, 1}});
  CHECK_SERIES_EQ(a * b, series(0, 4, {{0, 0, 1, 1}, {2, 0, -1, 1}}));

  const auto c = series(1, 2, {{0, 1, 1, 1}, {0, -1, -1, 1}});
  const auto d = series(1, 2, {{0, 1, 1, 1}, {0, -1, 1, 1}});
  const auto cd = c * d;
  CHECK(cd.level() == 2);
  CHECK_SERIES_EQ(cd, series(2, 2, {{0, 2, 1, 1}, {0, -2, -1, 1}}));
}

TEST_CASE("mul on different grids and leads") {
  auto a = NomeSeries::zero(0, 2, q(1, 8), 6);  // p^{1/8}(1 + p^{1/2})
  a.coeff_mut(0).add_term(0, q(1));
  a.coeff_mut(1).add_term(0, q(1));
  const auto b = series(0, 3, {{0, 1, 1, 1}, {1, 1, 1, 1}}, q(1, 3));
  const auto ab = a * b;
  CHECK(ab.lead() == q(11, 24));
  CHECK(ab.coefficient(q(11, 24), 1) == 1);
  CHECK(ab.coefficient(q(11, 24) + q(1, 2), 1) == 1);
  CHECK(ab.coefficient(q(11, 24) + q(1), 1) == 1);
  CHECK(ab.coefficient(q(11, 24) + q(3, 2), 1) == 1);
  CHECK(ab.top() == q(11, 24) + q(3));
}

TEST_CASE("invert examples") {
  // 1/(1 - p) = sum p^n
  const auto g = invert(series(0, 5, {{0, 0, 1, 1}, {1, 0, -1, 1}}));
  for (int n = 0; n <= 5; ++n) CHECK(g.coefficient(q(n), 0) == 1);

  // 1/(x (1 - p x^-2)) = x^-1 (1 + p x^-2 + p^2 x^-4 + ...)
  const auto h = invert(series(1, 4, {{0, 1, 1, 1}, {1, -1, -1, 1}}));
  CHECK(h.level() == -1);
  for (int n = 0; n <= 4; ++n) CHECK(h.coefficient(q(n), -1 - 2 * n) == 1);

  // 1/(1 + p(x^2 + x^-2)) through p^2
  const auto f = series(0, 2, {{0, 0, 1, 1}, {1, 2, 1, 1}, {1, -2, 1, 1}});
  const auto expected = series(0, 2, {{0, 0, 1, 1}, {1, 2, -1, 1}, {1, -2, -1, 1}, {2, 4, 1, 1}, {2, 0, 2, 1}, {2, -4, 1, 1}});
  CHECK_SERIES_EQ(invert(f), expected);
  CHECK_SERIES_EQ(f * invert(f), NomeSeries::one(2));

  CHECK_THROWS_AS(invert(series(0, 2, {{0, 1, 1, 1}, {0, -1, 1, 1}})), SeriesError);
}

TEST_CASE("pow_rational examples") {
  const auto one_minus_p = series(0, 8, {{0, 0, 1, 1}, {1, 0, -1, 1}});
  const auto root = pow_rational(one_minus_p, q(1, 2));
  CHECK(root.coefficient(q(1), 0) == q(-1, 2));
  CHECK(root.coefficient(q(2), 0) == q(-1, 8));
  CHECK(root.coefficient(q(3), 0) == q(-1, 16));
  CHECK_SERIES_EQ(root * root, one_minus_p);
  CHECK_SERIES_EQ(pow_rational(one_minus_p, q(-1)), invert(one_minus_p));
  CHECK_SERIES_EQ(pow_rational(eta_series(6), q(0)), NomeSeries::one(6));
  CHECK_THROWS_AS(pow_rational(series(0, 3, {{0, 0, 2, 1}, {1, 0, 1, 1}}), q(1, 2)), SeriesError);
  CHECK_THROWS_AS(pow_rational(series(0, 3, {{0, 0, 1, 1}, {0, 2, 1, 1}}), q(1, 2)), SeriesError);
}

TEST_CASE("pow_rational carries fractional leads") {
  const auto e = eta_series(10);
  const auto cube = pow_rational(e, q(3));
  CHECK(cube.lead() == q(1, 8));
  CHECK_SERIES_EQ(cube, e * e * e);
  const auto third = pow_rational(e, q(1, 3));
  CHECK(third.lead() == q(1, 72));
  CHECK_SERIES_EQ(third * third * third, e);
}

TEST_CASE("p_derivative, shift and substitutions") {
  const auto f = series(0, 4, {{0, 0, 1, 1}, {2, 1, 3, 1}}, q(1, 2));
  const auto d = p_derivative(f);
  CHECK(d.coefficient(q(1, 2), 0) == q(1, 2));
  CHECK(d.coefficient(q(5, 2), 1) == q(15, 2));
  CHECK(shift_p(f, q(1)).lead() == q(3, 2));
  const auto sx = substitute_x(f, -2);
  CHECK(sx.coefficient(q(5, 2), -2) == 3);
  const auto sp = substitute_p(series(0, 4, {{0, 0, 1, 1}, {1, 0, 1, 1}}), q(1, 2));
  CHECK(sp.coefficient(q(1, 2), 0) == 1);
}

TEST_CASE("SeriesBuilder picks the coarsest grid") {
  SeriesBuilder b(0, q(1, 4), q(2));
  b.add(q(1, 4), 0, q(1));
  b.add(q(5, 4), 1, q(2));
  b.add(q(9, 4), 1, q(7));  // above the top, dropped
  const auto s = b.build();
  CHECK(s.grid() == 1);
  CHECK(s.coefficient(q(5, 4), 1) == 2);
  CHECK(s.top() == q(9, 4));
}

TEST_CASE("eval_numeric examples") {
  const Complex i(0, 1);
  CHECK(std::abs(eval_numeric(NomeSeries::one(3), Complex(0.3, 0.1), Complex(0.2, 0), Complex(0.1, 0.9)) - 1.0) < 1e-15);
  const auto p8 = series(0, 0, {{0, 0, 1, 1}}, q(1, 8));
  CHECK(std::abs(eval_numeric(p8, 0.0, 0.0, i) - std::exp(-std::numbers::pi / 4)) < 1e-15);
  CHECK(std::abs(eval_numeric(eta_series(30), 0.0, 0.0, i) - 0.76822542232605665) < 1e-14);
  // the level tag contributes e^{2 pi i K u}
  const auto lv = series(3, 0, {{0, 0, 1, 1}});
  CHECK(std::abs(eval_numeric(lv, 0.0, 0.1, i) - std::exp(2.0 * std::numbers::pi * i * 0.3)) < 1e-14);
  CHECK_THROWS_AS(eval_numeric(p8, 0.0, 0.0, Complex(0.2, 0)), std::domain_error);
}

TEST_CASE("eta against a naive Euler product") {
  const int order = 25;
  std::vector<long> prod(order + 1, 0);
  prod[0] = 1;
  for (int m = 1; m <= order; ++m)
    for (int n = order; n >= m; --n) prod[static_cast<std::size_t>(n)] -= prod[static_cast<std::size_t>(n - m)];
  const auto e = eta_series(order);
  CHECK(e.lead() == q(1, 24));
  for (int n = 0; n <= order; ++n) CHECK(e.coefficient(q(1, 24) + q(n), 0) == prod[static_cast<std::size_t>(n)]);
}

TEST_CASE("ring axioms on random series") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = testutil::random_series(rng, 1, 5);
    const auto b = testutil::random_series(rng, 1, 5);
    const auto c = testutil::random_series(rng, 1, 5);
    CHECK_SERIES_EQ((a * b) * c, a * (b * c));
    CHECK_SERIES_EQ(a * (b + c), a * b + a * c);
    CHECK_SERIES_EQ(a * b, b * a);
    CHECK_SERIES_EQ(a + b, b + a);
    CHECK_SERIES_EQ(a - a, scale(a, q(0)));
  }
}

TEST_CASE("invert is a two-sided inverse for monomial leads") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = testutil::random_series(rng, 2, 6, true);
    a = mul_monomial(a, trial % 5 - 2, q(trial + 1, 3));
    CHECK_SERIES_EQ(a * invert(a), NomeSeries::one(6));
  }
}

TEST_CASE("pow_rational is additive in the exponent") {
  std::mt19937 rng(13);
  const Rational exps[][2] = {{q(1, 2), q(1, 3)}, {q(-2, 5), q(7, 4)}, {q(3), q(-1, 6)}, {q(5, 7), q(-5, 7)}};
  for (int trial = 0; trial < 8; ++trial) {
    const auto a = testutil::random_series(rng, 0, 6, true);
    const auto& [c1, c2] = exps[trial % 4];
    CHECK_SERIES_EQ(pow_rational(a, c1 + c2), pow_rational(a, c1) * pow_rational(a, c2));
  }
}

TEST_CASE("numeric evaluation is multiplicative") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> re(-0.5, 0.5);
  const Complex tau(0.1, 4.0);  // |p| ~ 1e-11, so the order-4 tail is far below 1e-12
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = testutil::random_series(rng, 1, 4);
    const auto b = testutil::random_series(rng, 2, 4);
    const Complex z(re(rng), 0.05 * re(rng)), u(re(rng), 0);
    const Complex lhs = eval_numeric(a * b, z, u, tau);
    const Complex rhs = eval_numeric(a, z, u, tau) * eval_numeric(b, z, u, tau);
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("series JSON round trip") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 5; ++trial) {
    auto a = testutil::random_series(rng, trial, 4);
    a = shift_p(a, q(trial, 7));
    const auto text = to_json(a);
    const auto back = series_from_json(text);
    CHECK(back == a);
    CHECK(to_json(back) == text);
  }
  const auto e = eta_series(3, q(1, 2));
  CHECK(series_from_json(to_json(e, 2)) == e);
  CHECK_THROWS_AS(series_from_json("{\"level\": 1}"), SeriesError);
  CHECK_THROWS_AS(series_from_json("not json"), SeriesError);
}

TEST_CASE("series JSON field layout") {
  const auto s = series(1, 1, {{0, 1, 1, 2}}, q(-1, 24));
  CHECK(to_json(s) ==
        R"({"level":1,"gridDenominator":1,"lead":"-1/24","order":1,"coeffs":[{"n":0,"terms":[{"j":1,"c":"1/2"}]}]})");
}
