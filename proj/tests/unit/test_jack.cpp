#include <cmath>
#include <numbers>

#include "ajack/affine.hpp"
#include "ajack/jack.hpp"
#include "test_util.hpp"

using namespace ajack;
using testutil::q;

namespace {
constexpr double kPi = std::numbers::pi;

void require_all(const std::vector<IdentityCheck>& checks) {
  for (const auto& c : checks) {
    CAPTURE(c.detail);
    CHECK_MESSAGE(c.ok, c.name);
  }
}
}  // namespace

TEST_CASE("Delta examples") {
  NomeSeries one = testutil::series(2, 3, {{0, 0, 1, 1}});
  CHECK(apply_Delta(one).is_zero());
  NomeSeries x = testutil::series(1, 3, {{0, 1, 1, 1}});
  CHECK_SERIES_EQ(apply_Delta(x), testutil::series(1, 3, {{0, 1, 1, 2}}));
  NomeSeries px2 = testutil::series(1, 3, {{1, 2, 1, 1}});
  CHECK(apply_Delta(px2).is_zero());
  // the lead is part of the depth
  NomeSeries shifted = testutil::series(1, 3, {{0, 0, 1, 1}}, q(1, 2));
  CHECK(apply_Delta(shifted).coefficient(q(1, 2), 0) == -1);
}

TEST_CASE("M_k examples") {
  CHECK(apply_M(testutil::series(0, 4, {{0, 0, 1, 1}}), 3).is_zero());
  const NomeSeries m = apply_M(orbit_sum(1, 1, 3), 1);
  CHECK(m.coefficient(q(0), 1) == q(3, 2));
  CHECK(m.coefficient(q(0), -1) == q(3, 2));
}

TEST_CASE("L_1 is the heat operator") {
  std::mt19937 rng(7);
  for (int t = 0; t < 5; ++t) {
    const NomeSeries f = testutil::random_series(rng, 3, 5, false);
    NomeSeries heat = apply_Delta(f);
    CHECK_SERIES_EQ(apply_L(f, 1), heat);
  }
}

TEST_CASE("conjugation by the Weyl denominator") {
  for (int K = 0; K <= 2; ++K)
    for (int k = 1; k <= 3; ++k)
      for (int l = 0; l <= K; ++l) {
        const IdentityCheck c = conjugation_check(K, l, k, 6);
        CAPTURE(c.detail);
        CHECK_MESSAGE(c.ok, c.name);
      }
}

TEST_CASE("alpha and eigenvalue") {
  CHECK(jack_alpha({1, 1, 1}) == q(1, 24));
  CHECK(jack_alpha({1, 2, 2}) == q(1, 20));
  CHECK(jack_alpha({0, 1, 1}) == 0);
  for (int K = 0; K <= 4; ++K)
    for (int k = 1; k <= 4; ++k)
      for (int l = k; l <= K + k; ++l) {
        const JackLabel lab{K, k, l};
        CHECK(jack_eigenvalue(lab) == q(l * l - k * k, 2));
        // (lambda-hat, lambda-hat + 2k rho-hat) evaluated on the weight itself
        const AffineWeight w{l - k, q(0), K};
        CHECK(jack_eigenvalue(lab) == form(w, w) + 2 * k * form(rho_hat(), w));
        CHECK(jack_alpha(lab) == q(k, 8) - q(l * l, 4 * lab.kappa()));
      }
}

TEST_CASE("invalid labels throw") {
  CHECK_THROWS_AS(jack_series({1, 1, 0}, 4), std::invalid_argument);
  CHECK_THROWS_AS(jack_series({1, 1, 3}, 4), std::invalid_argument);
  CHECK_THROWS_AS(jack_series({-1, 1, 1}, 4), std::invalid_argument);
  CHECK_THROWS_AS(jack_series({1, 0, 0}, 4), std::invalid_argument);
  CHECK_THROWS_AS(closed_form({3, 1, 1}, 4), std::invalid_argument);
}

TEST_CASE("level 0 gives the constant 1") {
  for (int k = 1; k <= 4; ++k) {
    const JackResult r = jack_series({0, k, k}, 8);
    CHECK_SERIES_EQ(r.unnormalized, testutil::series(0, 8, {{0, 0, 1, 1}}));
    CHECK(r.orbit_coefficients.size() == 1);
  }
}

TEST_CASE("k = 1 Jack polynomials are characters") {
  for (int K = 0; K <= 3; ++K)
    for (int l = 1; l <= K + 1; ++l) {
      const NomeSeries j = jack_normalized({K, 1, l}, 8);
      CAPTURE(K);
      CAPTURE(l);
      CHECK_SERIES_EQ(j, character(l - 1, K, 8));
    }
  CHECK(jack_normalized({1, 1, 1}, 4).lead() == q(-1, 24));
}

TEST_CASE("k = 1 denominator times Jack is an integral theta difference") {
  for (int K = 0; K <= 2; ++K)
    for (int l = 1; l <= K + 1; ++l) {
      const NomeSeries prod = weyl_denominator(1, 10) * jack_series({K, 1, l}, 10).unnormalized;
      for (int i = 0; i <= prod.trunc(); ++i)
        for (const auto& [j, c] : prod.coeff(i).terms()) {
          CHECK(is_integer(c));
          CHECK(abs(c) <= 1);
        }
    }
}

TEST_CASE("structure suite") {
  for (int K = 0; K <= 3; ++K)
    for (int k = 1; k <= 3; ++k)
      for (int l = k; l <= K + k; ++l) require_all(jack_structure_checks({K, k, l}, 6));
}

TEST_CASE("normalized Jack picks up e^{-2 pi i alpha} under tau -> tau + 1") {
  const Complex tau(0.05, 0.9), z(0.12, 0.03);
  for (const JackLabel lab : {JackLabel{1, 2, 3}, JackLabel{2, 2, 2}, JackLabel{2, 3, 4}}) {
    const NomeSeries j = jack_normalized(lab, 30);
    const Complex ratio = eval_numeric(j, z, 0.0, tau + 1.0) / eval_numeric(j, z, 0.0, tau);
    const Complex want = std::exp(Complex(0, -2 * kPi * to_double(jack_alpha(lab))));
    CHECK(std::abs(ratio - want) < 1e-12);
  }
}

TEST_CASE("level-1 closed forms") {
  for (int k = 1; k <= 4; ++k)
    for (int l = k; l <= k + 1; ++l) {
      const JackLabel lab{1, k, l};
      CAPTURE(k);
      CAPTURE(l);
      CHECK(equal_through(ScaledSeries(jack_normalized(lab, 8)), closed_form(lab, 8)));
    }
}

TEST_CASE("level-2 closed forms") {
  for (int k = 1; k <= 3; ++k)
    for (int l = k; l <= k + 2; ++l) {
      const JackLabel lab{2, k, l};
      CAPTURE(k);
      CAPTURE(l);
      CHECK(equal_through(ScaledSeries(jack_normalized(lab, 8)), closed_form(lab, 8)));
    }
}

TEST_CASE("a perturbed Jack fails the closed form") {
  NomeSeries j = jack_normalized({1, 2, 2}, 6);
  j.coeff_mut(4).add_term(0, q(1, 1000));
  CHECK_FALSE(equal_through(ScaledSeries(j), closed_form({1, 2, 2}, 6)));
}

TEST_CASE("transition rows reproduce the Jack polynomial") {
  for (int K = 1; K <= 2; ++K)
    for (int k = 2; k <= 3; ++k)
      for (int l = k; l <= K + k; ++l) {
        const JackLabel lab{K, k, l};
        const auto row = transition_row(lab, 6);
        REQUIRE(row.size() == static_cast<std::size_t>(K + 1));
        NomeSeries sum = row[0] * character(0, K, 6);
        for (int m = 1; m <= K; ++m) sum = sum + row[static_cast<std::size_t>(m)] * character(m, K, 6);
        CHECK(equal_through(sum, jack_normalized(lab, 6), jack_normalized(lab, 6).lead() + 5));
      }
}

TEST_CASE("heat equation") {
  for (int K = 1; K <= 2; ++K)
    for (int k = 2; k <= 3; ++k) require_all(heat_check(K, k, 8));
}

TEST_CASE("Laplacian identities") {
  require_all(level1_laplacian_identities(20));
  require_all(level2_laplacian_identities(20));
}
