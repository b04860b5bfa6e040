#include <Eigen/Dense>
#include <cmath>
#include <nlohmann/json.hpp>
#include <numbers>

#include "ajack/modular.hpp"
#include "test_util.hpp"

using namespace ajack;

namespace {
constexpr double kPi = std::numbers::pi;
const Complex I(0, 1);

double s_of(int kappa, int j) { return std::sin(kPi * j / kappa); }

/// sigma^{(k)}_{n,m} at fixed kappa, built upward from sigma^{(1)}_{n,m} = s(nm) by the
/// k -> k+1 recurrence; indices n, m range over 0..kappa.
Eigen::MatrixXd sigma_oracle(int kappa, int k) {
  Eigen::MatrixXd sig(kappa + 1, kappa + 1);
  for (int n = 0; n <= kappa; ++n)
    for (int m = 0; m <= kappa; ++m) sig(n, m) = s_of(kappa, n * m);
  for (int level = 2; level <= k; ++level) {
    Eigen::MatrixXd next = Eigen::MatrixXd::Zero(kappa + 1, kappa + 1);
    for (int n = 0; n <= kappa; ++n)
      for (int m = 1; m <= kappa - 1; ++m) {
        if (m + 1 >= kappa || m - 1 <= 0) continue;
        next(n, m) = sig(n, m + 1) / (2 * s_of(kappa, m + 1)) - sig(n, m - 1) / (2 * s_of(kappa, m - 1));
      }
    sig = next;
  }
  return sig;
}

/// One-row Macdonald polynomial P_(n)(x1, x2; Q, t) by solving the eigen-equation of
/// D = sum_i prod_{j != i} (t x_i - x_j) / (x_i - x_j) T_{Q, x_i} at sample points.
Complex macdonald_by_operator(int n, Complex Q, Complex t, Complex x1, Complex x2) {
  if (n == 0) return 1.0;
  const Complex eig = t * std::pow(Q, n) + 1.0;
  // P = x1^n + x2^n + sum_{a=1}^{n-1} c_a x1^a x2^{n-a}, symmetric: c_a = c_{n-a}
  auto mono = [&](int a, Complex y1, Complex y2) { return std::pow(y1, a) * std::pow(y2, n - a); };
  auto D = [&](auto&& f, Complex y1, Complex y2) {
    return (t * y1 - y2) / (y1 - y2) * f(Q * y1, y2) + (t * y2 - y1) / (y2 - y1) * f(y1, Q * y2);
  };
  const int unknowns = n - 1;
  const int samples = n + 4;
  Eigen::MatrixXcd A(samples, std::max(unknowns, 1));
  Eigen::VectorXcd b(samples);
  A.setZero();
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(0.5, 1.5), ph(0.0, 2 * kPi);
  for (int r = 0; r < samples; ++r) {
    const Complex y1 = std::polar(u(rng), ph(rng)), y2 = std::polar(u(rng), ph(rng));
    for (int a = 1; a <= n - 1; ++a) {
      auto f = [&](Complex w1, Complex w2) { return mono(a, w1, w2); };
      A(r, a - 1) = D(f, y1, y2) - eig * f(y1, y2);
    }
    auto lead = [&](Complex w1, Complex w2) { return mono(n, w1, w2) + mono(0, w1, w2); };
    b(r) = -(D(lead, y1, y2) - eig * lead(y1, y2));
  }
  Complex value = mono(n, x1, x2) + mono(0, x1, x2);
  if (unknowns > 0) {
    const Eigen::VectorXcd c = A.colPivHouseholderQr().solve(b);
    CHECK((A * c - b).norm() < 1e-9 * (1 + b.norm()));
    for (int a = 1; a <= n - 1; ++a) value += c(a - 1) * mono(a, x1, x2);
  }
  return value;
}

}  // namespace

TEST_CASE("sinq examples") {
  CHECK(std::abs(sinq(4, 2, 2) - std::sqrt(2.0) / 2) < 1e-15);
  for (int j = 0; j <= 8; ++j) CHECK(std::abs(sinq(4, 2, 8 - j) - sinq(4, 2, j)) < 1e-15);
  CHECK(std::abs(sinq(4, 2, 8)) < 1e-15);
}

TEST_CASE("Macdonald values against the eigen-operator oracle") {
  for (int kappa = 3; kappa <= 9; ++kappa)
    for (int k = 1; 2 * k <= kappa; ++k) {
      const int K = kappa - 2 * k;
      const Complex q = std::exp(I * kPi / static_cast<double>(kappa));
      for (int n = 0; n <= K; ++n)
        for (int m = k; m <= kappa - k; ++m) {
          const Complex want = macdonald_by_operator(n, q * q, std::pow(q, 2 * k), std::pow(q, -m), std::pow(q, m));
          CAPTURE(kappa);
          CAPTURE(k);
          CAPTURE(n);
          CAPTURE(m);
          CHECK(std::abs(macdonald_special(kappa, k, n, m) - want) < 1e-9);
        }
    }
}

TEST_CASE("Macdonald value examples") {
  for (int kappa = 3; kappa <= 8; ++kappa)
    for (int m = 0; m <= kappa; ++m) {
      CHECK(std::abs(macdonald_special(kappa, 2, 0, m) - 1.0) < 1e-14);
      // P_1 = x1 + x2
      CHECK(std::abs(macdonald_special(kappa, 2, 1, m) - 2 * std::cos(kPi * m / kappa)) < 1e-13);
      // k = 1: Schur polynomial, s(nm)/s(m) at n -> n+1
      if (m % kappa != 0)
        CHECK(std::abs(macdonald_special(kappa, 1, 3, m) - s_of(kappa, 4 * m) / s_of(kappa, m)) < 1e-12);
    }
  CHECK_THROWS_AS(macdonald_special(5, 1, -1, 1), std::invalid_argument);
}

TEST_CASE("difference recurrence of one-row Macdonald values") {
  for (int kappa = 4; kappa <= 10; ++kappa)
    for (int k = 1; k <= 3; ++k)
      for (int n = 1; n <= std::min(4, kappa - 2 * k); ++n)
        for (int x = -kappa; x <= kappa; ++x) {
          const Complex lhs = macdonald_special(kappa, k, n, x + 1) - macdonald_special(kappa, k, n, x - 1);
          const Complex rhs = 4 * s_of(kappa, -n) * s_of(kappa, x) * macdonald_special(kappa, k + 1, n - 1, x);
          CHECK(std::abs(lhs - rhs) < 1e-10);
        }
}

TEST_CASE("S(K,1) is the sine matrix") {
  for (int K = 0; K <= 6; ++K) {
    const SMatrix s = build_S_product(K, 1);
    for (int m = 1; m <= K + 1; ++m)
      for (int l = 1; l <= K + 1; ++l) CHECK(std::abs(s.at(m, l) - s_of(K + 2, m * l)) < 1e-12);
  }
}

TEST_CASE("all S constructions agree with the sigma recurrence") {
  for (int K = 0; K <= 4; ++K)
    for (int k = 1; k <= 5; ++k) {
      const int kappa = K + 2 * k;
      const Eigen::MatrixXd sig = sigma_oracle(kappa, k);
      for (SForm form : {SForm::product, SForm::macdonald, SForm::fixture}) {
        const SMatrix s = build_S(K, k, form);
        REQUIRE(s.entries.rows() == K + 1);
        double dev = 0;
        for (int m = k; m <= kappa - k; ++m)
          for (int l = k; l <= kappa - k; ++l) dev = std::max(dev, std::abs(s.at(m, l) - sig(m, l)));
        CAPTURE(K);
        CAPTURE(k);
        CAPTURE(to_string(form));
        CHECK(dev < 1e-10);
      }
    }
}

TEST_CASE("product route beyond the fixtures matches Macdonald") {
  for (int K = 5; K <= 7; ++K)
    for (int k = 1; k <= 4; ++k) CHECK(max_abs_diff(build_S_product(K, k), build_S_macdonald(K, k)) < 1e-10);
  CHECK_THROWS_AS(fixture_S(5, 1), std::invalid_argument);
}

TEST_CASE("fixture identities") {
  for (int k = 1; k <= 5; ++k) {
    CHECK(max_abs_diff(fixture_S(3, k), fixture_S3_alternate(k)) < 1e-10);
    const K4Scalars r = k4_scalars(k);
    CHECK(std::abs(r.g * r.c + 2 - 2 * r.b * r.d) < 1e-10);
    CHECK(std::abs(2 * r.b * r.d - 2 * r.e * r.e) < 1e-10);
    const double s1 = s_of(4 + 2 * k, 1), s2 = s_of(4 + 2 * k, 2);
    CHECK(std::abs(r.c - 2 * s_of(4 + 2 * k, k) * ((s2 / s1) * (s2 / s1) - 1)) < 1e-10);
  }
}

TEST_CASE("parse_sform") {
  CHECK(parse_sform("product") == SForm::product);
  CHECK(parse_sform("macdonald") == SForm::macdonald);
  CHECK(parse_sform("fixture") == SForm::fixture);
  CHECK_THROWS_AS(parse_sform("bogus"), std::invalid_argument);
}

TEST_CASE("Selberg integral") {
  // n = 1 is the Beta function
  for (auto [a, b] : {std::pair{1.0, 1.0}, std::pair{0.5, 2.5}, std::pair{3.0, 0.75}}) {
    const double beta = std::beta(a, b);
    CHECK(std::abs(selberg_B(1, a, b, 0.3, SelbergMode::closed) - beta) < 1e-13 * beta);
    CHECK(std::abs(selberg_B(1, a, b, 0.3, SelbergMode::quadrature) - beta) < 1e-8 * beta);
  }
  // n = 2, gamma = 1: (t1 - t2)^2 expands, half the square over [0,1]^2
  for (auto [a, b] : {std::pair{1.0, 1.0}, std::pair{1.5, 0.5}, std::pair{2.0, 3.0}}) {
    const double want = std::beta(a + 2, b) * std::beta(a, b) - std::beta(a + 1, b) * std::beta(a + 1, b);
    CHECK(std::abs(selberg_B(2, a, b, 1.0, SelbergMode::closed) - want) < 1e-12 * want);
    CHECK(std::abs(selberg_B(2, a, b, 1.0, SelbergMode::quadrature) - want) < 1e-7 * want);
  }
  CHECK(std::abs(selberg_B(1, 1, 1, 1, SelbergMode::closed) - 1.0) < 1e-15);
  CHECK(selberg_B(0, 1, 1, 1, SelbergMode::closed) == 1.0);
  CHECK(std::abs(selberg_B(2, 1.5, 0.75, 0.4, SelbergMode::closed) - selberg_B(2, 1.5, 0.75, 0.4, SelbergMode::quadrature)) <
        1e-7);
  CHECK_THROWS_AS(selberg_B(1, 0.0, 1.0, 1.0, SelbergMode::closed), std::domain_error);
  CHECK_THROWS_AS(selberg_B(3, 1.0, 1.0, 1.0, SelbergMode::quadrature), std::domain_error);
  CHECK_THROWS_AS(selberg_B(1, -1.0, 1.0, 1.0, SelbergMode::quadrature), std::domain_error);
}

TEST_CASE("g factors: ratios, absolute values and the reflection") {
  for (int K = 0; K <= 4; ++K)
    for (int k = 1; k <= 5; ++k) {
      const int kappa = K + 2 * k;
      for (int m = k; m <= kappa - k; ++m) {
        if (k == 1) CHECK(std::abs(g_ratio(K, k, k, m) - 1.0) < 1e-12);
        CHECK(std::abs(g_ratio(K, k, m, kappa - m) - 1.0) < 1e-10);
        for (int l = k; l <= kappa - k; ++l) {
          CHECK(std::abs(g_ratio(K, k, m, l) * g_ratio(K, k, l, m) - 1.0) < 1e-12);
          const Complex ratio = g_absolute(K, k, m) / g_absolute(K, k, l);
          CHECK(std::abs(ratio - g_ratio(K, k, m, l)) < 1e-8 * std::abs(ratio));
        }
      }
    }
  CHECK_THROWS_AS(g_ratio(1, 2, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(g_absolute(1, 2, 4), std::invalid_argument);
  CHECK(std::abs(g_absolute(2, 1, 2) - 1.0) < 1e-15);
}

TEST_CASE("S^J displays") {
  for (int K = 1; K <= 2; ++K)
    for (int k = 1; k <= 5; ++k) {
      const SJData sj = build_SJ(K, k);
      CHECK(sj.weight == testutil::q(-(k - 1) * K, 2 * (K + 2 * k)));
      CHECK(max_abs_diff(sj.constant, displayed_SJ(K, k)) < 1e-10);
    }
}

TEST_CASE("k = 1: S^J is real, symmetric and orthogonal") {
  for (int K = 0; K <= 6; ++K) {
    const Eigen::MatrixXcd s = build_SJ(K, 1).constant.entries;
    CHECK(s.imag().cwiseAbs().maxCoeff() < 1e-12);
    CHECK((s - s.transpose()).cwiseAbs().maxCoeff() < 1e-12);
    const Eigen::MatrixXd r = s.real();
    CHECK((r * r.transpose() - Eigen::MatrixXd::Identity(K + 1, K + 1)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("T phases") {
  CHECK(std::abs(t_phase(1, 1, 1) - std::exp(-2 * kPi * I / 24.0)) < 1e-15);
  for (int K = 0; K <= 4; ++K)
    for (int k = 1; k <= 4; ++k) {
      const Eigen::MatrixXcd t = t_matrix(K, k);
      for (int l = k; l <= K + k; ++l) {
        CHECK(std::abs(std::abs(t_phase(K, k, l)) - 1.0) < 1e-15);
        CHECK(std::abs(t(l - k, l - k) - t_phase(K, k, l)) < 1e-15);
      }
    }
}

TEST_CASE("projective relations") {
  for (int K = 0; K <= 4; ++K)
    for (int k = 1; k <= 4; ++k) {
      const RelationsReport r = projective_relations(K, k);
      CAPTURE(K);
      CAPTURE(k);
      CHECK(r.s_squared.ok(1e-8));
      CHECK(r.st_cubed.ok(1e-8));
    }
}

TEST_CASE("fit_scalar detects non-proportional matrices") {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Identity(2, 2);
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Identity(2, 2);
  b(1, 1) = -1.0;
  CHECK_FALSE(fit_scalar(a, b).ok(1e-8));
  const Proportionality p = fit_scalar(I * a, a);
  CHECK(std::abs(p.scalar - I) < 1e-15);
  CHECK(p.ok(1e-12));
  CHECK_FALSE(fit_scalar(2.0 * a, a).ok(1e-8));
}

TEST_CASE("numeric S-transformation") {
  for (int K = 1; K <= 2; ++K)
    for (int k = 1; k <= 3; ++k) {
      const ModularReport r = verify_modular_numeric(K, k, 0.17, 0.0, Complex(0, 1.3), 20, 1e-6);
      CAPTURE(K);
      CAPTURE(k);
      CHECK(r.ok(1e-6));
      CHECK(r.lhs.size() == static_cast<std::size_t>(K + 1));
    }
  const ModularReport r = verify_modular_numeric(2, 2, Complex(0.1, 0.02), 0.3, Complex(0.2, 1.1), 24, 1e-6);
  CHECK(r.ok(1e-6));
  CHECK_THROWS_AS(verify_modular_numeric(1, 2, 0.17, 0.0, Complex(0.3, -1.0), 20, 1e-6), std::domain_error);
  CHECK_THROWS_AS(verify_modular_numeric(1, 2, 0.17, 0.0, Complex(0, 0.2), 1, 1e-6), std::domain_error);
}

TEST_CASE("matrix output formats") {
  const SMatrix s = build_S_product(1, 2);
  const auto j = nlohmann::json::parse(smatrix_json(s));
  CHECK(j.at("K") == 1);
  CHECK(j.at("k") == 2);
  CHECK(j.at("rows") == nlohmann::json::array({2, 3}));
  REQUIRE(j.at("entries").size() == 2);
  CHECK(std::abs(j["entries"][0][1]["re"].get<double>() - s.at(2, 3).real()) < 1e-15);
  CHECK(j["entries"][1][0].contains("im"));
  CHECK(smatrix_json(s) == smatrix_json(build_S_product(1, 2)));
  const std::string csv = smatrix_csv(s);
  CHECK(std::count(csv.begin(), csv.end(), '\n') >= 2);
  CHECK_THROWS(max_abs_diff(build_S_product(1, 2), build_S_product(2, 2)));
}
