#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <stdexcept>

#include "ajack/modular.hpp"

namespace ajack {

namespace {

double gamma_checked(double x) {
  if (x <= 0 && std::nearbyint(x) == x) throw std::domain_error("Gamma pole at " + std::to_string(x));
  return std::tgamma(x);
}

double selberg_closed(int n, double a, double b, double g) {
  double r = 1.0;
  for (int j = 1; j <= n; ++j) r /= j;
  for (int j = 0; j < n; ++j)
    r *= gamma_checked(1 + (1 + j) * g) * gamma_checked(a + j * g) * gamma_checked(b + j * g) /
         (gamma_checked(1 + g) * gamma_checked(a + b + (n + j - 1) * g));
  return r;
}

/// Iterated integral over 0 <= t_2 < t_1 <= 1; tanh-sinh copes with the endpoint powers.
double selberg_quadrature(int n, double a, double b, double g) {
  if (a <= 0 || b <= 0 || g <= 0) throw std::domain_error("selberg quadrature needs alpha, beta, gamma > 0");
  if (n > 2) throw std::domain_error("selberg quadrature supports n <= 2");
  boost::math::quadrature::tanh_sinh<double> ts;
  auto w = [&](double t) { return std::pow(t, a - 1) * std::pow(1 - t, b - 1); };
  double err = 0;
  double value = 0;
  if (n == 1) {
    value = ts.integrate(w, 0.0, 1.0, 1e-12, &err);
  } else {
    auto outer = [&](double t1) {
      auto inner = [&](double t2) { return w(t2) * std::pow(t1 - t2, 2 * g); };
      return w(t1) * ts.integrate(inner, 0.0, t1, 1e-12);
    };
    value = ts.integrate(outer, 0.0, 1.0, 1e-10, &err);
  }
  if (!(err <= 1e-8 * std::abs(value))) throw std::domain_error("selberg quadrature did not converge");
  return value;
}

}  // namespace

double selberg_B(int n, double alpha, double beta, double gamma, SelbergMode mode) {
  if (n < 0) throw std::invalid_argument("selberg_B: n must be >= 0");
  if (n == 0) return 1.0;
  return mode == SelbergMode::closed ? selberg_closed(n, alpha, beta, gamma) : selberg_quadrature(n, alpha, beta, gamma);
}

}  // namespace ajack
