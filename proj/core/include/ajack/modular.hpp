#pragma once

// Modular S and T data for the affine Jack polynomials: S(K,k) by two constructions, the
// closed fixture tables, the g-normalization, S^J(K,k) and the numeric S-transformation check.

#include <Eigen/Dense>

#include <map>
#include <optional>

#include "ajack/check.hpp"
#include "ajack/jack.hpp"

namespace ajack {

/// Matrix indexed by m, l in {k, ..., kappa - k}; entry (m, l) sits at (m - k, l - k).
struct SMatrix {
  int K = 0;
  int k = 1;
  Eigen::MatrixXcd entries;

  int kappa() const { return K + 2 * k; }
  int first() const { return k; }
  int last() const { return K + k; }
  std::complex<double> at(int m, int l) const { return entries(m - k, l - k); }
};

enum class SForm { product, macdonald, fixture };
SForm parse_sform(const std::string& name);
std::string to_string(SForm form);

/// sin(pi j / kappa), kappa = K + 2k.
double sinq(int K, int k, int j);

/// From U A^{k-1} over Z/2kappa with the fusion and reflection reductions onto the alcove basis.
SMatrix build_S_product(int K, int k);

/// One-row Macdonald polynomial P_(n)(q^{-m}, q^m; q^2, q^{2k}) at q = e^{pi i / kappa}.
Complex macdonald_special(int kappa, int k, int n, int m);

/// (-2)^{k-1} diag(prod_j s(m - j)) [P^{(k)}_{m-k}(l)] diag(s(l)).
SMatrix build_S_macdonald(int K, int k);

/// The displayed closed forms for K in {0, ..., 4}. Throws std::invalid_argument otherwise.
SMatrix fixture_S(int K, int k);
/// The second displayed normalization of S(3,k) (with a'', b'', c'').
SMatrix fixture_S3_alternate(int k);

SMatrix build_S(int K, int k, SForm form);

/// K = 4 fixture scalars b, c, d, e, g.
struct K4Scalars {
  double b, c, d, e, g;
};
K4Scalars k4_scalars(int k);

enum class SelbergMode { closed, quadrature };

/// B_n(alpha, beta, gamma) over the ordered simplex 0 <= t_n < ... < t_1 <= 1.
/// Quadrature supports n <= 2 with alpha, beta, gamma > 0. Throws std::domain_error at Gamma poles.
double selberg_B(int n, double alpha, double beta, double gamma, SelbergMode mode);

/// g_{m,K,k} / g_{m+n,K,k} from the Gamma-product formula.
double g_ratio_step(int K, int k, int m, int n);
/// g_{m,K,k} / g_{l,K,k}.
double g_ratio(int K, int k, int m, int l);
/// g_{m,K,k} from the Selberg closed form with the stated branch prefactors.
Complex g_absolute(int K, int k, int m);

/// Constant part of S^J(K,k) and the projective weight -(k-1)K/(2 kappa).
struct SJData {
  SMatrix constant;
  Rational weight;
};
SJData build_SJ(int K, int k);

/// The displayed matrices for S^J(1,k) and S^J(2,k) (constant parts).
SMatrix displayed_SJ(int K, int k);

/// e^{2 pi i (-k kappa + 2 l^2) / (8 kappa)}.
Complex t_phase(int K, int k, int l);
Eigen::MatrixXcd t_matrix(int K, int k);

/// Result of fitting a unimodular scalar c with lhs ~ c * rhs.
struct Proportionality {
  Complex scalar;
  double deviation = 0;  // max entry |lhs - c rhs|
  double modulus_error = 0;  // ||c| - 1|
  bool ok(double tol) const { return deviation < tol && modulus_error < tol; }
};
Proportionality fit_scalar(const Eigen::MatrixXcd& lhs, const Eigen::MatrixXcd& rhs);

struct RelationsReport {
  int K = 0, k = 1;
  Proportionality s_squared;  // (S^J)^2 ~ c id
  Proportionality st_cubed;   // (S^J T^J)^3 ~ c (S^J)^2
};
RelationsReport projective_relations(int K, int k);

struct ModularReport {
  int K = 0, k = 1, order = 0;
  Complex z, u, tau;
  std::vector<Complex> lhs, rhs;
  Complex scalar;
  double deviation = 0;  // max |lhs - c rhs| / max |rhs|
  double modulus_error = 0;
  double tail = 0;
  bool ok(double tol) const { return deviation < tol && modulus_error < tol && tail < tol; }
};
/// J_m(z/tau, u - z^2/tau, -1/tau) against tau^w sum_l S^J_{m,l} J_l(z, u, tau), with one fitted
/// global scalar. Throws std::domain_error when Im tau <= 0 or the truncation tail exceeds tol/10.
ModularReport verify_modular_numeric(int K, int k, Complex z, Complex u, Complex tau, int order, double tol);

/// Max entrywise |a - b|; throws on shape mismatch.
double max_abs_diff(const SMatrix& a, const SMatrix& b);

std::string smatrix_json(const SMatrix& s, int indent = -1);
std::string smatrix_csv(const SMatrix& s);

}  // namespace ajack
