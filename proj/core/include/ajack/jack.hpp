#pragma once

// Affine Calogero-Sutherland operators and affine Jack polynomials of sl_2-hat.

#include "ajack/affine.hpp"
#include "ajack/check.hpp"
#include "ajack/qseries.hpp"

namespace ajack {

/// (K, k, l) with kappa = K + 2k and k <= l <= kappa - k; lambda = (l - k) Lambda1bar.
struct JackLabel {
  int K = 0;
  int k = 1;
  int l = 1;

  int kappa() const { return K + 2 * k; }
  int j() const { return l - k; }
  /// Throws std::invalid_argument unless K >= 0, k >= 1, k <= l <= K + k.
  void validate() const;
};

class ResonanceError : public SeriesError {
 public:
  using SeriesError::SeriesError;
};

struct JackResult {
  JackLabel label;
  Rational seed_depth;
  /// Jhat: leading orbit-sum coefficient 1, lead = seed_depth.
  NomeSeries unnormalized;
  Rational alpha;
  /// p^{-alpha} Jhat (at seed depth 0 this is J_{lambda,K}).
  NomeSeries normalized;
  Rational eigenvalue;
  /// Coefficients c_mu on the dominant weights mu <= lambda, in processing order.
  std::vector<std::pair<AffineWeight, Rational>> orbit_coefficients;
};

/// Multiplies the coefficient of x^j p^e by j^2/2 - 2 e K, K the series level.
NomeSeries apply_Delta(const NomeSeries& f);
/// The operator M_k on a Weyl-invariant series of level K.
NomeSeries apply_M(const NomeSeries& f, int k);
/// The Calogero-Sutherland operator L_k; its heat term uses the operand's own level.
NomeSeries apply_L(const NomeSeries& g, int k);

/// (lambda-hat, lambda-hat + 2k rho-hat) for the seed at the given depth.
Rational jack_eigenvalue(const JackLabel& label, const Rational& seed_depth = Rational(0));
/// alpha = k/8 - l^2/(4 kappa).
Rational jack_alpha(const JackLabel& label);

/// Eigen-recursion in the orbit-sum basis, known through p^{seed_depth + order}.
JackResult jack_series(const JackLabel& label, int order, const Rational& seed_depth = Rational(0));
NomeSeries jack_normalized(const JackLabel& label, int order);

/// Eigen residual, eigenvalue (l^2 - k^2)/2, dominance support, x -> 1/x symmetry and the
/// depth shift Jhat_{lambda + delta} = p Jhat_lambda, for one label.
std::vector<IdentityCheck> jack_structure_checks(const JackLabel& label, int order);

/// L_k(dhat^k f) - (k^2/2) dhat^k f = dhat^k M_k(f) for the probe f = m_{l Lambda1bar + K Lambda0}.
IdentityCheck conjugation_check(int K, int l, int k, int order);

/// The level-1 and level-2 closed forms in characters and eta quotients. Throws
/// std::invalid_argument for K outside {1, 2}.
ScaledSeries closed_form(const JackLabel& label, int order);

/// b_{lambda,mu}, mu = 0..K, with J_lambda = sum_mu b_{lambda,mu} chi_mu.
std::vector<NomeSeries> transition_row(const JackLabel& label, int order);

/// sum_mu (k-1) b_mu Delta chi_mu + 2 kappa (p d/dp b_mu) chi_mu vanishes, one check per label.
std::vector<IdentityCheck> heat_check(int K, int k, int order);

/// Delta chi / chi = 4 p d/dp ln F for the three level-2 combinations, in the form
/// Delta(chi) F = 4 chi p dF/dp.
std::vector<IdentityCheck> level2_laplacian_identities(int order);

/// Delta chi_i = 2 chi_i p d/dp ln eta at level 1.
std::vector<IdentityCheck> level1_laplacian_identities(int order);

}  // namespace ajack
