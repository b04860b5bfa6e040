#pragma once

// Weights of affine sl_2, orbit sums, the affine Weyl denominator and integrable characters.

#include "ajack/check.hpp"
#include "ajack/qseries.hpp"

namespace ajack {

/// j Lambda1bar - depth delta + level Lambda0. As a monomial this is x^j p^depth at level `level`.
struct AffineWeight {
  int j = 0;
  Rational depth;
  int level = 0;

  friend bool operator==(const AffineWeight&, const AffineWeight&) = default;
};

/// (j Lambda1bar + a delta + K Lambda0, j' Lambda1bar + a' delta + K' Lambda0) = j j'/2 + a K' + a' K.
Rational form(const AffineWeight& a, const AffineWeight& b);

/// The weight rho-hat = Lambda1bar + 2 Lambda0.
AffineWeight rho_hat();

/// mu <= lambda in the dominance order: lambda - mu = a alpha_0 + b alpha_1 with a, b >= 0.
/// Throws std::invalid_argument on a level mismatch.
bool dominance_leq(const AffineWeight& mu, const AffineWeight& lambda);

/// Orbit weights of l Lambda1bar + K Lambda0 (seed depth 0) up to depth `order`, without repeats.
std::vector<AffineWeight> orbit_weights(int l, int K, int order);

/// m_{l Lambda1bar + K Lambda0 - depth delta}, known through p^{depth + order}.
NomeSeries orbit_sum(int l, int K, int order, const Rational& depth = Rational(0));

/// delta-hat^k = (x prod_{r>=0} (1 - x^{-2} p^r) prod_{r>=1} (1 - x^2 p^r)(1 - p^r))^k,
/// level 2k, known through p^order.
NomeSeries weyl_denominator(int k, int order);

/// (p^{1/8} delta-hat)^m.
NomeSeries weyl_denominator_shifted(int m, int order);

/// Normalized character of L(l Lambda1bar + K Lambda0), known through p^{lead + order}.
NomeSeries character(int l, int K, int order);

/// h_l - c/24 = (2 l (l + 2) - K) / (8 (K + 2)).
Rational character_lead(int l, int K);

/// p^{1/8} delta-hat = i theta_1(2z|tau), through p^{1/8 + order}.
IdentityCheck triple_product_check(int order);

/// The level-2 character identities chi_1 = theta_2(2z) eta(2tau)/eta^2,
/// chi_0 - chi_2 = theta_0(2z) eta(tau/2)/eta^2, chi_0 + chi_2 = theta_3(2z) eta/(eta(tau/2) eta(2tau)).
std::vector<IdentityCheck> level2_character_identities(int order);

}  // namespace ajack
