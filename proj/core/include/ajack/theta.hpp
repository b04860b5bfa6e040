#pragma once

// Jacobi theta functions, level-kappa theta functions and the Dedekind eta function, both as
// exact series in x = e^{2 pi i z}, p = e^{2 pi i tau} and as complex numbers.

#include "ajack/check.hpp"
#include "ajack/qseries.hpp"

namespace ajack {

enum class ThetaKind { theta0, theta1, theta2, theta3 };

ThetaKind parse_theta_kind(const std::string& name);
std::string to_string(ThetaKind kind);

/// theta_kind(s z | r tau) for s = arg_scale, r = tau_scale, known through p^{lead + order}.
/// theta_1 carries its factor i in the ScaledSeries scalar. Level tag 0.
/// Throws SeriesError when an x-power would be half-integral.
ScaledSeries theta_series(ThetaKind kind, int order, int arg_scale = 1,
                          const Rational& tau_scale = Rational(1));

Complex theta_numeric(ThetaKind kind, Complex v, Complex tau);
/// d/dv theta_1(v|tau) at v = 0, from the differentiated sum.
Complex theta1_prime0(Complex tau);

/// eta(r tau) = p^{r/24} prod (1 - p^{r n}), known through p^{r/24 + order}.
NomeSeries eta_series(int order, const Rational& scale = Rational(1));
Complex eta_numeric(Complex tau);

/// sum_{l in Z + n/2kappa} p^{kappa l^2} e^{2 pi i kappa l s z}, level kappa, known through
/// p^{lead + order}. Equals theta_{-m,kappa} of the integrand at n = -m, x = s z.
NomeSeries theta_level_series(int n, int kappa, int order, int arg_scale = 2);
Complex theta_level_numeric(int n, int kappa, Complex x, Complex tau);

/// 2 pi i theta_1(v) / theta_1'(0).
Complex ell_E(Complex v, Complex tau);
/// theta_1'(0) theta_1(v + 2z) / (theta_1(2z) theta_1(v)). Throws std::domain_error at the poles.
Complex ell_G(Complex v, Complex z, Complex tau);

/// Exact theta-function identities at level 4 (z replaced by 2z where a factor would otherwise
/// carry half-integral x-powers), known through p^{lead + order}.
std::vector<IdentityCheck> level4_theta_identities(int order);

/// The S-laws of theta_1, theta_1'(0), E, G and theta_{-m,kappa} at `points` pseudo-random
/// (v, z, tau, kappa, m) with Im tau in [0.5, 2]; one check per law, maximum relative error.
std::vector<IdentityCheck> theta_s_laws(int points, unsigned seed, double tol);
/// theta_1(v|tau+1) = e^{i pi/4} theta_1(v|tau) and theta_{m,kappa}(v|tau+1) = e^{i pi m^2/2kappa} theta_{m,kappa}(v|tau).
std::vector<IdentityCheck> theta_t_laws(int points, unsigned seed, double tol);

/// Exact comparison of scaled series with a readable first difference.
IdentityCheck compare_series(const std::string& name, const ScaledSeries& lhs, const ScaledSeries& rhs);
IdentityCheck compare_series(const std::string& name, const NomeSeries& lhs, const NomeSeries& rhs);

}  // namespace ajack
