#include "ajack/affine.hpp"

#include <stdexcept>

#include "ajack/theta.hpp"

namespace ajack {

Rational form(const AffineWeight& a, const AffineWeight& b) {
  return make_rational(static_cast<long>(a.j) * b.j, 2) - a.depth * b.level - b.depth * a.level;
}

AffineWeight rho_hat() { return AffineWeight{1, Rational(0), 2}; }

bool dominance_leq(const AffineWeight& mu, const AffineWeight& lambda) {
  if (mu.level != lambda.level) throw std::invalid_argument("dominance_leq: level mismatch");
  const Rational a = mu.depth - lambda.depth;
  if (!is_integer(a) || a < 0) return false;
  const int dj = lambda.j - mu.j;
  if (dj % 2 != 0) return false;
  const Rational b = a + dj / 2;
  return b >= 0;
}

std::vector<AffineWeight> orbit_weights(int l, int K, int order) {
  if (K < 0 || l < 0 || l > K) throw std::invalid_argument("orbit: need 0 <= l <= K");
  if (order < 0) throw std::invalid_argument("orbit: negative order");
  std::vector<AffineWeight> out;
  if (K == 0) {
    out.push_back({0, Rational(0), 0});
    return out;
  }
  for (long b = 0;; ++b) {
    bool any = false;
    for (int side = 0; side < (b == 0 ? 1 : 2); ++side) {
      const long bb = side == 0 ? b : -b;
      for (int sgn : {1, -1}) {
        // -l + 2Kb repeats l + 2Kb' when l is 0 or K.
        if (sgn == -1 && (l == 0 || l == K)) continue;
        const long j = sgn * l + 2L * K * bb;
        const long num = j * j - static_cast<long>(l) * l;
        const Rational depth = make_rational(num, 4L * K);
        if (depth > order) continue;
        any = true;
        out.push_back({static_cast<int>(j), depth, K});
      }
    }
    if (!any) break;
  }
  return out;
}

NomeSeries orbit_sum(int l, int K, int order, const Rational& depth) {
  SeriesBuilder b(K, depth, Rational(order));
  for (const auto& w : orbit_weights(l, K, order)) b.add(depth + w.depth, w.j, Rational(1));
  return b.build();
}

NomeSeries weyl_denominator(int k, int order) {
  if (k < 0) throw std::invalid_argument("weyl_denominator: negative power");
  if (order < 0) throw SeriesError("negative truncation order");
  auto d = NomeSeries::zero(2, 1, Rational(0), order);
  d.coeff_mut(0) = LaurentX::monomial(1, Rational(1)) - LaurentX::monomial(-1, Rational(1));
  // Multiply in place by (1 - x^a p^r): c_n -= x^a c_{n-r}, descending n.
  auto apply = [&](int a, int r) {
    for (int n = order; n >= r; --n) {
      const LaurentX& src = d.coeff(n - r);
      if (src.is_zero()) continue;
      d.coeff_mut(n) -= src.shifted(a);
    }
  };
  for (int r = 1; r <= order; ++r) {
    apply(-2, r);
    apply(2, r);
    apply(0, r);
  }
  if (k == 1) return d;
  NomeSeries out = NomeSeries::constant(LaurentX(Rational(1)), 0, order);
  for (int i = 0; i < k; ++i) out = mul(out, d);
  return out;
}

NomeSeries weyl_denominator_shifted(int m, int order) {
  return shift_p(weyl_denominator(m, order), make_rational(m, 8));
}

Rational character_lead(int l, int K) {
  return make_rational(2L * l * (l + 2) - K, 8L * (K + 2));
}

NomeSeries character(int l, int K, int order) {
  if (K < 0 || l < 0 || l > K) throw std::invalid_argument("character: need 0 <= l <= K");
  const int kappa = K + 2;
  const NomeSeries num = theta_level_series(l + 1, kappa, order, 2) - theta_level_series(-(l + 1), kappa, order, 2);
  const NomeSeries den = theta_level_series(1, 2, order, 2) - theta_level_series(-1, 2, order, 2);
  return divide(num, den);
}

}  // namespace ajack

namespace ajack {

IdentityCheck triple_product_check(int order) {
  const ScaledSeries lhs(weyl_denominator_shifted(1, order));
  const ScaledSeries t1 = theta_series(ThetaKind::theta1, order, 2);
  const ScaledSeries it1 = mul(ScaledSeries(NomeSeries::one(order + 1), 1), t1);
  const ScaledSeries rhs(it1.series.with_level(2), it1.ipow, it1.two_exp);
  return compare_series("p^{1/8} delta-hat = i theta_1(2z|tau)", lhs, rhs);
}

std::vector<IdentityCheck> level2_character_identities(int order) {
  const NomeSeries c0 = character(0, 2, order);
  const NomeSeries c1 = character(1, 2, order);
  const NomeSeries c2 = character(2, 2, order);
  const NomeSeries eta1 = eta_series(order + 1);
  const NomeSeries eta2 = eta_series(order + 1, Rational(2));
  const NomeSeries etah = eta_series(order + 1, make_rational(1, 2));
  const NomeSeries eta_sq = mul(eta1, eta1);
  auto th = [&](ThetaKind kind) { return theta_series(kind, order + 1, 2).normalized().series.with_level(2); };
  std::vector<IdentityCheck> out;
  out.push_back(compare_series("chi_{L0+L1} = theta_2(2z) eta(2tau)/eta^2", c1, mul(th(ThetaKind::theta2), divide(eta2, eta_sq))));
  out.push_back(compare_series("chi_{2L0} - chi_{2L1} = theta_0(2z) eta(tau/2)/eta^2", c0 - c2,
                               mul(th(ThetaKind::theta0), divide(etah, eta_sq))));
  out.push_back(compare_series("chi_{2L0} + chi_{2L1} = theta_3(2z) eta/(eta(tau/2) eta(2tau))", c0 + c2,
                               mul(th(ThetaKind::theta3), divide(eta1, mul(etah, eta2)))));
  return out;
}

}  // namespace ajack
