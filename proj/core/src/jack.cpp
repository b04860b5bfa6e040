#include "ajack/jack.hpp"

#include <stdexcept>

#include "ajack/theta.hpp"

namespace ajack {

namespace {

const LaurentX& one_minus_x2() {
  static const LaurentX v = LaurentX(Rational(1)) - LaurentX::monomial(2, Rational(1));
  return v;
}

std::vector<std::vector<int>> divisor_table(int t_max) {
  std::vector<std::vector<int>> divs(static_cast<std::size_t>(t_max) + 1);
  for (int r = 1; r <= t_max; ++r)
    for (int t = r; t <= t_max; t += r) divs[static_cast<std::size_t>(t)].push_back(r);
  return divs;
}

}  // namespace

void JackLabel::validate() const {
  if (K < 0) throw std::invalid_argument("level K must be >= 0");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (l < k || l > K + k)
    throw std::invalid_argument("l must satisfy k <= l <= K + k (got l = " + std::to_string(l) + ")");
}

NomeSeries apply_Delta(const NomeSeries& f) {
  NomeSeries out = f;
  const int K = f.level();
  for (int n = 0; n <= f.trunc(); ++n) {
    const Rational e = f.exponent(n);
    LaurentX c;
    for (const auto& [j, v] : f.coeff(n).terms())
      c.add_term(j, Rational(v * (make_rational(static_cast<long>(j) * j, 2) - 2 * e * K)));
    out.coeff_mut(n) = std::move(c);
  }
  return out;
}

NomeSeries apply_M(const NomeSeries& f, int k) {
  const int K = f.level();
  const int kappa = K + 2 * k;
  const int D = f.grid();
  const int N = f.trunc();
  NomeSeries out = NomeSeries::zero(K, D, f.lead(), N);
  const auto divs = divisor_table(N / D);
  const Rational two_k(2 * k);
  for (int n = 0; n <= N; ++n) {
    const LaurentX& c = f.coeff(n);
    if (c.is_zero()) continue;
    const Rational e = f.exponent(n);
    LaurentX diag;
    LaurentX d_alpha;
    for (const auto& [j, v] : c.terms()) {
      diag.add_term(j, Rational(v * (make_rational(static_cast<long>(j) * j, 2) + k * j - 2 * e * kappa)));
      d_alpha.add_term(j, Rational(v * j));
    }
    out.coeff_mut(n) += diag;
    // Real root alpha: -2k (d_alpha f) / (1 - x^2).
    out.coeff_mut(n) += divide_exact(d_alpha, one_minus_x2()) * Rational(-two_k);
    // Roots alpha + r delta, -alpha + r delta, r delta (r >= 1): 2k (root, mu) c at mu - m root.
    for (int t = 1; n + t * D <= N; ++t) {
      LaurentX& target = out.coeff_mut(n + t * D);
      for (int r : divs[static_cast<std::size_t>(t)]) {
        const int m = t / r;
        const long rK = static_cast<long>(r) * K;
        for (const auto& [j, v] : c.terms()) {
          target.add_term(j - 2 * m, Rational(two_k * (j + rK) * v));
          target.add_term(j + 2 * m, Rational(two_k * (rK - j) * v));
          target.add_term(j, Rational(two_k * rK * v));
        }
      }
    }
  }
  return out;
}

NomeSeries apply_L(const NomeSeries& g, int k) {
  NomeSeries out = apply_Delta(g);
  const long kk = static_cast<long>(k) * (k - 1);
  if (kk == 0) return out;
  const Rational pre(-2 * kk);
  const int D = g.grid();
  const int N = g.trunc();
  const auto divs = divisor_table(N / D);
  for (int n = 0; n <= N; ++n) {
    const LaurentX& c = g.coeff(n);
    if (c.is_zero()) continue;
    // p^0 term: x^2/(1 - x^2)^2.
    const LaurentX q = divide_exact(divide_exact(c.shifted(2), one_minus_x2()), one_minus_x2());
    out.coeff_mut(n) += q * pre;
    // p^s terms: sum_{m | s} m (x^{2m} + x^{-2m}).
    for (int s = 1; n + s * D <= N; ++s) {
      LaurentX& target = out.coeff_mut(n + s * D);
      for (int m : divs[static_cast<std::size_t>(s)]) {
        const Rational w = pre * m;
        target += c.shifted(2 * m) * w;
        target += c.shifted(-2 * m) * w;
      }
    }
  }
  return out;
}

Rational jack_eigenvalue(const JackLabel& label, const Rational& seed_depth) {
  const long j = label.j();
  return make_rational(j * j, 2) + label.k * j - 2 * seed_depth * label.kappa();
}

Rational jack_alpha(const JackLabel& label) {
  return make_rational(label.k, 8) - make_rational(static_cast<long>(label.l) * label.l, 4L * label.kappa());
}

JackResult jack_series(const JackLabel& label, int order, const Rational& seed_depth) {
  label.validate();
  if (order < 0) throw SeriesError("negative truncation order");
  const int K = label.K;
  const int k = label.k;
  const int jl = label.j();
  const Rational E = jack_eigenvalue(label, seed_depth);

  NomeSeries J = NomeSeries::zero(K, 1, seed_depth, order);
  NomeSeries acc = NomeSeries::zero(K, 1, seed_depth, order);
  JackResult res{label, seed_depth, J, jack_alpha(label), J, E, {}};

  for (int n = 0; n <= order; ++n) {
    for (int j = K; j >= 0; --j) {
      if ((j - jl) % 2 != 0 || 2 * n < j - jl) continue;
      const AffineWeight mu{j, seed_depth + n, K};
      Rational c;
      if (n == 0 && j == jl) {
        c = 1;
      } else {
        const Rational num = acc.coeff(n).coeff(j);
        const Rational gap = E - (make_rational(static_cast<long>(j) * j, 2) + k * j - 2 * mu.depth * label.kappa());
        if (gap == 0)
          throw ResonanceError("resonance at dominant weight j = " + std::to_string(j) + ", depth " + to_string(mu.depth));
        c = num / gap;
      }
      if (c == 0) continue;
      res.orbit_coefficients.emplace_back(mu, c);
      const NomeSeries m = orbit_sum(j, K, order - n, mu.depth).reframed(seed_depth, 1, seed_depth + order);
      J = J + scale(m, c);
      acc = acc + scale(apply_M(m, k), c);
    }
  }
  res.unnormalized = J;
  res.normalized = shift_p(J, -res.alpha);
  return res;
}

NomeSeries jack_normalized(const JackLabel& label, int order) { return jack_series(label, order).normalized; }

std::vector<IdentityCheck> jack_structure_checks(const JackLabel& label, int order) {
  const JackResult r = jack_series(label, order);
  const NomeSeries& J = r.unnormalized;
  const std::string tag = " K=" + std::to_string(label.K) + " k=" + std::to_string(label.k) + " l=" + std::to_string(label.l);
  std::vector<IdentityCheck> out;

  const NomeSeries residual = apply_M(J, label.k) - scale(J, r.eigenvalue);
  IdentityCheck eig{"eigen residual" + tag, true, "zero through p^" + to_string(J.top())};
  if (auto m = first_mismatch(residual, scale(residual, Rational(0)))) {
    eig.ok = false;
    eig.detail = m->describe();
  }
  out.push_back(eig);

  const Rational expected = make_rational(label.l * label.l - label.k * label.k, 2);
  out.push_back({"eigenvalue" + tag, r.eigenvalue == expected && jack_eigenvalue(label) == expected,
                 "E = " + to_string(r.eigenvalue) + ", expected " + to_string(expected)});

  const AffineWeight top{label.j(), r.seed_depth, label.K};
  IdentityCheck tri{"triangularity" + tag, J.coefficient(r.seed_depth, label.j()) == 1, "leading coefficient 1, support below the seed"};
  if (!tri.ok) tri.detail = "leading coefficient " + to_string(J.coefficient(r.seed_depth, label.j()));
  IdentityCheck sym{"Weyl symmetry" + tag, true, "c(n, j) = c(n, -j)"};
  for (int n = 0; n <= J.trunc(); ++n) {
    const LaurentX& c = J.coeff(n);
    if (!c.is_reflection_symmetric() && sym.ok) {
      sym.ok = false;
      sym.detail = "asymmetric coefficient at p^" + to_string(J.exponent(n)) + ": " + to_string(c);
    }
    for (const auto& [j, v] : c.terms()) {
      if (tri.ok && !dominance_leq(AffineWeight{j, J.exponent(n), label.K}, top)) {
        tri.ok = false;
        tri.detail = "weight x^" + std::to_string(j) + " p^" + to_string(J.exponent(n)) + " is not below the seed";
      }
    }
  }
  out.push_back(tri);
  out.push_back(sym);

  const JackResult shifted = jack_series(label, order, Rational(1));
  IdentityCheck dshift{"delta shift" + tag, shifted.eigenvalue == jack_eigenvalue(label, Rational(1)),
                       "Jhat(lambda + delta) = p Jhat(lambda)"};
  if (auto m = first_mismatch(shifted.unnormalized, shift_p(J, Rational(1)))) {
    dshift.ok = false;
    dshift.detail = m->describe();
  }
  out.push_back(dshift);
  return out;
}

IdentityCheck conjugation_check(int K, int l, int k, int order) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const NomeSeries f = orbit_sum(l, K, order);
  const NomeSeries D = weyl_denominator(k, order);
  const NomeSeries g = mul(D, f);
  const NomeSeries lhs = apply_L(g, k) - scale(g, make_rational(k * k, 2));
  const NomeSeries rhs = mul(D, apply_M(f, k));
  return compare_series("conjugation K=" + std::to_string(K) + " l=" + std::to_string(l) + " k=" + std::to_string(k), lhs, rhs);
}

namespace {

struct Level2Parts {
  NomeSeries chi0, chi1, chi2;
  NomeSeries h1_inv, h2_inv, h3_inv;  // h3 without its 2-power
};

Level2Parts level2_parts(int k, int order) {
  const Rational e = make_rational(k - 1, k + 1);
  const NomeSeries eta1 = eta_series(order);
  const NomeSeries eta2 = eta_series(order, Rational(2));
  const NomeSeries etah = eta_series(order, make_rational(1, 2));
  const NomeSeries eta_sq = mul(eta1, eta1);
  return {character(0, 2, order),
          character(1, 2, order),
          character(2, 2, order),
          pow_rational(divide(mul(etah, eta2), eta1), -e),
          pow_rational(divide(eta_sq, etah), -e),
          pow_rational(divide(eta_sq, eta2), -e)};
}

}  // namespace

ScaledSeries closed_form(const JackLabel& label, int order) {
  label.validate();
  if (label.K == 1) {
    const NomeSeries b = pow_rational(eta_series(order), make_rational(-(label.k - 1), label.kappa()));
    return ScaledSeries(mul(b, character(label.j(), 1, order)));
  }
  if (label.K != 2) throw std::invalid_argument("closed forms exist for K in {1, 2}");
  const Rational e = make_rational(label.k - 1, label.k + 1);
  const Level2Parts P = level2_parts(label.k, order);
  const Rational half = make_rational(1, 2);
  if (label.j() == 1) {
    // (1/sqrt 2)^e chi_1 / h_3, with h_3 = (1/sqrt 2)^e (eta^2/eta(2tau))^e.
    const ScaledSeries num(P.chi1, 0, -e / 2);
    const ScaledSeries den(pow_rational(P.h3_inv, Rational(-1)), 0, -e / 2);
    return divide(num, den);
  }
  const NomeSeries plus = mul(P.chi0 + P.chi2, P.h1_inv);
  const NomeSeries minus = mul(P.chi0 - P.chi2, P.h2_inv);
  return ScaledSeries(scale(label.j() == 0 ? plus + minus : plus - minus, half));
}

std::vector<NomeSeries> transition_row(const JackLabel& label, int order) {
  label.validate();
  std::vector<NomeSeries> row;
  if (label.K == 1) {
    const NomeSeries b = pow_rational(eta_series(order), make_rational(-(label.k - 1), label.kappa()));
    const NomeSeries zero = scale(b, Rational(0));
    row = label.j() == 0 ? std::vector<NomeSeries>{b, zero} : std::vector<NomeSeries>{zero, b};
    return row;
  }
  if (label.K != 2) throw std::invalid_argument("transition rows exist for K in {1, 2}");
  const Level2Parts P = level2_parts(label.k, order);
  const Rational half = make_rational(1, 2);
  const NomeSeries diag = scale(P.h1_inv + P.h2_inv, half);
  const NomeSeries off = scale(P.h1_inv - P.h2_inv, half);
  const NomeSeries zero = scale(diag, Rational(0));
  switch (label.j()) {
    case 0: return {diag, zero, off};
    case 1: return {zero, P.h3_inv, zero};
    default: return {off, zero, diag};
  }
}

std::vector<IdentityCheck> heat_check(int K, int k, int order) {
  if (K != 1 && K != 2) throw std::invalid_argument("heat check is available for K in {1, 2}");
  const int kappa = K + 2 * k;
  std::vector<NomeSeries> chi, dchi;
  for (int mu = 0; mu <= K; ++mu) {
    chi.push_back(character(mu, K, order));
    dchi.push_back(apply_Delta(chi.back()));
  }
  std::vector<IdentityCheck> out;
  for (int l = k; l <= K + k; ++l) {
    const JackLabel label{K, k, l};
    const auto row = transition_row(label, order);
    std::optional<NomeSeries> total;
    for (int mu = 0; mu <= K; ++mu) {
      const NomeSeries term = scale(mul(row[static_cast<std::size_t>(mu)], dchi[static_cast<std::size_t>(mu)]), Rational(k - 1)) +
                              scale(mul(p_derivative(row[static_cast<std::size_t>(mu)]), chi[static_cast<std::size_t>(mu)]),
                                    Rational(2 * kappa));
      total = total ? *total + term : term;
    }
    IdentityCheck c{"heat equation K=" + std::to_string(K) + " k=" + std::to_string(k) + " l=" + std::to_string(l), true,
                    "vanishes through p^" + to_string(total->top())};
    const NomeSeries zero = scale(*total, Rational(0));
    if (auto m = first_mismatch(*total, zero)) {
      c.ok = false;
      c.detail = m->describe();
    }
    out.push_back(c);
  }
  return out;
}

std::vector<IdentityCheck> level2_laplacian_identities(int order) {
  const NomeSeries eta1 = eta_series(order);
  const NomeSeries eta2 = eta_series(order, Rational(2));
  const NomeSeries etah = eta_series(order, make_rational(1, 2));
  const NomeSeries eta_sq = mul(eta1, eta1);
  const NomeSeries c0 = character(0, 2, order);
  const NomeSeries c1 = character(1, 2, order);
  const NomeSeries c2 = character(2, 2, order);
  auto check = [](const std::string& name, const NomeSeries& chi, const NomeSeries& F) {
    return compare_series(name, mul(apply_Delta(chi), F), scale(mul(chi, p_derivative(F)), Rational(4)));
  };
  return {check("Delta chi_{L0+L1} / chi = 4 p d/dp ln(eta^2/eta(2tau))", c1, divide(eta_sq, eta2)),
          check("Delta(chi_{2L0} - chi_{2L1}) / (...) = 4 p d/dp ln(eta^2/eta(tau/2))", c0 - c2, divide(eta_sq, etah)),
          check("Delta(chi_{2L0} + chi_{2L1}) / (...) = 4 p d/dp ln(eta(tau/2) eta(2tau)/eta)", c0 + c2,
                divide(mul(etah, eta2), eta1))};
}

std::vector<IdentityCheck> level1_laplacian_identities(int order) {
  const NomeSeries eta1 = eta_series(order);
  std::vector<IdentityCheck> out;
  for (int l = 0; l <= 1; ++l) {
    const NomeSeries chi = character(l, 1, order);
    out.push_back(compare_series("Delta chi_{L" + std::to_string(l) + "} / chi = 2 p d/dp ln eta",
                                 mul(apply_Delta(chi), eta1), scale(mul(chi, p_derivative(eta1)), Rational(2))));
  }
  return out;
}

}  // namespace ajack
