#include "ajack/theta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace ajack {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

void require_upper(Complex tau) {
  if (!(tau.imag() > 0)) throw std::domain_error("Im tau must be positive");
}

// Window of summation indices around the dominant term of sum exp(i pi tau (n+c)^2 + 2 pi i w n).
std::pair<long, long> window(Complex tau, double shift_im) {
  const double centre = -shift_im / tau.imag();
  const long w = static_cast<long>(std::ceil(std::sqrt(45.0 / (kPi * tau.imag())))) + 2;
  const long c = std::lround(centre);
  return {c - w, c + w};
}

}  // namespace

ThetaKind parse_theta_kind(const std::string& name) {
  if (name == "theta0" || name == "0") return ThetaKind::theta0;
  if (name == "theta1" || name == "1") return ThetaKind::theta1;
  if (name == "theta2" || name == "2") return ThetaKind::theta2;
  if (name == "theta3" || name == "3") return ThetaKind::theta3;
  throw std::invalid_argument("unknown theta kind '" + name + "'");
}

std::string to_string(ThetaKind kind) {
  switch (kind) {
    case ThetaKind::theta0: return "theta0";
    case ThetaKind::theta1: return "theta1";
    case ThetaKind::theta2: return "theta2";
    case ThetaKind::theta3: return "theta3";
  }
  return "?";
}

ScaledSeries theta_series(ThetaKind kind, int order, int arg_scale, const Rational& tau_scale) {
  if (order < 0) throw SeriesError("negative truncation order");
  if (tau_scale <= 0) throw SeriesError("theta_series: tau scale must be positive");
  const bool odd = kind == ThetaKind::theta1 || kind == ThetaKind::theta2;
  if (odd && arg_scale % 2 != 0)
    throw SeriesError("theta_series: theta_1, theta_2 of an odd multiple of z have half-integral x-powers");
  // odd kinds: p^{r (n - 1/2)^2 / 2} e^{i pi s z (2n - 1)}; even kinds: p^{r n^2 / 2} e^{2 pi i s z n}.
  const Rational lead = odd ? Rational(tau_scale / 8) : Rational(0);
  SeriesBuilder b(0, lead, Rational(order));
  const Rational top = lead + order;
  for (long n = 0;; ++n) {
    bool any = false;
    for (long sgn : {1L, -1L}) {
      if (n == 0 && sgn == -1) continue;
      const long m = sgn * n;
      Rational e;
      long xpow;
      if (odd) {
        const Rational h = make_rational(2 * m - 1, 2);
        e = tau_scale * h * h / 2;
        xpow = arg_scale * (2 * m - 1) / 2;
      } else {
        e = tau_scale * make_rational(m * m, 2);
        xpow = arg_scale * m;
      }
      if (e > top) continue;
      any = true;
      const bool neg = (kind == ThetaKind::theta1 || kind == ThetaKind::theta0) && (m % 2 != 0);
      b.add(e, static_cast<int>(xpow), Rational(neg ? -1 : 1));
    }
    if (!any) break;
  }
  return ScaledSeries(b.build(), kind == ThetaKind::theta1 ? 1 : 0);
}

Complex theta_numeric(ThetaKind kind, Complex v, Complex tau) {
  require_upper(tau);
  const bool odd = kind == ThetaKind::theta1 || kind == ThetaKind::theta2;
  const auto [lo, hi] = window(tau, v.imag());
  Complex sum = 0.0;
  for (long n = lo; n <= hi + 1; ++n) {
    const double h = odd ? n - 0.5 : static_cast<double>(n);
    const Complex term = std::exp(kI * kPi * tau * h * h + kI * kPi * v * (2.0 * h));
    const bool neg = (kind == ThetaKind::theta1 || kind == ThetaKind::theta0) && (n % 2 != 0);
    sum += neg ? -term : term;
  }
  return kind == ThetaKind::theta1 ? kI * sum : sum;
}

Complex theta1_prime0(Complex tau) {
  require_upper(tau);
  const auto [lo, hi] = window(tau, 0.0);
  Complex sum = 0.0;
  for (long n = lo; n <= hi + 1; ++n) {
    const double h = n - 0.5;
    const Complex term = std::exp(kI * kPi * tau * h * h) * (kI * kPi * 2.0 * h);
    sum += (n % 2 != 0) ? -term : term;
  }
  return kI * sum;
}

NomeSeries eta_series(int order, const Rational& scale) {
  if (order < 0) throw SeriesError("negative truncation order");
  if (scale <= 0) throw SeriesError("eta_series: scale must be positive");
  const Rational lead = scale / 24;
  SeriesBuilder b(0, lead, Rational(order));
  // Euler: prod (1 - q^n) = sum_k (-1)^k q^{k(3k-1)/2}.
  for (long k = 0;; ++k) {
    bool any = false;
    for (long sgn : {1L, -1L}) {
      if (k == 0 && sgn == -1) continue;
      const long m = sgn * k;
      const Rational e = lead + scale * (m * (3 * m - 1) / 2);
      if (e > lead + order) continue;
      any = true;
      b.add(e, 0, Rational(k % 2 == 0 ? 1 : -1));
    }
    if (!any) break;
  }
  return b.build();
}

Complex eta_numeric(Complex tau) {
  require_upper(tau);
  Complex sum = 0.0;
  for (long k = 0;; ++k) {
    bool any = false;
    for (int side = 0; side < (k == 0 ? 1 : 2); ++side) {
      const long m = side == 0 ? k : -k;
      const double e = m * (3.0 * m - 1) / 2.0;
      const double mag = std::exp(-2.0 * kPi * tau.imag() * e);
      if (mag < 1e-20) continue;
      any = true;
      sum += (k % 2 == 0 ? 1.0 : -1.0) * std::exp(2.0 * kPi * kI * tau * e);
    }
    if (!any) break;
  }
  return std::exp(2.0 * kPi * kI * tau / 24.0) * sum;
}

NomeSeries theta_level_series(int n, int kappa, int order, int arg_scale) {
  if (kappa < 1) throw SeriesError("theta_level_series: kappa must be positive");
  if (order < 0) throw SeriesError("negative truncation order");
  // l = m + n/(2 kappa); kappa l^2 = (2 kappa m + n)^2 / (4 kappa); x-power s (2 kappa m + n) / 2.
  const long two_k = 2L * kappa;
  const long r = ((n % two_k) + two_k) % two_k;
  const long nearest = r <= kappa ? r : r - two_k;
  const Rational lead = make_rational(nearest * nearest, 4L * kappa);
  if ((static_cast<long>(arg_scale) * n) % 2 != 0)
    throw SeriesError("theta_level_series: half-integral x-power; use an even argument scale");
  SeriesBuilder b(kappa, lead, Rational(order));
  for (long t = 0;; ++t) {
    bool any = false;
    for (int side = 0; side < (t == 0 ? 1 : 2); ++side) {
      const long v = side == 0 ? nearest + two_k * t : nearest - two_k * t;
      const Rational e = make_rational(v * v, 4L * kappa);
      if (e > lead + order) continue;
      any = true;
      b.add(e, static_cast<int>(arg_scale * v / 2), Rational(1));
    }
    if (!any) break;
  }
  return b.build();
}

Complex theta_level_numeric(int n, int kappa, Complex x, Complex tau) {
  require_upper(tau);
  if (kappa < 1) throw std::domain_error("kappa must be positive");
  // sum_m exp(2 pi i kappa (l^2 tau + l x)), l = m + n / 2 kappa.
  const double shift = static_cast<double>(n) / (2.0 * kappa);
  const double centre = -x.imag() / (2.0 * tau.imag()) - shift;
  const long w = static_cast<long>(std::ceil(std::sqrt(45.0 / (2.0 * kPi * kappa * tau.imag())))) + 2;
  const long c = std::lround(centre);
  Complex sum = 0.0;
  for (long m = c - w; m <= c + w; ++m) {
    const double l = m + shift;
    sum += std::exp(2.0 * kPi * kI * static_cast<double>(kappa) * (l * l * tau + l * x));
  }
  return sum;
}

Complex ell_E(Complex v, Complex tau) {
  return 2.0 * kPi * kI * theta_numeric(ThetaKind::theta1, v, tau) / theta1_prime0(tau);
}

Complex ell_G(Complex v, Complex z, Complex tau) {
  const Complex t_v = theta_numeric(ThetaKind::theta1, v, tau);
  const Complex t_2z = theta_numeric(ThetaKind::theta1, 2.0 * z, tau);
  const Complex t1p = theta1_prime0(tau);
  const double scale = std::abs(t1p) * 1e-13;
  if (std::abs(t_v) < scale) throw std::domain_error("ell_G: pole at v in Z + Z tau");
  if (std::abs(t_2z) < scale) throw std::domain_error("ell_G: pole at 2z in Z + Z tau");
  return t1p * theta_numeric(ThetaKind::theta1, v + 2.0 * z, tau) / (t_2z * t_v);
}

}  // namespace ajack

namespace ajack {

IdentityCheck compare_series(const std::string& name, const NomeSeries& lhs, const NomeSeries& rhs) {
  IdentityCheck c{name, true, "equal through p^" + to_string(lhs.top() < rhs.top() ? lhs.top() : rhs.top())};
  if (lhs.level() != rhs.level()) {
    c.ok = false;
    c.detail = "level " + std::to_string(lhs.level()) + " vs " + std::to_string(rhs.level());
    return c;
  }
  if (auto m = first_mismatch(lhs, rhs)) {
    c.ok = false;
    c.detail = m->describe();
  }
  return c;
}

IdentityCheck compare_series(const std::string& name, const ScaledSeries& lhs, const ScaledSeries& rhs) {
  const ScaledSeries a = lhs.normalized();
  const ScaledSeries b = rhs.normalized();
  if (!a.series.is_zero() && !b.series.is_zero() && (a.ipow != b.ipow || a.two_exp != b.two_exp)) {
    return {name, false,
            "scalar i^" + std::to_string(a.ipow) + " 2^" + to_string(a.two_exp) + " vs i^" +
                std::to_string(b.ipow) + " 2^" + to_string(b.two_exp)};
  }
  return compare_series(name, a.series, b.series);
}

namespace {

// Terms of s whose exponent is congruent to r modulo 1.
NomeSeries exponent_class(const NomeSeries& s, const Rational& r) {
  NomeSeries out = s;
  for (int n = 0; n <= s.trunc(); ++n) {
    const Rational d = s.exponent(n) - r;
    if (!is_integer(d)) out.coeff_mut(n) = LaurentX();
  }
  return out;
}

}  // namespace

std::vector<IdentityCheck> level4_theta_identities(int order) {
  std::vector<IdentityCheck> out;
  const NomeSeries eta1 = eta_series(order + 1);
  const NomeSeries eta2 = eta_series(order + 1, Rational(2));
  const NomeSeries etah = eta_series(order + 1, make_rational(1, 2));
  auto lvl = [](const ScaledSeries& s, int level) { return ScaledSeries(s.series.with_level(level), s.ipow, s.two_exp); };
  const ScaledSeries I(NomeSeries::one(order + 1), 1);

  // theta_{2,4}(z) - theta_{-2,4}(z) = i theta_1(2z|2tau)
  {
    const NomeSeries lhs = theta_level_series(2, 4, order, 1) - theta_level_series(-2, 4, order, 1);
    const ScaledSeries rhs = lvl(mul(I, theta_series(ThetaKind::theta1, order, 2, Rational(2))), 4);
    out.push_back(compare_series("theta_{2,4} - theta_{-2,4} = i theta_1(2z|2tau)", ScaledSeries(lhs), rhs));
  }
  // theta_1(4z|2tau) = theta_1(2z|tau) theta_2(2z|tau) eta(2tau)/eta(tau)^2
  {
    const ScaledSeries lhs = theta_series(ThetaKind::theta1, order, 4, Rational(2));
    const ScaledSeries t1 = theta_series(ThetaKind::theta1, order, 2);
    const ScaledSeries t2 = theta_series(ThetaKind::theta2, order, 2);
    const ScaledSeries q(divide(eta2, mul(eta1, eta1)));
    out.push_back(compare_series("theta_1(4z|2tau) = theta_1(2z) theta_2(2z) eta(2tau)/eta^2", lhs,
                                 mul(mul(t1, t2), q)));
  }
  // Theta_{1,4} - Theta_{-1,4} - Theta_{3,4} + Theta_{-3,4} at 2z = i theta_1(2z|tau/2)
  //   = i theta_1(2z|tau) theta_0(2z|tau) eta(tau/2)/eta^2
  const NomeSeries t1m = theta_level_series(1, 4, order, 2) - theta_level_series(-1, 4, order, 2);
  const NomeSeries t3m = theta_level_series(3, 4, order, 2) - theta_level_series(-3, 4, order, 2);
  {
    const NomeSeries lhs = t1m - t3m;
    const ScaledSeries half = lvl(mul(I, theta_series(ThetaKind::theta1, order, 2, make_rational(1, 2))), 4);
    out.push_back(compare_series("Theta_1 - Theta_-1 - Theta_3 + Theta_-3 = i theta_1(2z|tau/2)", ScaledSeries(lhs), half));
    const ScaledSeries prod = mul(mul(I, theta_series(ThetaKind::theta1, order, 2)),
                                  mul(theta_series(ThetaKind::theta0, order, 2), ScaledSeries(divide(etah, mul(eta1, eta1)))));
    out.push_back(compare_series("theta_1(2z|tau/2) = theta_1(2z) theta_0(2z) eta(tau/2)/eta^2", half, lvl(prod, 4)));
  }
  // (Theta_1 - Theta_-1 + Theta_3 - Theta_-3)(tau+1) = e^{pi i/8} (Theta_1 - Theta_-1 - Theta_3 + Theta_-3)(tau)
  {
    const NomeSeries plus = t1m + t3m;
    const NomeSeries twisted = exponent_class(plus, make_rational(1, 16)) - exponent_class(plus, make_rational(9, 16));
    IdentityCheck c = compare_series("Theta sum under tau -> tau+1", twisted, t1m - t3m);
    const NomeSeries rest = plus - exponent_class(plus, make_rational(1, 16)) - exponent_class(plus, make_rational(9, 16));
    if (!rest.is_zero()) {
      c.ok = false;
      c.detail = "exponents outside 1/16 + Z/2";
    }
    out.push_back(c);
  }
  return out;
}

namespace {

struct LawPoint {
  Complex v, z, tau;
  int kappa, m;
};

std::vector<LawPoint> law_points(int points, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> re(-0.5, 0.5), small(-0.1, 0.1), im(0.5, 2.0);
  std::uniform_int_distribution<int> kap(1, 7);
  std::vector<LawPoint> out;
  for (int i = 0; i < points; ++i) {
    LawPoint p{};
    p.v = Complex(re(rng), small(rng));
    p.z = Complex(re(rng), small(rng));
    p.tau = Complex(re(rng), im(rng));
    p.kappa = kap(rng);
    p.m = std::uniform_int_distribution<int>(0, 2 * p.kappa - 1)(rng);
    out.push_back(p);
  }
  return out;
}

struct LawAccumulator {
  std::string name;
  double worst = 0;
  void add(Complex lhs, Complex rhs) {
    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    worst = std::max(worst, std::abs(lhs - rhs) / scale);
  }
  IdentityCheck result(double tol, int points) const {
    std::ostringstream os;
    os.precision(3);
    os << "max relative error " << worst << " over " << points << " points";
    return {name, worst < tol, os.str()};
  }
};

}  // namespace

std::vector<IdentityCheck> theta_s_laws(int points, unsigned seed, double tol) {
  LawAccumulator th{"S-law theta_1"}, th0{"S-law theta_1'(0)"}, e{"S-law E"}, g{"S-law G"}, lv{"S-law level theta"};
  using enum ThetaKind;
  for (const LawPoint& p : law_points(points, seed)) {
    const Complex t = p.tau, ts = -1.0 / p.tau;
    const Complex root = std::sqrt(t / kI);
    th.add(theta_numeric(theta1, p.v / t, ts), root / kI * std::exp(kI * kPi * p.v * p.v / t) * theta_numeric(theta1, p.v, t));
    th0.add(theta1_prime0(ts), t / kI * root * theta1_prime0(t));
    e.add(ell_E(-p.v / t, ts), std::exp(kI * kPi * p.v * p.v / t) / t * ell_E(-p.v, t));
    g.add(ell_G(p.v / t, p.z / t, ts), t * std::exp(kPi * kI * 4.0 * p.v * p.z / t) * ell_G(p.v, p.z, t));
    Complex sum = 0.0;
    for (int l = 0; l < 2 * p.kappa; ++l)
      sum += std::exp(-kPi * kI * static_cast<double>(p.m * l) / static_cast<double>(p.kappa)) *
             theta_level_numeric(-l, p.kappa, p.v, t);
    lv.add(theta_level_numeric(-p.m, p.kappa, p.v / t, ts),
           root * std::exp(kI * kPi * static_cast<double>(p.kappa) * p.v * p.v / (2.0 * t)) / std::sqrt(2.0 * p.kappa) * sum);
  }
  return {th.result(tol, points), th0.result(tol, points), e.result(tol, points), g.result(tol, points),
          lv.result(tol, points)};
}

std::vector<IdentityCheck> theta_t_laws(int points, unsigned seed, double tol) {
  LawAccumulator th{"T-law theta_1"}, lv{"T-law level theta"};
  for (const LawPoint& p : law_points(points, seed)) {
    th.add(theta_numeric(ThetaKind::theta1, p.v, p.tau + 1.0),
           std::exp(kI * kPi / 4.0) * theta_numeric(ThetaKind::theta1, p.v, p.tau));
    lv.add(theta_level_numeric(p.m, p.kappa, p.v, p.tau + 1.0),
           std::exp(kI * kPi * static_cast<double>(p.m * p.m) / (2.0 * p.kappa)) * theta_level_numeric(p.m, p.kappa, p.v, p.tau));
  }
  return {th.result(tol, points), lv.result(tol, points)};
}

}  // namespace ajack
