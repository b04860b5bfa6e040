#include "ajack/modular.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace ajack {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

void check_Kk(int K, int k) {
  if (K < 0) throw std::invalid_argument("level K must be >= 0");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
}

SMatrix make_matrix(int K, int k) {
  SMatrix s;
  s.K = K;
  s.k = k;
  s.entries = Eigen::MatrixXcd::Zero(K + 1, K + 1);
  return s;
}

double sign_k(int k) { return (k - 1) % 2 == 0 ? 1.0 : -1.0; }

}  // namespace

SForm parse_sform(const std::string& name) {
  if (name == "product") return SForm::product;
  if (name == "macdonald") return SForm::macdonald;
  if (name == "fixture") return SForm::fixture;
  throw std::invalid_argument("unknown S-matrix form '" + name + "'");
}

std::string to_string(SForm form) {
  switch (form) {
    case SForm::product: return "product";
    case SForm::macdonald: return "macdonald";
    case SForm::fixture: return "fixture";
  }
  return "?";
}

double sinq(int K, int k, int j) {
  const int kappa = K + 2 * k;
  if (kappa <= 0) throw std::invalid_argument("sinq: kappa must be positive");
  const int r = ((j % (2 * kappa)) + 2 * kappa) % (2 * kappa);
  if (r == 0 || r == kappa) return 0.0;
  return std::sin(kPi * r / kappa);
}

SMatrix build_S_product(int K, int k) {
  check_Kk(K, k);
  const int kappa = K + 2 * k;
  const int n2 = 2 * kappa;
  const int B = K + 1;
  // Row r holds j_{-r} in the basis j_{-l}, l = k .. kappa - k.
  Eigen::MatrixXcd V = Eigen::MatrixXcd::Zero(n2, B);
  for (int r = k; r <= kappa - k; ++r) V(r, r - k) = 1.0;
  for (int r = kappa + 1; r < n2; ++r) V.row(r) = -V.row(n2 - r);
  auto s = [&](int j) { return sinq(K, k, j); };
  for (int step = 1; step < k; ++step) {
    Eigen::MatrixXcd W = Eigen::MatrixXcd::Zero(n2, B);
    for (int r = 0; r < n2; ++r) {
      const Eigen::RowVectorXcd num = V.row((r + n2 - 1) % n2) - V.row((r + 1) % n2);
      if (r == 0 || r == kappa) {
        if (num.cwiseAbs().maxCoeff() > 1e-12)
          throw std::logic_error("build_S_product: nonzero numerator at a vanishing sine, index " + std::to_string(r));
        continue;
      }
      W.row(r) = num / (2.0 * s(r));
    }
    V = W;
  }
  SMatrix out = make_matrix(K, k);
  for (int m = k; m <= kappa - k; ++m) {
    Eigen::RowVectorXcd row = Eigen::RowVectorXcd::Zero(B);
    for (int r = 0; r < n2; ++r) row += std::exp(-kI * kPi * static_cast<double>(m * r) / static_cast<double>(kappa)) * V.row(r);
    out.entries.row(m - k) = 0.5 * kI * row;
  }
  return out;
}

Complex macdonald_special(int kappa, int k, int n, int m) {
  if (n < 0) throw std::invalid_argument("macdonald_special: n must be >= 0");
  const Complex q = std::exp(kI * kPi / static_cast<double>(kappa));
  const Complex Q = q * q;
  const Complex t = std::pow(q, 2 * k);
  auto poch = [](Complex a, Complex base, int len) {
    Complex r = 1.0;
    Complex b = 1.0;
    for (int i = 0; i < len; ++i) {
      r *= 1.0 - a * b;
      b *= base;
    }
    return r;
  };
  const Complex x1 = std::pow(q, -m);
  const Complex x2 = std::pow(q, m);
  Complex sum = 0.0;
  for (int r = 0; r <= n; ++r)
    sum += poch(t, Q, r) * poch(t, Q, n - r) / (poch(Q, Q, r) * poch(Q, Q, n - r)) * std::pow(x1, r) * std::pow(x2, n - r);
  return sum * poch(Q, Q, n) / poch(t, Q, n);
}

SMatrix build_S_macdonald(int K, int k) {
  check_Kk(K, k);
  const int kappa = K + 2 * k;
  SMatrix out = make_matrix(K, k);
  const double pre = std::pow(-2.0, k - 1);
  for (int m = k; m <= kappa - k; ++m) {
    double left = 1.0;
    for (int j = 1; j <= k - 1; ++j) left *= sinq(K, k, m - j);
    for (int l = k; l <= kappa - k; ++l)
      out.entries(m - k, l - k) = pre * left * macdonald_special(kappa, k, m - k, l) * sinq(K, k, l);
  }
  return out;
}

K4Scalars k4_scalars(int k) {
  const int K = 4;
  const int kappa = K + 2 * k;
  auto s = [&](int j) { return sinq(K, k, j); };
  const Complex q = std::exp(kI * kPi / static_cast<double>(kappa));
  const Complex p2 = std::pow(q, 2 * k) + std::pow(q, -2 * k) +
                     (1.0 + q * q) * (1.0 - std::pow(q, 2 * k)) / (1.0 - std::pow(q, 2 * (k + 1)));
  K4Scalars r{};
  r.b = s(4) / s(1);
  r.d = s(k + 1) / s(k);
  r.e = s(2) / s(1);
  r.g = 1.0 / s(k);
  r.c = (s(k + 1) * s(k) / (s(1) * s(2)) * p2).real();
  return r;
}

SMatrix fixture_S(int K, int k) {
  check_Kk(K, k);
  const int kappa = K + 2 * k;
  const double sg = sign_k(k);
  auto s = [&](int j) { return sinq(K, k, j); };
  SMatrix out = make_matrix(K, k);
  Eigen::MatrixXcd& E = out.entries;
  switch (K) {
    case 0:
      E(0, 0) = sg * std::sqrt(kappa / 2.0);
      break;
    case 1:
      E << 1, 1, 1, -1;
      E *= sg * std::sqrt(kappa / 4.0);
      break;
    case 2: {
      const double a = 1.0 / s(k), b = 2.0 * s(k);
      E << 1, a, 1, b, 0, -b, 1, -a, 1;
      E *= sg * std::sqrt(kappa / 8.0);
      break;
    }
    case 3: {
      const double b = s(3) / s(1), c = s(k + 1) / s(k);
      E << 1, c, c, 1, b, 1, -1, -b, b, -1, -1, b, 1, -c, c, -1;
      E *= sg * 0.5 * std::sqrt(kappa / (1.0 + b * c));
      break;
    }
    case 4: {
      const K4Scalars v = k4_scalars(k);
      E << 1, v.d, v.g, v.d, 1, v.b, v.e, 0, -v.e, -v.b, v.c, 0, -2, 0, v.c, v.b, -v.e, 0, v.e, -v.b, 1, -v.d, v.g,
          -v.d, 1;
      E *= sg * std::sqrt(kappa / (8.0 * v.e * v.e));
      break;
    }
    default:
      throw std::invalid_argument("fixture tables cover K in {0, ..., 4}");
  }
  return out;
}

SMatrix fixture_S3_alternate(int k) {
  check_Kk(3, k);
  const int K = 3;
  const int kappa = K + 2 * k;
  auto s = [&](int j) { return sinq(K, k, j); };
  const double a = s(1), b = s(2 * k), c = s(k + 1) * s(1) / s(k);
  SMatrix out = make_matrix(K, k);
  out.entries << a, c, c, a, b, a, -a, -b, b, -a, -a, b, a, -c, c, -a;
  out.entries *= sign_k(k) * std::sqrt(kappa / (4.0 * (a * a + b * c)));
  return out;
}

SMatrix build_S(int K, int k, SForm form) {
  switch (form) {
    case SForm::product: return build_S_product(K, k);
    case SForm::macdonald: return build_S_macdonald(K, k);
    case SForm::fixture: return fixture_S(K, k);
  }
  throw std::invalid_argument("unknown S-matrix form");
}

double g_ratio_step(int K, int k, int m, int n) {
  const int kappa = K + 2 * k;
  if (m < k || m + n > kappa - k || n < 0) throw std::invalid_argument("g_ratio: indices outside k..kappa-k");
  double num = 1.0;
  for (int j = m + 1 - k; j <= m + n - k; ++j)
    num *= std::tgamma(static_cast<double>(j) / kappa) * std::tgamma(static_cast<double>(K + k - j) / kappa);
  double den = 1.0;
  for (int jp = 0; jp <= n - 1; ++jp)
    den *= std::tgamma(static_cast<double>(m + jp) / kappa) * std::tgamma(static_cast<double>(K + k - m - jp) / kappa);
  return num / den;
}

double g_ratio(int K, int k, int m, int l) {
  if (m == l) return 1.0;
  if (m < l) return g_ratio_step(K, k, m, l - m);
  return 1.0 / g_ratio_step(K, k, l, m - l);
}

Complex g_absolute(int K, int k, int m) {
  check_Kk(K, k);
  const int kappa = K + 2 * k;
  if (m < k || m > kappa - k) throw std::invalid_argument("g_absolute: m outside k..kappa-k");
  const double kp = kappa;
  Complex inv = std::exp(kI * kPi * static_cast<double>(k - 1) * (1.0 / kp + 1.0)) * std::pow(2.0 * kI, k - 1);
  for (int n = 0; n <= k - 2; ++n) inv *= std::sin(kPi * ((-m + 1 + n) / kp + 1.0));
  for (int np = 1; np <= k - 2; ++np) {
    Complex s = 0.0;
    for (int j = 0; j <= np; ++j) s += std::exp(kI * kPi * static_cast<double>(np - 2 * j) / kp);
    inv *= s;
  }
  if (k >= 2) inv *= selberg_B(k - 1, (-m + 1) / kp + 1.0, -2.0 * (k - 1) / kp, 1.0 / kp, SelbergMode::closed);
  return 1.0 / inv;
}

SJData build_SJ(int K, int k) {
  const SMatrix S = build_S_product(K, k);
  const int kappa = K + 2 * k;
  const double w = static_cast<double>((k - 1) * K) / (2.0 * kappa);
  const Complex pre = sign_k(k) * std::exp(kI * kPi / 2.0 * w) * (2.0 / std::sqrt(2.0 * kappa));
  SJData out{make_matrix(K, k), make_rational(-(k - 1) * K, 2L * kappa)};
  for (int m = k; m <= kappa - k; ++m)
    for (int l = k; l <= kappa - k; ++l)
      out.constant.entries(m - k, l - k) = pre * g_ratio(K, k, m, l) * S.at(m, l);
  return out;
}

SMatrix displayed_SJ(int K, int k) {
  check_Kk(K, k);
  const int kappa = K + 2 * k;
  const double w = static_cast<double>((k - 1) * K) / (2.0 * kappa);
  const Complex phase = std::exp(kI * kPi / 2.0 * w);
  SMatrix out = make_matrix(K, k);
  if (K == 1) {
    out.entries << 1, 1, 1, -1;
    out.entries *= phase / std::sqrt(2.0);
  } else if (K == 2) {
    const double e = static_cast<double>(k - 1) / (k + 1);
    const double up = std::pow(std::sqrt(2.0), 1 + e), dn = std::pow(std::sqrt(2.0), 1 - e);
    out.entries << 1, up, 1, dn, 0, -dn, 1, -up, 1;
    out.entries *= phase * 0.5;
  } else {
    throw std::invalid_argument("displayed S^J matrices exist for K in {1, 2}");
  }
  return out;
}

Complex t_phase(int K, int k, int l) {
  const int kappa = K + 2 * k;
  if (l < k || l > kappa - k) throw std::invalid_argument("t_phase: l outside k..kappa-k");
  return std::exp(2.0 * kPi * kI * static_cast<double>(-k * kappa + 2 * l * l) / (8.0 * kappa));
}

Eigen::MatrixXcd t_matrix(int K, int k) {
  Eigen::MatrixXcd T = Eigen::MatrixXcd::Zero(K + 1, K + 1);
  for (int l = k; l <= K + k; ++l) T(l - k, l - k) = t_phase(K, k, l);
  return T;
}

Proportionality fit_scalar(const Eigen::MatrixXcd& lhs, const Eigen::MatrixXcd& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) throw std::invalid_argument("fit_scalar: shape mismatch");
  const Complex num = (rhs.adjoint() * lhs).trace();
  const double den = rhs.squaredNorm();
  Proportionality p;
  p.scalar = den > 0 ? num / den : Complex(0.0);
  p.deviation = (lhs - p.scalar * rhs).cwiseAbs().maxCoeff();
  p.modulus_error = std::abs(std::abs(p.scalar) - 1.0);
  return p;
}

RelationsReport projective_relations(int K, int k) {
  const Eigen::MatrixXcd C = build_SJ(K, k).constant.entries;
  const Eigen::MatrixXcd T = t_matrix(K, k);
  const Eigen::MatrixXcd C2 = C * C;
  const Eigen::MatrixXcd CT = C * T;
  RelationsReport r;
  r.K = K;
  r.k = k;
  r.s_squared = fit_scalar(C2, Eigen::MatrixXcd::Identity(K + 1, K + 1));
  r.st_cubed = fit_scalar(CT * CT * CT, C2);
  return r;
}

ModularReport verify_modular_numeric(int K, int k, Complex z, Complex u, Complex tau, int order, double tol) {
  check_Kk(K, k);
  if (!(tau.imag() > 0)) throw std::domain_error("Im tau must be positive");
  const Complex tau_s = -1.0 / tau;
  const Complex z_s = z / tau;
  const Complex u_s = u - z * z / tau;
  const SJData sj = build_SJ(K, k);
  const Complex weight = std::pow(tau, to_double(sj.weight));

  ModularReport rep;
  rep.K = K;
  rep.k = k;
  rep.order = order;
  rep.z = z;
  rep.u = u;
  rep.tau = tau;
  std::vector<Complex> J_here;
  for (int l = k; l <= K + k; ++l) {
    const NomeSeries J = jack_normalized(JackLabel{K, k, l}, order);
    J_here.push_back(eval_numeric(J, z, u, tau));
    rep.lhs.push_back(eval_numeric(J, z_s, u_s, tau_s));
    const double scale = std::max(std::abs(rep.lhs.back()), std::abs(J_here.back()));
    rep.tail = std::max(rep.tail, std::max(last_order_magnitude(J, z_s, tau_s), last_order_magnitude(J, z, tau)) /
                                      std::max(scale, 1e-300));
  }
  for (int m = k; m <= K + k; ++m) {
    Complex s = 0.0;
    for (int l = k; l <= K + k; ++l) s += sj.constant.at(m, l) * J_here[static_cast<std::size_t>(l - k)];
    rep.rhs.push_back(weight * s);
  }
  if (rep.tail > tol / 10)
    throw std::domain_error("verify_modular_numeric: order " + std::to_string(order) + " leaves a tail of " +
                            std::to_string(rep.tail));
  Complex num = 0.0;
  double den = 0.0, rmax = 0.0;
  for (std::size_t i = 0; i < rep.lhs.size(); ++i) {
    num += rep.lhs[i] * std::conj(rep.rhs[i]);
    den += std::norm(rep.rhs[i]);
    rmax = std::max(rmax, std::abs(rep.rhs[i]));
  }
  rep.scalar = num / den;
  for (std::size_t i = 0; i < rep.lhs.size(); ++i)
    rep.deviation = std::max(rep.deviation, std::abs(rep.lhs[i] - rep.scalar * rep.rhs[i]) / rmax);
  rep.modulus_error = std::abs(std::abs(rep.scalar) - 1.0);
  return rep;
}

double max_abs_diff(const SMatrix& a, const SMatrix& b) {
  if (a.entries.rows() != b.entries.rows() || a.entries.cols() != b.entries.cols())
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  return (a.entries - b.entries).cwiseAbs().maxCoeff();
}

std::string smatrix_json(const SMatrix& s, int indent) {
  nlohmann::ordered_json j;
  j["K"] = s.K;
  j["k"] = s.k;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int m = s.first(); m <= s.last(); ++m) rows.push_back(m);
  j["rows"] = rows;
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (int r = 0; r < s.entries.rows(); ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int c = 0; c < s.entries.cols(); ++c)
      row.push_back(nlohmann::ordered_json{{"re", s.entries(r, c).real()}, {"im", s.entries(r, c).imag()}});
    entries.push_back(row);
  }
  j["entries"] = entries;
  return j.dump(indent);
}

std::string smatrix_csv(const SMatrix& s) {
  std::ostringstream os;
  os.precision(17);
  os << "m,l,re,im\n";
  for (int m = s.first(); m <= s.last(); ++m)
    for (int l = s.first(); l <= s.last(); ++l) os << m << ',' << l << ',' << s.at(m, l).real() << ',' << s.at(m, l).imag() << '\n';
  return os.str();
}

}  // namespace ajack
