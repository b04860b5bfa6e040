#include "ajack/suite.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "ajack/affine.hpp"
#include "ajack/jack.hpp"
#include "ajack/modular.hpp"
#include "ajack/theta.hpp"

namespace ajack {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

std::string cell(int K, int k) { return "K=" + std::to_string(K) + " k=" + std::to_string(k); }

IdentityCheck bound(const std::string& name, double err, double tol) {
  return {name, err < tol, "error " + fmt(err) + " (tolerance " + fmt(tol) + ")"};
}

void append(std::vector<IdentityCheck>& out, const std::vector<IdentityCheck>& more) {
  out.insert(out.end(), more.begin(), more.end());
}

// Runs `body`, turning an exception into a failed sub-check.
void guarded(std::vector<IdentityCheck>& out, const std::string& name, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    out.push_back({name, false, std::string("exception: ") + e.what()});
  }
}

std::vector<IdentityCheck> a1(bool quick) {
  const int order = quick ? 6 : 12;
  std::vector<IdentityCheck> out;
  for (int k = 1; k <= 4; ++k)
    for (int l = k; l <= k + 1; ++l) {
      const JackLabel label{1, k, l};
      guarded(out, "level 1 k=" + std::to_string(k), [&] {
        out.push_back(compare_series("level-1 closed form k=" + std::to_string(k) + " l=" + std::to_string(l),
                                     ScaledSeries(jack_normalized(label, order)), closed_form(label, order)));
      });
    }
  return out;
}

std::vector<IdentityCheck> a2(bool quick) {
  const int order = quick ? 6 : 12;
  std::vector<IdentityCheck> out;
  for (int k = 1; k <= 3; ++k)
    for (int l = k; l <= k + 2; ++l) {
      const JackLabel label{2, k, l};
      guarded(out, "level 2 k=" + std::to_string(k), [&] {
        out.push_back(compare_series("level-2 closed form k=" + std::to_string(k) + " l=" + std::to_string(l),
                                     ScaledSeries(jack_normalized(label, order)), closed_form(label, order)));
      });
    }
  return out;
}

std::vector<IdentityCheck> a3(bool) {
  std::vector<IdentityCheck> out;
  for (int K = 0; K <= 4; ++K)
    for (int k = 1; k <= 5; ++k)
      guarded(out, "S " + cell(K, k), [&] {
        const SMatrix P = build_S_product(K, k);
        out.push_back(bound("product vs macdonald " + cell(K, k), max_abs_diff(P, build_S_macdonald(K, k)), 1e-10));
        out.push_back(bound("product vs table " + cell(K, k), max_abs_diff(P, fixture_S(K, k)), 1e-10));
        if (K == 3)
          out.push_back(bound("alternate K=3 table k=" + std::to_string(k), max_abs_diff(P, fixture_S3_alternate(k)), 1e-10));
      });
  return out;
}

std::vector<IdentityCheck> a4(bool) {
  std::vector<IdentityCheck> out;
  for (int k = 1; k <= 5; ++k) {
    const K4Scalars v = k4_scalars(k);
    const double s2 = sinq(4, k, 2), s1 = sinq(4, k, 1);
    const std::string tag = " k=" + std::to_string(k);
    out.push_back(bound("gc+2 = 2bd" + tag, std::abs(v.g * v.c + 2 - 2 * v.b * v.d), 1e-10));
    out.push_back(bound("2bd = 2e^2" + tag, std::abs(2 * v.b * v.d - 2 * v.e * v.e), 1e-10));
    out.push_back(bound("c = 2s(k)((s(2)/s(1))^2 - 1)" + tag,
                        std::abs(v.c - 2 * sinq(4, k, k) * ((s2 / s1) * (s2 / s1) - 1)), 1e-10));
  }
  return out;
}

std::vector<IdentityCheck> a5(bool) {
  std::vector<IdentityCheck> out;
  for (int K = 1; K <= 2; ++K)
    for (int k = 1; k <= 5; ++k)
      guarded(out, "S^J " + cell(K, k), [&] {
        out.push_back(bound("S^J display " + cell(K, k), max_abs_diff(build_SJ(K, k).constant, displayed_SJ(K, k)), 1e-10));
      });
  return out;
}

std::vector<IdentityCheck> a6(bool) {
  std::vector<IdentityCheck> out;
  for (int K = 0; K <= 4; ++K)
    for (int k = 1; k <= 4; ++k)
      guarded(out, "relations " + cell(K, k), [&] {
        const RelationsReport r = projective_relations(K, k);
        out.push_back({"S^2 ~ id " + cell(K, k), r.s_squared.ok(1e-8),
                       "deviation " + fmt(r.s_squared.deviation) + ", |scalar|-1 = " + fmt(r.s_squared.modulus_error)});
        out.push_back({"(ST)^3 ~ S^2 " + cell(K, k), r.st_cubed.ok(1e-8),
                       "deviation " + fmt(r.st_cubed.deviation) + ", |scalar|-1 = " + fmt(r.st_cubed.modulus_error)});
      });
  return out;
}

std::vector<IdentityCheck> a7(bool quick) {
  const int order = quick ? 6 : 10;
  std::vector<IdentityCheck> out;
  for (int K = 0; K <= 3; ++K)
    for (int k = 1; k <= 3; ++k)
      for (int l = k; l <= K + k; ++l)
        guarded(out, "structure " + cell(K, k), [&] { append(out, jack_structure_checks({K, k, l}, order)); });
  return out;
}

std::vector<IdentityCheck> a8(bool quick) {
  const int order = quick ? 5 : 8;
  std::vector<IdentityCheck> out;
  for (int K = 0; K <= 2; ++K)
    for (int k = 1; k <= 3; ++k)
      for (int l = 0; l <= K; ++l)
        guarded(out, "conjugation " + cell(K, k), [&] { out.push_back(conjugation_check(K, l, k, order)); });
  return out;
}

std::vector<IdentityCheck> a9(bool quick) {
  const int order = quick ? 6 : 10;
  const int aux_order = quick ? 10 : 20;
  std::vector<IdentityCheck> out;
  guarded(out, "auxiliary identities", [&] {
    append(out, level1_laplacian_identities(aux_order));
    append(out, level2_laplacian_identities(aux_order));
    append(out, level2_character_identities(aux_order));
    append(out, level4_theta_identities(aux_order));
  });
  for (int K = 1; K <= 2; ++K)
    for (int k = 2; k <= 3; ++k) guarded(out, "heat " + cell(K, k), [&] { append(out, heat_check(K, k, order)); });
  return out;
}

std::vector<IdentityCheck> a10(bool) {
  std::vector<IdentityCheck> out;
  const double triples[3][3] = {{1, 1, 1}, {1, 1, 0.5}, {2, 1.5, 0.75}};
  for (const auto& t : triples)
    for (int n = 1; n <= 2; ++n)
      guarded(out, "Selberg", [&] {
        const double c = selberg_B(n, t[0], t[1], t[2], SelbergMode::closed);
        const double q = selberg_B(n, t[0], t[1], t[2], SelbergMode::quadrature);
        out.push_back(bound("Selberg n=" + std::to_string(n) + " (" + fmt(t[0]) + "," + fmt(t[1]) + "," + fmt(t[2]) + ")",
                            std::abs(c - q) / std::abs(c), 1e-6));
      });
  for (int K = 0; K <= 3; ++K)
    for (int k = 2; k <= 3; ++k)
      for (int m = k; m < K + k; ++m)
        guarded(out, "g ratio", [&] {
          const Complex absolute = g_absolute(K, k, m) / g_absolute(K, k, m + 1);
          out.push_back(bound("g ratio vs absolute " + cell(K, k) + " m=" + std::to_string(m),
                              std::abs(absolute - g_ratio(K, k, m, m + 1)) / std::abs(absolute), 1e-8));
        });
  for (int k = 1; k <= 5; ++k) {
    const double v = g_ratio(2, k, k + 1, k) * std::pow(std::sqrt(2.0), 1.0 + (k - 1.0) / (k + 1.0)) * sinq(2, k, k);
    out.push_back(bound("g normalized at m = k, k=" + std::to_string(k), std::abs(v - 1.0), 1e-10));
  }
  for (int K = 0; K <= 4; ++K)
    for (int k = 1; k <= 5; ++k)
      for (int m = k; m <= K + k; ++m) {
        const int kappa = K + 2 * k;
        out.push_back(bound("g reflection m <-> kappa - m, " + cell(K, k) + " m=" + std::to_string(m),
                            std::abs(g_ratio(K, k, m, kappa - m) - 1.0), 1e-10));
      }
  return out;
}

std::vector<IdentityCheck> a11(bool quick) {
  std::vector<IdentityCheck> out;
  append(out, theta_s_laws(20, 20241017u, 1e-9));
  append(out, theta_t_laws(20, 20241017u, 1e-9));
  out.push_back(triple_product_check(quick ? 10 : 20));
  return out;
}

std::vector<IdentityCheck> a12(bool) {
  std::vector<IdentityCheck> out;
  for (int K = 1; K <= 2; ++K)
    for (int k = 2; k <= 3; ++k)
      guarded(out, "modular " + cell(K, k), [&] {
        const ModularReport r = verify_modular_numeric(K, k, Complex(0.17, 0), Complex(0, 0), Complex(0, 1.3), 20, 1e-6);
        out.push_back({"S-transformation " + cell(K, k), r.ok(1e-6),
                       "deviation " + fmt(r.deviation) + ", constant " + fmt(r.scalar.real()) + (r.scalar.imag() < 0 ? "" : "+") +
                           fmt(r.scalar.imag()) + "i, |constant|-1 = " + fmt(r.modulus_error)});
      });
  return out;
}

struct Criterion {
  std::string title;
  std::vector<IdentityCheck> (*run)(bool);
};

const std::map<std::string, Criterion>& registry() {
  static const std::map<std::string, Criterion> table = {
      {"A1", {"level-1 closed form", a1}},
      {"A2", {"level-2 closed forms", a2}},
      {"A3", {"S-matrix product = Macdonald = tables", a3}},
      {"A4", {"K=4 table relations", a4}},
      {"A5", {"S^J displays at K=1,2", a5}},
      {"A6", {"projective relations", a6}},
      {"A7", {"eigen and structure suite", a7}},
      {"A8", {"operator conjugation", a8}},
      {"A9", {"heat check", a9}},
      {"A10", {"Selberg and g factors", a10}},
      {"A11", {"theta transformation laws", a11}},
      {"A12", {"numeric S-transformation", a12}},
  };
  return table;
}

}  // namespace

std::vector<std::string> criterion_ids() {
  std::vector<std::string> ids;
  for (int i = 1; i <= 12; ++i) ids.push_back("A" + std::to_string(i));
  return ids;
}

CriterionResult run_criterion(const std::string& id, bool quick) {
  const auto it = registry().find(id);
  if (it == registry().end()) throw std::invalid_argument("unknown criterion '" + id + "'");
  CriterionResult r;
  r.id = id;
  r.title = it->second.title;
  const auto start = std::chrono::steady_clock::now();
  try {
    r.checks = it->second.run(quick);
  } catch (const std::exception& e) {
    r.checks.push_back({id, false, std::string("exception: ") + e.what()});
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::size_t passed = 0;
  const IdentityCheck* first_fail = nullptr;
  for (const auto& c : r.checks) {
    if (c.ok)
      ++passed;
    else if (!first_fail)
      first_fail = &c;
  }
  r.pass = !r.checks.empty() && first_fail == nullptr;
  r.detail = std::to_string(passed) + "/" + std::to_string(r.checks.size()) + " checks";
  if (first_fail) r.detail += "; first failure: " + first_fail->name + ": " + first_fail->detail;
  return r;
}

std::vector<CriterionResult> run_acceptance(bool quick) {
  std::vector<CriterionResult> out;
  for (const auto& id : criterion_ids()) {
    if (quick && id == "A12") continue;
    out.push_back(run_criterion(id, quick));
  }
  return out;
}

}  // namespace ajack
