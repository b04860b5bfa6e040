// ajack: command-line front end for affine Jack polynomials, their modular data and the
// acceptance suite.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ajack/jack.hpp"
#include "ajack/modular.hpp"
#include "ajack/suite.hpp"
#include "ajack/theta.hpp"

namespace {

using ajack::Complex;
using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  int K = 1;
  int k = 1;
  std::optional<int> l;
  std::optional<int> order;
  std::optional<double> tol;
  std::string tau = "0,1.3";
  std::string z = "0.17,0";
  std::string u = "0,0";
  std::string format;
  std::string output;
  std::string form = "product";
  std::string mode;
  bool unnormalized = false;
  bool quick = false;
  std::vector<std::string> only;
  std::optional<int> ks;
  int n = 1;
  int m = -1;
  double alpha = 1, beta = 1, gamma = 1;
  int points = 20;
  unsigned seed = 20241017u;
};

int default_order() {
  const char* env = std::getenv("AJACK_DEFAULT_ORDER");
  if (!env || !*env) return 12;
  try {
    std::size_t pos = 0;
    const int v = std::stoi(env, &pos);
    if (pos != std::string(env).size() || v < 0) throw std::invalid_argument("bad");
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("AJACK_DEFAULT_ORDER must be a non-negative integer, got '") + env + "'");
  }
}

int order_of(const Options& o) {
  const int n = o.order ? *o.order : default_order();
  if (n < 0) throw UsageError("--order must be >= 0");
  return n;
}

double tol_of(const Options& o, double fallback) {
  const double t = o.tol ? *o.tol : fallback;
  if (!(t > 0)) throw UsageError("--tol must be > 0");
  return t;
}

Complex parse_complex(const std::string& text, const std::string& what) {
  const auto comma = text.find(',');
  try {
    std::size_t pos = 0;
    if (comma == std::string::npos) {
      const double re = std::stod(text, &pos);
      if (pos != text.size()) throw std::invalid_argument(text);
      return {re, 0.0};
    }
    const std::string a = text.substr(0, comma), b = text.substr(comma + 1);
    const double re = std::stod(a, &pos);
    if (pos != a.size()) throw std::invalid_argument(text);
    const double im = std::stod(b, &pos);
    if (pos != b.size()) throw std::invalid_argument(text);
    return {re, im};
  } catch (const std::exception&) {
    throw UsageError(what + " must be a complex number written \"re,im\", got '" + text + "'");
  }
}

void check_level(const Options& o) {
  if (o.K < 0) throw UsageError("--K must be >= 0");
  if (o.k < 1) throw UsageError("--k must be >= 1");
}

ajack::JackLabel label_of(const Options& o) {
  check_level(o);
  const int l = o.l ? *o.l : o.k;
  if (l < o.k || l > o.K + o.k) throw UsageError("--l must satisfy k <= l <= K + k");
  return {o.K, o.k, l};
}

std::string format_of(const Options& o, const std::string& fallback, std::initializer_list<const char*> allowed) {
  const std::string f = o.format.empty() ? fallback : o.format;
  for (const char* a : allowed)
    if (f == a) return f;
  throw UsageError("--format '" + f + "' is not available for this command");
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw UsageError("cannot write to '" + o.output + "'");
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

json complex_json(Complex c) { return json{{"re", c.real()}, {"im", c.imag()}}; }

json checks_json(const std::vector<ajack::IdentityCheck>& checks) {
  json arr = json::array();
  for (const auto& c : checks) arr.push_back(json{{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  return arr;
}

std::string checks_text(const std::vector<ajack::IdentityCheck>& checks) {
  std::ostringstream os;
  for (const auto& c : checks) os << (c.ok ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
  return os.str();
}

/// Emits a check report and returns the exit code, printing the first counterexample on failure.
int report_checks(const Options& o, const std::vector<ajack::IdentityCheck>& checks, json extra = json::object()) {
  const bool pass = ajack::all_ok(checks);
  if (format_of(o, "json", {"json", "text"}) == "text") {
    emit(o, checks_text(checks));
  } else {
    extra["pass"] = pass;
    extra["checks"] = checks_json(checks);
    emit(o, extra.dump(2));
  }
  for (const auto& c : checks)
    if (!c.ok) {
      std::cerr << "check failed: " << c.name << ": " << c.detail << '\n';
      break;
    }
  return pass ? 0 : 1;
}

std::string series_text(const ajack::NomeSeries& s) {
  std::ostringstream os;
  os << "level " << s.level() << ", known through p^" << ajack::to_string(s.top()) << '\n';
  for (int n = 0; n <= s.trunc(); ++n)
    if (!s.coeff(n).is_zero()) os << "p^" << ajack::to_string(s.exponent(n)) << ": " << ajack::to_string(s.coeff(n)) << '\n';
  return os.str();
}

std::string series_csv(const ajack::NomeSeries& s) {
  std::ostringstream os;
  os << "n,exponent,j,c\n";
  for (int n = 0; n <= s.trunc(); ++n)
    for (const auto& [j, c] : s.coeff(n).terms()) os << n << ',' << ajack::to_string(s.exponent(n)) << ',' << j << ',' << ajack::to_string(c) << '\n';
  return os.str();
}

// ---- jack ----

int cmd_jack_compute(const Options& o) {
  const ajack::JackLabel label = label_of(o);
  const auto r = ajack::jack_series(label, order_of(o));
  const ajack::NomeSeries& s = o.unnormalized ? r.unnormalized : r.normalized;
  const std::string f = format_of(o, "json", {"json", "csv", "text"});
  if (f == "csv") {
    emit(o, series_csv(s));
  } else if (f == "text") {
    std::ostringstream os;
    os << "K=" << label.K << " k=" << label.k << " l=" << label.l << " alpha=" << ajack::to_string(r.alpha)
       << " eigenvalue=" << ajack::to_string(r.eigenvalue) << '\n'
       << series_text(s);
    emit(o, os.str());
  } else {
    json j;
    j["K"] = label.K;
    j["k"] = label.k;
    j["l"] = label.l;
    j["alpha"] = ajack::to_string(r.alpha);
    j["eigenvalue"] = ajack::to_string(r.eigenvalue);
    j["normalized"] = !o.unnormalized;
    const json series = json::parse(ajack::to_json(s));
    for (const auto& [key, value] : series.items()) j[key] = value;
    emit(o, j.dump(2));
  }
  return 0;
}

int cmd_jack_closed_form(const Options& o) {
  const ajack::JackLabel label = label_of(o);
  if (label.K != 1 && label.K != 2) throw UsageError("closed forms exist for K in {1, 2}");
  const ajack::ScaledSeries s = ajack::closed_form(label, order_of(o)).normalized();
  const std::string f = format_of(o, "json", {"json", "text"});
  if (f == "text") {
    std::ostringstream os;
    os << "scalar i^" << s.ipow << " * 2^" << ajack::to_string(s.two_exp) << '\n' << series_text(s.series);
    emit(o, os.str());
  } else {
    json j;
    j["K"] = label.K;
    j["k"] = label.k;
    j["l"] = label.l;
    j["ipow"] = s.ipow;
    j["twoExponent"] = ajack::to_string(s.two_exp);
    j["series"] = json::parse(ajack::to_json(s.series));
    emit(o, j.dump(2));
  }
  return 0;
}

int closed_form_checks(const Options& o, int K, int k_max) {
  const int order = order_of(o);
  std::vector<int> ks;
  if (o.ks) {
    if (*o.ks < 1) throw UsageError("--k must be >= 1");
    ks.push_back(*o.ks);
  } else {
    for (int k = 1; k <= k_max; ++k) ks.push_back(k);
  }
  std::vector<ajack::IdentityCheck> checks;
  for (int k : ks)
    for (int l = k; l <= K + k; ++l) {
      const ajack::JackLabel label{K, k, l};
      checks.push_back(ajack::compare_series("closed form K=" + std::to_string(K) + " k=" + std::to_string(k) + " l=" + std::to_string(l),
                                             ajack::ScaledSeries(ajack::jack_normalized(label, order)),
                                             ajack::closed_form(label, order)));
    }
  return report_checks(o, checks, json{{"K", K}, {"order", order}});
}

int cmd_jack_heat(const Options& o) {
  check_level(o);
  if (o.K != 1 && o.K != 2) throw UsageError("the heat check is available for K in {1, 2}");
  const int order = order_of(o);
  return report_checks(o, ajack::heat_check(o.K, o.k, order), json{{"K", o.K}, {"k", o.k}, {"order", order}});
}

// ---- smatrix ----

std::string matrix_out(const Options& o, const ajack::SMatrix& s) {
  const std::string f = format_of(o, "json", {"json", "csv", "text"});
  if (f == "csv") return ajack::smatrix_csv(s);
  if (f == "json") return ajack::smatrix_json(s, 2);
  std::ostringstream os;
  os.precision(12);
  for (int m = s.first(); m <= s.last(); ++m) {
    for (int l = s.first(); l <= s.last(); ++l) {
      const Complex c = s.at(m, l);
      os << (l == s.first() ? "" : "  ") << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << 'i';
    }
    os << '\n';
  }
  return os.str();
}

int cmd_smatrix_build(const Options& o) {
  check_level(o);
  ajack::SForm form;
  try {
    form = ajack::parse_sform(o.form);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (form == ajack::SForm::fixture && o.K > 4) throw UsageError("tables exist for K in {0, ..., 4}");
  emit(o, matrix_out(o, ajack::build_S(o.K, o.k, form)));
  return 0;
}

ajack::IdentityCheck entrywise(const std::string& name, const ajack::SMatrix& a, const ajack::SMatrix& b, double tol) {
  int wr = 0, wc = 0;
  const double worst = (a.entries - b.entries).cwiseAbs().maxCoeff(&wr, &wc);
  std::ostringstream os;
  os.precision(15);
  os << "max |difference| " << worst;
  if (!(worst < tol))
    os << " at (m=" << a.first() + wr << ", l=" << a.first() + wc << "): " << a.entries(wr, wc) << " vs " << b.entries(wr, wc);
  return {name, worst < tol, os.str()};
}

int cmd_smatrix_cross(const Options& o) {
  check_level(o);
  const double tol = tol_of(o, 1e-10);
  const ajack::SMatrix p = ajack::build_S_product(o.K, o.k);
  std::vector<ajack::IdentityCheck> checks{entrywise("product vs macdonald", p, ajack::build_S_macdonald(o.K, o.k), tol)};
  if (o.K <= 4) checks.push_back(entrywise("product vs table", p, ajack::fixture_S(o.K, o.k), tol));
  if (o.K == 3) checks.push_back(entrywise("product vs alternate table", p, ajack::fixture_S3_alternate(o.k), tol));
  return report_checks(o, checks, json{{"K", o.K}, {"k", o.k}, {"tol", tol}});
}

int cmd_smatrix_sj(const Options& o) {
  check_level(o);
  const ajack::SJData sj = ajack::build_SJ(o.K, o.k);
  const std::string f = format_of(o, "json", {"json", "csv", "text"});
  if (f == "json") {
    json j = json::parse(ajack::smatrix_json(sj.constant));
    j["weight"] = ajack::to_string(sj.weight);
    emit(o, j.dump(2));
  } else {
    emit(o, matrix_out(o, sj.constant));
  }
  return 0;
}

json proportionality_json(const ajack::Proportionality& p) {
  return json{{"scalar", complex_json(p.scalar)}, {"deviation", p.deviation}, {"modulusError", p.modulus_error}};
}

std::string proportionality_text(const ajack::Proportionality& p) {
  std::ostringstream os;
  os.precision(3);
  os << "scalar " << p.scalar << ", deviation " << p.deviation << ", |scalar|-1 " << p.modulus_error;
  return os.str();
}

int cmd_smatrix_relations(const Options& o) {
  check_level(o);
  const double tol = tol_of(o, 1e-8);
  const ajack::RelationsReport r = ajack::projective_relations(o.K, o.k);
  std::vector<ajack::IdentityCheck> checks{
      {"S^2 proportional to identity", r.s_squared.ok(tol), proportionality_text(r.s_squared)},
      {"(ST)^3 proportional to S^2", r.st_cubed.ok(tol), proportionality_text(r.st_cubed)}};
  return report_checks(o, checks,
                       json{{"K", o.K}, {"k", o.k}, {"tol", tol}, {"sSquared", proportionality_json(r.s_squared)},
                            {"stCubed", proportionality_json(r.st_cubed)}});
}

// ---- modular ----

int cmd_modular_verify(const Options& o) {
  check_level(o);
  const double tol = tol_of(o, 1e-6);
  const Complex tau = parse_complex(o.tau, "--tau"), z = parse_complex(o.z, "--z"), u = parse_complex(o.u, "--u");
  if (!(tau.imag() > 0)) throw UsageError("--tau must have positive imaginary part");
  const int order = o.order ? order_of(o) : 20;
  ajack::ModularReport r;
  try {
    r = ajack::verify_modular_numeric(o.K, o.k, z, u, tau, order, tol);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  json lhs = json::array(), rhs = json::array(), dev = json::array();
  for (std::size_t i = 0; i < r.lhs.size(); ++i) {
    lhs.push_back(complex_json(r.lhs[i]));
    rhs.push_back(complex_json(r.rhs[i]));
    dev.push_back(std::abs(r.lhs[i] - r.scalar * r.rhs[i]));
  }
  const bool pass = r.ok(tol);
  if (format_of(o, "json", {"json", "text"}) == "text") {
    std::ostringstream os;
    os << (pass ? "PASS" : "FAIL") << " K=" << o.K << " k=" << o.k << " deviation " << r.deviation << " constant "
       << r.scalar << " |constant|-1 " << r.modulus_error << " tail " << r.tail << '\n';
    emit(o, os.str());
  } else {
    json j{{"K", o.K},          {"k", o.k},           {"order", order},     {"tau", complex_json(tau)},
           {"z", complex_json(z)}, {"u", complex_json(u)}, {"rows", json::array()}, {"lhs", lhs},
           {"rhs", rhs},        {"entryDeviations", dev}, {"scalar", complex_json(r.scalar)},
           {"deviation", r.deviation}, {"modulusError", r.modulus_error}, {"tail", r.tail}, {"tol", tol}, {"pass", pass}};
    for (int m = o.k; m <= o.K + o.k; ++m) j["rows"].push_back(m);
    emit(o, j.dump(2));
  }
  if (!pass) {
    std::size_t worst = 0;
    for (std::size_t i = 1; i < r.lhs.size(); ++i)
      if (dev[i].get<double>() > dev[worst].get<double>()) worst = i;
    std::cerr << "check failed at m=" << o.k + static_cast<int>(worst) << ": lhs " << r.lhs[worst] << " vs constant*rhs "
              << r.scalar * r.rhs[worst] << '\n';
  }
  return pass ? 0 : 1;
}

// ---- selberg / gfactor ----

int cmd_selberg(const Options& o) {
  if (o.n < 0) throw UsageError("--n must be >= 0");
  const std::string mode = o.mode.empty() ? "closed" : o.mode;
  if (mode != "closed" && mode != "quadrature" && mode != "both") throw UsageError("--mode must be closed, quadrature or both");
  json j{{"n", o.n}, {"alpha", o.alpha}, {"beta", o.beta}, {"gamma", o.gamma}};
  if (mode != "closed" && (o.n > 2 || o.alpha <= 0 || o.beta <= 0 || o.gamma <= 0))
    throw UsageError("quadrature needs --n <= 2 and positive --alpha, --beta, --gamma");
  double closed = 0, quad = 0;
  if (mode != "quadrature") {
    try {
      j["closed"] = closed = ajack::selberg_B(o.n, o.alpha, o.beta, o.gamma, ajack::SelbergMode::closed);
    } catch (const std::domain_error& e) {
      throw UsageError(e.what());
    }
  }
  try {
    if (mode != "closed") j["quadrature"] = quad = ajack::selberg_B(o.n, o.alpha, o.beta, o.gamma, ajack::SelbergMode::quadrature);
  } catch (const std::domain_error& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return 1;
  }
  int code = 0;
  if (mode == "both") {
    const double tol = tol_of(o, 1e-6);
    const double rel = std::abs(closed - quad) / std::abs(closed);
    j["relativeError"] = rel;
    j["pass"] = rel < tol;
    if (!(rel < tol)) {
      std::cerr << "check failed: closed " << closed << " vs quadrature " << quad << '\n';
      code = 1;
    }
  }
  emit(o, j.dump(2));
  return code;
}

int cmd_gfactor(const Options& o) {
  check_level(o);
  const int kappa = o.K + 2 * o.k;
  const int m = o.m < 0 ? o.k : o.m;
  if (m < o.k || m > kappa - o.k) throw UsageError("--m must satisfy k <= m <= K + k");
  const std::string mode = o.mode.empty() ? "ratio" : o.mode;
  json j{{"K", o.K}, {"k", o.k}, {"m", m}, {"mode", mode}};
  if (mode == "ratio") {
    const int l = o.l ? *o.l : m + 1;
    if (l < o.k || l > kappa - o.k) throw UsageError("--l must satisfy k <= l <= K + k");
    j["l"] = l;
    j["value"] = complex_json(ajack::g_ratio(o.K, o.k, m, l));
  } else if (mode == "absolute") {
    j["value"] = complex_json(ajack::g_absolute(o.K, o.k, m));
  } else {
    throw UsageError("--mode must be ratio or absolute");
  }
  emit(o, j.dump(2));
  return 0;
}

// ---- theta / suite ----

int cmd_theta_laws(const Options& o) {
  if (o.points < 1) throw UsageError("--points must be >= 1");
  const double tol = tol_of(o, 1e-9);
  auto checks = ajack::theta_s_laws(o.points, o.seed, tol);
  const auto t = ajack::theta_t_laws(o.points, o.seed, tol);
  checks.insert(checks.end(), t.begin(), t.end());
  checks.push_back(ajack::triple_product_check(o.order ? order_of(o) : 20));
  return report_checks(o, checks, json{{"points", o.points}, {"seed", o.seed}, {"tol", tol}});
}

int cmd_suite(const Options& o) {
  std::vector<ajack::CriterionResult> results;
  if (o.only.empty()) {
    results = ajack::run_acceptance(o.quick);
  } else {
    for (const auto& id : o.only) {
      try {
        results.push_back(ajack::run_criterion(id, o.quick));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
  }
  bool pass = true;
  for (const auto& r : results) pass = pass && r.pass;
  if (format_of(o, "text", {"json", "text"}) == "json") {
    json arr = json::array();
    for (const auto& r : results)
      arr.push_back(json{{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}, {"checks", checks_json(r.checks)}});
    emit(o, json{{"quick", o.quick}, {"pass", pass}, {"criteria", arr}}.dump(2));
  } else {
    std::ostringstream os;
    for (const auto& r : results) os << (r.pass ? "PASS " : "FAIL ") << r.id << " " << r.title << ": " << r.detail << '\n';
    emit(o, os.str());
  }
  return pass ? 0 : 1;
}

void add_common(CLI::App* c, Options& o, bool level = true) {
  if (level) {
    c->add_option("--K", o.K, "level K >= 0");
    c->add_option("--k", o.k, "coupling k >= 1");
  }
  c->add_option("--format", o.format, "json, csv or text");
  c->add_option("-o,--output", o.output, "write the report to this path instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affine Jack polynomials of affine sl_2: series, modular data and checks"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto* jack = app.add_subcommand("jack", "affine Jack polynomials")->require_subcommand(1);
  {
    auto* c = jack->add_subcommand("compute", "J_{lambda,K} as an exact series");
    add_common(c, o);
    c->add_option("--l", o.l, "k <= l <= K + k (default k)");
    c->add_option("--order", o.order, "p-order (default $AJACK_DEFAULT_ORDER or 12)");
    c->add_flag("--unnormalized", o.unnormalized, "emit Jhat without the p^alpha factor");
    c->callback([&] { action = [&] { return cmd_jack_compute(o); }; });

    c = jack->add_subcommand("closed-form", "the level-1/2 closed form in characters and eta quotients");
    add_common(c, o);
    c->add_option("--l", o.l, "k <= l <= K + k (default k)");
    c->add_option("--order", o.order, "p-order");
    c->callback([&] { action = [&] { return cmd_jack_closed_form(o); }; });

    c = jack->add_subcommand("check-level1", "recursion = closed form at K=1 (k = 1..4 unless --k)");
    add_common(c, o, false);
    c->add_option("--k", o.ks, "a single k");
    c->add_option("--order", o.order, "p-order");
    c->callback([&] { action = [&] { return closed_form_checks(o, 1, 4); }; });

    c = jack->add_subcommand("check-level2", "recursion = closed form at K=2 (k = 1..3 unless --k)");
    add_common(c, o, false);
    c->add_option("--k", o.ks, "a single k");
    c->add_option("--order", o.order, "p-order");
    c->callback([&] { action = [&] { return closed_form_checks(o, 2, 3); }; });

    c = jack->add_subcommand("heat-check", "the heat equation for the transition rows");
    add_common(c, o);
    c->add_option("--order", o.order, "p-order");
    c->callback([&] { action = [&] { return cmd_jack_heat(o); }; });
  }

  auto* sm = app.add_subcommand("smatrix", "modular S matrices")->require_subcommand(1);
  {
    auto* c = sm->add_subcommand("build", "S(K,k)");
    add_common(c, o);
    c->add_option("--form", o.form, "product, macdonald or fixture");
    c->callback([&] { action = [&] { return cmd_smatrix_build(o); }; });

    c = sm->add_subcommand("cross-check", "product vs Macdonald vs tables");
    add_common(c, o);
    c->add_option("--tol", o.tol, "entrywise tolerance (default 1e-10)");
    c->callback([&] { action = [&] { return cmd_smatrix_cross(o); }; });

    c = sm->add_subcommand("sj", "constant part and weight of S^J(K,k)");
    add_common(c, o);
    c->callback([&] { action = [&] { return cmd_smatrix_sj(o); }; });

    c = sm->add_subcommand("relations", "(S^J)^2 and (S^J T^J)^3 proportionality");
    add_common(c, o);
    c->add_option("--tol", o.tol, "tolerance (default 1e-8)");
    c->callback([&] { action = [&] { return cmd_smatrix_relations(o); }; });
  }

  auto* mod = app.add_subcommand("modular", "numeric modular checks")->require_subcommand(1);
  {
    auto* c = mod->add_subcommand("verify-s", "evaluate both sides of the S-transformation of J");
    add_common(c, o);
    c->add_option("--tau", o.tau, "tau as \"re,im\" (default 0,1.3)");
    c->add_option("--z", o.z, "z as \"re,im\" (default 0.17,0)");
    c->add_option("--u", o.u, "u as \"re,im\" (default 0,0)");
    c->add_option("--order", o.order, "p-order (default 20)");
    c->add_option("--tol", o.tol, "tolerance (default 1e-6)");
    c->callback([&] { action = [&] { return cmd_modular_verify(o); }; });
  }

  auto* sel = app.add_subcommand("selberg", "Selberg integrals")->require_subcommand(1);
  {
    auto* c = sel->add_subcommand("eval", "B_n(alpha, beta, gamma)");
    add_common(c, o, false);
    c->add_option("--n", o.n, "dimension n");
    c->add_option("--alpha", o.alpha, "alpha");
    c->add_option("--beta", o.beta, "beta");
    c->add_option("--gamma", o.gamma, "gamma");
    c->add_option("--mode", o.mode, "closed, quadrature or both");
    c->add_option("--tol", o.tol, "relative tolerance for --mode both (default 1e-6)");
    c->callback([&] { action = [&] { return cmd_selberg(o); }; });
  }

  {
    auto* c = app.add_subcommand("gfactor", "normalization factors g_{m,K,k}");
    add_common(c, o);
    c->add_option("--m", o.m, "row index (default k)");
    c->add_option("--l", o.l, "ratio target (default m + 1)");
    c->add_option("--mode", o.mode, "ratio (g_m / g_l) or absolute");
    c->callback([&] { action = [&] { return cmd_gfactor(o); }; });
  }

  auto* th = app.add_subcommand("theta", "theta functions")->require_subcommand(1);
  {
    auto* c = th->add_subcommand("check-laws", "S- and T-laws at random points and the triple product");
    add_common(c, o, false);
    c->add_option("--points", o.points, "number of random points (default 20)");
    c->add_option("--seed", o.seed, "random seed");
    c->add_option("--tol", o.tol, "relative tolerance (default 1e-9)");
    c->add_option("--order", o.order, "order of the triple-product check (default 20)");
    c->callback([&] { action = [&] { return cmd_theta_laws(o); }; });
  }

  auto* su = app.add_subcommand("suite", "acceptance suite")->require_subcommand(1);
  {
    auto* c = su->add_subcommand("acceptance", "criteria A1-A12");
    add_common(c, o, false);
    c->add_flag("--quick", o.quick, "reduced orders, A1-A11");
    c->add_option("--only", o.only, "run only these criteria (e.g. A3 A7)");
    c->callback([&] { action = [&] { return cmd_suite(o); }; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
