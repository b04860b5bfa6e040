#include "ajack/qseries.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace ajack {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

long den_long(const Rational& r) {
  if (!r.get_den().fits_slong_p()) throw SeriesError("grid denominator overflow");
  return r.get_den().get_si();
}

int checked_int(const Rational& r, const char* what) {
  if (!is_integer(r)) throw SeriesError(std::string(what) + ": value " + to_string(r) + " is off the grid");
  const long v = to_long(r);
  if (v < INT32_MIN || v > INT32_MAX) throw SeriesError(std::string(what) + ": index overflow");
  return static_cast<int>(v);
}

Rational pow2(long e) {
  Rational r(1);
  Integer two_e;
  mpz_ui_pow_ui(two_e.get_mpz_t(), 2, static_cast<unsigned long>(std::labs(e)));
  if (e >= 0) r = Rational(two_e);
  else r = Rational(Integer(1), two_e);
  r.canonicalize();
  return r;
}

struct Frame {
  Rational lead;
  int grid;
  Rational top;
};

Frame common_frame(const NomeSeries& a, const NomeSeries& b) {
  const Rational diff = a.lead() - b.lead();
  long g = lcm(a.grid(), b.grid());
  g = lcm(g, den_long(diff));
  if (g > (1L << 20)) throw SeriesError("common grid too fine");
  return {a.lead() < b.lead() ? a.lead() : b.lead(), static_cast<int>(g),
          a.top() < b.top() ? a.top() : b.top()};
}

}  // namespace

// ---------------------------------------------------------------------------------------------
// LaurentX

LaurentX::LaurentX(const Rational& c) {
  if (c != 0) terms_.emplace(0, c);
}

LaurentX LaurentX::monomial(int j, const Rational& c) {
  LaurentX r;
  if (c != 0) r.terms_.emplace(j, c);
  return r;
}

int LaurentX::min_degree() const {
  if (terms_.empty()) throw SeriesError("min_degree of zero Laurent polynomial");
  return terms_.begin()->first;
}

int LaurentX::max_degree() const {
  if (terms_.empty()) throw SeriesError("max_degree of zero Laurent polynomial");
  return terms_.rbegin()->first;
}

Rational LaurentX::coeff(int j) const {
  auto it = terms_.find(j);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentX::add_term(int j, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(j, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentX& LaurentX::operator+=(const LaurentX& other) {
  for (const auto& [j, c] : other.terms_) add_term(j, c);
  return *this;
}

LaurentX& LaurentX::operator-=(const LaurentX& other) {
  for (const auto& [j, c] : other.terms_) add_term(j, -c);
  return *this;
}

LaurentX& LaurentX::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [j, v] : terms_) v *= c;
  return *this;
}

LaurentX LaurentX::shifted(int s) const {
  LaurentX r;
  for (const auto& [j, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), j + s, c);
  return r;
}

LaurentX LaurentX::substituted(int s) const {
  if (s == 0) throw SeriesError("substitute x -> x^0 is not supported");
  LaurentX r;
  for (const auto& [j, c] : terms_) r.terms_.emplace(j * s, c);
  return r;
}

bool LaurentX::is_reflection_symmetric() const {
  for (const auto& [j, c] : terms_)
    if (coeff(-j) != c) return false;
  return true;
}

Complex LaurentX::eval(Complex x) const {
  Complex sum = 0.0;
  for (const auto& [j, c] : terms_) sum += to_double(c) * std::pow(x, j);
  return sum;
}

LaurentX operator+(LaurentX a, const LaurentX& b) { return a += b; }
LaurentX operator-(LaurentX a, const LaurentX& b) { return a -= b; }
LaurentX operator-(const LaurentX& a) { return a * Rational(-1); }

LaurentX operator*(const LaurentX& a, const LaurentX& b) {
  LaurentX r;
  for (const auto& [ja, ca] : a.terms())
    for (const auto& [jb, cb] : b.terms()) r.add_term(ja + jb, Rational(ca * cb));
  return r;
}

LaurentX operator*(LaurentX a, const Rational& c) { return a *= c; }
LaurentX operator*(const Rational& c, LaurentX a) { return a *= c; }

LaurentX divide_exact(const LaurentX& a, const LaurentX& b) {
  if (b.is_zero()) throw SeriesError("Laurent division by zero");
  if (a.is_zero()) return {};
  const int db = b.max_degree();
  const Rational lb = b.coeff(db);
  const int qmin = a.min_degree() - b.min_degree();
  LaurentX rem = a;
  LaurentX q;
  while (!rem.is_zero()) {
    const int dr = rem.max_degree();
    const int dq = dr - db;
    if (dq < qmin)
      throw SeriesError("inexact Laurent division: (" + to_string(a) + ") / (" + to_string(b) + ")");
    const Rational c = rem.coeff(dr) / lb;
    q.add_term(dq, c);
    for (const auto& [j, cb] : b.terms()) rem.add_term(j + dq, Rational(-c * cb));
  }
  return q;
}

std::string to_string(const LaurentX& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [j, c] : a.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")";
    if (j != 0) os << "x^" << j;
  }
  return os.str();
}

// ---------------------------------------------------------------------------------------------
// NomeSeries

NomeSeries::NomeSeries(int level, int grid, Rational lead, std::vector<LaurentX> coeffs)
    : level_(level), grid_(grid), lead_(std::move(lead)), coeffs_(std::move(coeffs)) {
  if (grid_ < 1) throw SeriesError("grid denominator must be >= 1");
  if (coeffs_.empty()) throw SeriesError("series needs at least one coefficient");
  lead_.canonicalize();
}

NomeSeries NomeSeries::zero(int level, int grid, const Rational& lead, int trunc) {
  if (trunc < 0) throw SeriesError("negative truncation order");
  return NomeSeries(level, grid, lead, std::vector<LaurentX>(static_cast<std::size_t>(trunc) + 1));
}

NomeSeries NomeSeries::constant(const LaurentX& c, int level, int order) {
  auto s = zero(level, 1, Rational(0), order);
  s.coeffs_[0] = c;
  return s;
}

Rational NomeSeries::exponent(int n) const { return lead_ + make_rational(n, grid_); }

Rational NomeSeries::top() const { return exponent(trunc()); }

bool NomeSeries::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

Rational NomeSeries::coefficient(const Rational& e, int j) const {
  if (e > top()) throw SeriesError("coefficient requested beyond truncation: p^" + to_string(e));
  if (e < lead_) return 0;
  const Rational idx = (e - lead_) * grid_;
  if (!is_integer(idx)) return 0;
  return coeffs_[static_cast<std::size_t>(to_long(idx))].coeff(j);
}

NomeSeries NomeSeries::reframed(const Rational& new_lead, int new_grid, const Rational& new_top) const {
  if (new_grid % grid_ != 0) throw SeriesError("reframe: new grid must be a multiple of the old grid");
  if (new_lead > lead_) throw SeriesError("reframe: cannot raise the lead");
  if (new_top > top()) throw SeriesError("reframe: cannot extend beyond the known top");
  const int factor = new_grid / grid_;
  const int offset = checked_int((lead_ - new_lead) * new_grid, "reframe offset");
  const int new_trunc = checked_int((new_top - new_lead) * new_grid, "reframe top");
  if (new_trunc < 0) throw SeriesError("reframe: top below lead");
  std::vector<LaurentX> out(static_cast<std::size_t>(new_trunc) + 1);
  for (int n = 0; n <= trunc(); ++n) {
    const long idx = offset + static_cast<long>(n) * factor;
    if (idx > new_trunc) break;
    out[static_cast<std::size_t>(idx)] = coeffs_[static_cast<std::size_t>(n)];
  }
  return NomeSeries(level_, new_grid, new_lead, std::move(out));
}

NomeSeries NomeSeries::truncated(const Rational& new_top) const {
  if (new_top >= top()) return *this;
  return reframed(lead_, grid_, new_top);
}

NomeSeries NomeSeries::with_level(int level) const {
  NomeSeries r = *this;
  r.level_ = level;
  return r;
}

NomeSeries NomeSeries::trimmed() const {
  int first = 0;
  while (first <= trunc() && coeffs_[static_cast<std::size_t>(first)].is_zero()) ++first;
  if (first == 0 || first > trunc()) return *this;
  std::vector<LaurentX> out(coeffs_.begin() + first, coeffs_.end());
  return NomeSeries(level_, grid_, exponent(first), std::move(out));
}

NomeSeries NomeSeries::compacted() const {
  long g = 0;
  for (int n = 0; n <= trunc(); ++n)
    if (!coeffs_[static_cast<std::size_t>(n)].is_zero()) g = gcd(g, n);
  g = gcd(g, trunc());
  if (g <= 1 || grid_ % g != 0) {
    // Only coarsen by factors of the grid so exponents stay representable.
    long best = 1;
    for (long d = 2; d <= grid_; ++d)
      if (grid_ % d == 0 && g % d == 0) best = d;
    g = best;
  }
  if (g <= 1) return *this;
  std::vector<LaurentX> out;
  for (int n = 0; n <= trunc(); n += static_cast<int>(g)) out.push_back(coeffs_[static_cast<std::size_t>(n)]);
  return NomeSeries(level_, grid_ / static_cast<int>(g), lead_, std::move(out));
}

bool operator==(const NomeSeries& a, const NomeSeries& b) {
  return a.level_ == b.level_ && a.grid_ == b.grid_ && a.lead_ == b.lead_ && a.coeffs_ == b.coeffs_;
}

// ---------------------------------------------------------------------------------------------
// SeriesBuilder

SeriesBuilder::SeriesBuilder(int level, Rational lead, Rational order)
    : level_(level), lead_(std::move(lead)), top_(lead_ + order) {
  if (order < 0) throw SeriesError("negative truncation order");
}

void SeriesBuilder::add(const Rational& e, int j, const Rational& c) {
  if (e < lead_) throw SeriesError("SeriesBuilder: term p^" + to_string(e) + " below the lead");
  if (e > top_) return;
  terms_[e].add_term(j, c);
}

NomeSeries SeriesBuilder::build() const {
  long g = den_long(top_ - lead_);
  for (const auto& [e, c] : terms_) g = lcm(g, den_long(e - lead_));
  const int trunc = checked_int((top_ - lead_) * g, "SeriesBuilder top");
  auto s = NomeSeries::zero(level_, static_cast<int>(g), lead_, trunc);
  for (const auto& [e, c] : terms_) s.coeff_mut(checked_int((e - lead_) * g, "SeriesBuilder")) += c;
  return s;
}

// ---------------------------------------------------------------------------------------------
// Ring operations

NomeSeries add(const NomeSeries& a, const NomeSeries& b) {
  if (a.level() != b.level())
    throw SeriesError("add: level mismatch (" + std::to_string(a.level()) + " vs " +
                      std::to_string(b.level()) + ")");
  const Frame f = common_frame(a, b);
  NomeSeries ra = a.reframed(f.lead, f.grid, f.top);
  const NomeSeries rb = b.reframed(f.lead, f.grid, f.top);
  for (int n = 0; n <= ra.trunc(); ++n) ra.coeff_mut(n) += rb.coeff(n);
  return ra;
}

NomeSeries negate(const NomeSeries& a) { return scale(a, Rational(-1)); }

NomeSeries sub(const NomeSeries& a, const NomeSeries& b) { return add(a, negate(b)); }

NomeSeries scale(const NomeSeries& a, const Rational& c) {
  NomeSeries r = a;
  for (int n = 0; n <= r.trunc(); ++n) r.coeff_mut(n) *= c;
  return r;
}

NomeSeries mul(const NomeSeries& a, const NomeSeries& b) {
  const int g = static_cast<int>(lcm(a.grid(), b.grid()));
  const NomeSeries ra = a.reframed(a.lead(), g, a.top());
  const NomeSeries rb = b.reframed(b.lead(), g, b.top());
  const int n_out = std::min(ra.trunc(), rb.trunc());
  auto out = NomeSeries::zero(a.level() + b.level(), g, a.lead() + b.lead(), n_out);
  for (int i = 0; i <= n_out; ++i) {
    const LaurentX& ai = ra.coeff(i);
    if (ai.is_zero()) continue;
    for (int k = 0; i + k <= n_out; ++k) {
      const LaurentX& bk = rb.coeff(k);
      if (bk.is_zero()) continue;
      out.coeff_mut(i + k) += ai * bk;
    }
  }
  return out;
}

NomeSeries mul_monomial(const NomeSeries& a, int j, const Rational& c) {
  NomeSeries r = a;
  for (int n = 0; n <= r.trunc(); ++n) r.coeff_mut(n) = r.coeff(n).shifted(j) * c;
  return r;
}

NomeSeries shift_p(const NomeSeries& a, const Rational& r) {
  return NomeSeries(a.level(), a.grid(), a.lead() + r, a.coeffs());
}

NomeSeries invert(const NomeSeries& a) {
  const NomeSeries t = a.trimmed();
  const LaurentX& a0 = t.coeff(0);
  if (a0.is_zero()) throw SeriesError("invert: series is zero through its truncation");
  if (!a0.is_monomial())
    throw SeriesError("invert: leading coefficient " + to_string(a0) + " is not a monomial");
  const auto& [j0, c0] = *a0.terms().begin();
  const LaurentX inv0 = LaurentX::monomial(-j0, Rational(1) / c0);
  std::vector<LaurentX> b(static_cast<std::size_t>(t.trunc()) + 1);
  b[0] = inv0;
  for (int n = 1; n <= t.trunc(); ++n) {
    LaurentX acc;
    for (int i = 1; i <= n; ++i) {
      if (t.coeff(i).is_zero() || b[static_cast<std::size_t>(n - i)].is_zero()) continue;
      acc += t.coeff(i) * b[static_cast<std::size_t>(n - i)];
    }
    b[static_cast<std::size_t>(n)] = -(inv0 * acc);
  }
  return NomeSeries(-t.level(), t.grid(), -t.lead(), std::move(b));
}

NomeSeries divide(const NomeSeries& a, const NomeSeries& b) {
  const NomeSeries bt = b.trimmed();
  if (bt.coeff(0).is_zero()) throw SeriesError("divide: divisor is zero through its truncation");
  const int g = static_cast<int>(lcm(a.grid(), bt.grid()));
  const NomeSeries ra = a.reframed(a.lead(), g, a.top());
  const NomeSeries rb = bt.reframed(bt.lead(), g, bt.top());
  const int n_out = std::min(ra.trunc(), rb.trunc());
  std::vector<LaurentX> q(static_cast<std::size_t>(n_out) + 1);
  for (int n = 0; n <= n_out; ++n) {
    LaurentX acc = ra.coeff(n);
    for (int i = 1; i <= n; ++i) {
      if (rb.coeff(i).is_zero() || q[static_cast<std::size_t>(n - i)].is_zero()) continue;
      acc -= rb.coeff(i) * q[static_cast<std::size_t>(n - i)];
    }
    q[static_cast<std::size_t>(n)] = divide_exact(acc, rb.coeff(0));
  }
  return NomeSeries(a.level() - b.level(), g, a.lead() - bt.lead(), std::move(q));
}

NomeSeries pow_rational(const NomeSeries& a, const Rational& c) {
  if (c == 0) {
    auto one = NomeSeries::zero(0, a.grid(), Rational(0), a.trunc());
    one.coeff_mut(0) = LaurentX(Rational(1));
    return one;
  }
  const NomeSeries t = a.trimmed();
  const LaurentX& a0 = t.coeff(0);
  if (a0.is_zero()) throw SeriesError("pow_rational: series is zero through its truncation");
  if (!a0.is_monomial())
    throw SeriesError("pow_rational: leading coefficient " + to_string(a0) + " is not a monomial");
  const auto& [j0, c0] = *a0.terms().begin();
  const bool integral = is_integer(c);
  if (!integral && c0 != 1)
    throw SeriesError("pow_rational: leading coefficient must be 1 for non-integer exponents");
  const Rational jc = c * j0;
  const Rational kc = c * t.level();
  if (!is_integer(jc)) throw SeriesError("pow_rational: x-power of the result is not integral");
  if (!is_integer(kc)) throw SeriesError("pow_rational: level of the result is not integral");

  // Normalize to u = 1 + O(p), then J.C.P. Miller: n b_n = sum_i ((c+1) i - n) u_i b_{n-i}.
  const LaurentX norm = LaurentX::monomial(-j0, Rational(1) / c0);
  const int n_max = t.trunc();
  std::vector<LaurentX> u(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) u[static_cast<std::size_t>(n)] = t.coeff(n) * norm;
  std::vector<LaurentX> b(static_cast<std::size_t>(n_max) + 1);
  b[0] = LaurentX(Rational(1));
  for (int n = 1; n <= n_max; ++n) {
    LaurentX acc;
    for (int i = 1; i <= n; ++i) {
      const LaurentX& ui = u[static_cast<std::size_t>(i)];
      const LaurentX& bj = b[static_cast<std::size_t>(n - i)];
      if (ui.is_zero() || bj.is_zero()) continue;
      const Rational w = (c + 1) * i - n;
      if (w == 0) continue;
      acc += (ui * bj) * w;
    }
    b[static_cast<std::size_t>(n)] = acc * Rational(Rational(1) / n);
  }
  Rational scalar(1);
  if (integral) {
    const long e = to_long(c);
    Rational base = e >= 0 ? c0 : Rational(Rational(1) / c0);
    for (long i = 0; i < std::labs(e); ++i) scalar *= base;
  }
  const int jout = static_cast<int>(to_long(jc));
  for (auto& bn : b) bn = bn.shifted(jout) * scalar;
  return NomeSeries(static_cast<int>(to_long(kc)), t.grid(), t.lead() * c, std::move(b));
}

NomeSeries p_derivative(const NomeSeries& a) {
  NomeSeries r = a;
  for (int n = 0; n <= r.trunc(); ++n) r.coeff_mut(n) *= a.exponent(n);
  return r;
}

NomeSeries substitute_x(const NomeSeries& a, int s) {
  NomeSeries r = a;
  for (int n = 0; n <= r.trunc(); ++n) r.coeff_mut(n) = a.coeff(n).substituted(s);
  return r;
}

NomeSeries substitute_p(const NomeSeries& a, const Rational& r) {
  if (r <= 0) throw SeriesError("substitute_p: scale must be positive");
  const long u = to_long(Rational(r.get_num()));
  const long v = den_long(r);
  const int g = static_cast<int>(a.grid() * v);
  std::vector<LaurentX> out(static_cast<std::size_t>(a.trunc() * u) + 1);
  for (int n = 0; n <= a.trunc(); ++n) out[static_cast<std::size_t>(n * u)] = a.coeff(n);
  return NomeSeries(a.level(), g, a.lead() * r, std::move(out));
}

// ---------------------------------------------------------------------------------------------
// Comparison

std::string SeriesMismatch::describe() const {
  return "coefficient of x^" + std::to_string(j) + " p^" + to_string(exponent) + ": " +
         to_string(lhs) + " vs " + to_string(rhs);
}

std::optional<SeriesMismatch> first_mismatch(const NomeSeries& a, const NomeSeries& b,
                                             std::optional<Rational> through) {
  Frame f = common_frame(a, b);
  if (through && *through < f.top) {
    // Round the requested cut down onto the common grid.
    Rational steps = (*through - f.lead) * f.grid;
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), steps.get_num_mpz_t(), steps.get_den_mpz_t());
    Rational cut(fl, Integer(f.grid));
    cut.canonicalize();
    f.top = f.lead + cut;
  }
  if (f.top < f.lead) return std::nullopt;
  const NomeSeries ra = a.reframed(f.lead, f.grid, f.top);
  const NomeSeries rb = b.reframed(f.lead, f.grid, f.top);
  for (int n = 0; n <= ra.trunc(); ++n) {
    const LaurentX& x = ra.coeff(n);
    const LaurentX& y = rb.coeff(n);
    if (x == y) continue;
    LaurentX d = x - y;
    const int j = d.min_degree();
    return SeriesMismatch{ra.exponent(n), j, x.coeff(j), y.coeff(j)};
  }
  if (a.level() != b.level() && !(ra.is_zero() && rb.is_zero()))
    return SeriesMismatch{f.lead, 0, Rational(a.level()), Rational(b.level())};
  return std::nullopt;
}

bool equal_through(const NomeSeries& a, const NomeSeries& b, std::optional<Rational> through) {
  return !first_mismatch(a, b, std::move(through)).has_value();
}

// ---------------------------------------------------------------------------------------------
// Numerics

Complex eval_numeric(const NomeSeries& a, Complex z, Complex u, Complex tau) {
  if (tau.imag() <= 0) throw std::domain_error("eval_numeric: Im tau must be positive");
  const Complex I(0.0, 1.0);
  const Complex x = std::exp(kTwoPi * I * z);
  const Complex step = std::exp(kTwoPi * I * tau / static_cast<double>(a.grid()));
  Complex sum = 0.0;
  Complex pw = 1.0;
  for (int n = 0; n <= a.trunc(); ++n) {
    const LaurentX& c = a.coeff(n);
    if (!c.is_zero()) sum += c.eval(x) * pw;
    pw *= step;
  }
  const Complex lead = std::exp(kTwoPi * I * tau * to_double(a.lead()));
  const Complex level = std::exp(kTwoPi * I * static_cast<double>(a.level()) * u);
  return level * lead * sum;
}

double first_omitted_order_magnitude(const NomeSeries& a, Complex tau) {
  if (tau.imag() <= 0) throw std::domain_error("Im tau must be positive");
  return std::exp(-kTwoPi * tau.imag() * (a.trunc() + 1) / static_cast<double>(a.grid()));
}

double last_order_magnitude(const NomeSeries& a, Complex z, Complex tau) {
  if (tau.imag() <= 0) throw std::domain_error("Im tau must be positive");
  const Complex I(0.0, 1.0);
  const Complex x = std::exp(kTwoPi * I * z);
  for (int n = a.trunc(); n >= 0; --n) {
    const LaurentX& c = a.coeff(n);
    if (c.is_zero()) continue;
    double mag = 0;
    for (const auto& [j, v] : c.terms()) mag += std::abs(to_double(v)) * std::pow(std::abs(x), j);
    return mag * std::exp(-kTwoPi * tau.imag() * to_double(a.exponent(n)));
  }
  return 0.0;
}

// ---------------------------------------------------------------------------------------------
// ScaledSeries

ScaledSeries::ScaledSeries(NomeSeries s, int ipow_, Rational two_exp_)
    : ipow(ipow_), two_exp(std::move(two_exp_)), series(std::move(s)) {}

ScaledSeries ScaledSeries::normalized() const {
  ScaledSeries r = *this;
  r.ipow = ((r.ipow % 4) + 4) % 4;
  if (r.ipow >= 2) {
    r.series = negate(r.series);
    r.ipow -= 2;
  }
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), r.two_exp.get_num_mpz_t(), r.two_exp.get_den_mpz_t());
  if (fl != 0) {
    if (!fl.fits_slong_p()) throw SeriesError("2-exponent overflow");
    r.series = scale(r.series, pow2(fl.get_si()));
    r.two_exp -= Rational(fl);
  }
  return r;
}

Complex ScaledSeries::scalar() const {
  const Complex I(0.0, 1.0);
  return std::pow(I, ((ipow % 4) + 4) % 4) * std::pow(2.0, to_double(two_exp));
}

ScaledSeries mul(const ScaledSeries& a, const ScaledSeries& b) {
  return ScaledSeries(mul(a.series, b.series), a.ipow + b.ipow, a.two_exp + b.two_exp).normalized();
}

ScaledSeries divide(const ScaledSeries& a, const ScaledSeries& b) {
  return ScaledSeries(divide(a.series, b.series), a.ipow - b.ipow, a.two_exp - b.two_exp).normalized();
}

ScaledSeries add(const ScaledSeries& a, const ScaledSeries& b) {
  const ScaledSeries na = a.normalized();
  const ScaledSeries nb = b.normalized();
  if (na.series.is_zero()) return ScaledSeries(add(na.series, nb.series), nb.ipow, nb.two_exp);
  if (nb.series.is_zero()) return ScaledSeries(add(na.series, nb.series), na.ipow, na.two_exp);
  if (na.ipow != nb.ipow || na.two_exp != nb.two_exp)
    throw SeriesError("add: scaled series carry different exact scalars");
  return ScaledSeries(add(na.series, nb.series), na.ipow, na.two_exp);
}

ScaledSeries pow_rational(const ScaledSeries& a, const Rational& c) {
  const ScaledSeries na = a.normalized();
  if (na.ipow != 0 && !is_integer(c))
    throw SeriesError("pow_rational: non-integer power of a series carrying a factor i");
  const int ip = na.ipow == 0 ? 0 : static_cast<int>(to_long(c) % 4);
  return ScaledSeries(pow_rational(na.series, c), ip, na.two_exp * c).normalized();
}

bool equal_through(const ScaledSeries& a, const ScaledSeries& b, std::optional<Rational> through) {
  const ScaledSeries na = a.normalized();
  const ScaledSeries nb = b.normalized();
  if (na.series.is_zero() && nb.series.is_zero()) return true;
  return na.ipow == nb.ipow && na.two_exp == nb.two_exp &&
         equal_through(na.series, nb.series, std::move(through));
}

Complex eval_numeric(const ScaledSeries& a, Complex z, Complex u, Complex tau) {
  return a.scalar() * eval_numeric(a.series, z, u, tau);
}

}  // namespace ajack
