#pragma once

// Truncated series in fractional powers of the nome p = e^{2 pi i tau} whose coefficients are
// Laurent polynomials in x = e^{2 pi i z} over the rationals.

#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ajack/rational.hpp"

namespace ajack {

using Complex = std::complex<double>;

class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite Laurent polynomial sum_j c_j x^j. Zero coefficients are never stored.
class LaurentX {
 public:
  using Terms = std::map<int, Rational>;

  LaurentX() = default;
  explicit LaurentX(const Rational& c);
  static LaurentX monomial(int j, const Rational& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  int min_degree() const;
  int max_degree() const;

  Rational coeff(int j) const;
  /// Adds c to the x^j coefficient, erasing the entry if it cancels.
  void add_term(int j, const Rational& c);

  LaurentX& operator+=(const LaurentX& other);
  LaurentX& operator-=(const LaurentX& other);
  LaurentX& operator*=(const Rational& c);

  /// Multiplies by x^s.
  LaurentX shifted(int s) const;
  /// Substitutes x -> x^s (s may be negative).
  LaurentX substituted(int s) const;

  /// True when c(j) = c(-j) for every j.
  bool is_reflection_symmetric() const;

  Complex eval(Complex x) const;

  friend bool operator==(const LaurentX& a, const LaurentX& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

LaurentX operator+(LaurentX a, const LaurentX& b);
LaurentX operator-(LaurentX a, const LaurentX& b);
LaurentX operator-(const LaurentX& a);
LaurentX operator*(const LaurentX& a, const LaurentX& b);
LaurentX operator*(LaurentX a, const Rational& c);
LaurentX operator*(const Rational& c, LaurentX a);

/// Exact quotient a / b. Throws SeriesError if b is zero or does not divide a.
LaurentX divide_exact(const LaurentX& a, const LaurentX& b);

std::string to_string(const LaurentX& a);

/// p^lead * sum_{n=0}^{trunc} c_n(x) p^{n/grid}, carrying the level K of the suppressed
/// factor e^{2 pi i K u}. Known (exact) through the exponent lead + trunc/grid.
class NomeSeries {
 public:
  NomeSeries(int level, int grid, Rational lead, std::vector<LaurentX> coeffs);

  /// All-zero series known through exponent lead + trunc/grid.
  static NomeSeries zero(int level, int grid, const Rational& lead, int trunc);
  /// The constant c (times p^0), known through p^order.
  static NomeSeries constant(const LaurentX& c, int level, int order);
  static NomeSeries one(int order) { return constant(LaurentX(Rational(1)), 0, order); }

  int level() const { return level_; }
  int grid() const { return grid_; }
  const Rational& lead() const { return lead_; }
  int trunc() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<LaurentX>& coeffs() const { return coeffs_; }
  const LaurentX& coeff(int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  LaurentX& coeff_mut(int n) { return coeffs_.at(static_cast<std::size_t>(n)); }

  Rational exponent(int n) const;
  /// Highest exponent that is known exactly: lead + trunc/grid.
  Rational top() const;
  bool is_zero() const;

  /// Coefficient of x^j p^e. Zero off-grid or below the lead; throws above top().
  Rational coefficient(const Rational& e, int j) const;

  /// Re-expresses the series on a finer grid / lower lead / lower top. new_grid must be a
  /// multiple of grid(), new_lead <= lead() with (lead - new_lead) on the new grid, and
  /// new_top <= top() on the new grid.
  NomeSeries reframed(const Rational& new_lead, int new_grid, const Rational& new_top) const;
  NomeSeries truncated(const Rational& new_top) const;
  NomeSeries with_level(int level) const;

  /// Drops leading zero coefficients (moving the lead up). A zero series is returned unchanged.
  NomeSeries trimmed() const;
  /// Smallest grid on which every nonzero term (and top) still lies.
  NomeSeries compacted() const;

  friend bool operator==(const NomeSeries& a, const NomeSeries& b);

 private:
  int level_;
  int grid_;
  Rational lead_;
  std::vector<LaurentX> coeffs_;
};

/// Collects terms c x^j p^e with e in [lead, lead + order] and builds the series on the coarsest
/// grid holding all of them. Terms above the top are dropped.
class SeriesBuilder {
 public:
  SeriesBuilder(int level, Rational lead, Rational order);
  void add(const Rational& e, int j, const Rational& c);
  NomeSeries build() const;

 private:
  int level_;
  Rational lead_;
  Rational top_;
  std::map<Rational, LaurentX> terms_;
};

// Ring operations. All results are exact through the largest exponent known for both operands.
NomeSeries add(const NomeSeries& a, const NomeSeries& b);
NomeSeries sub(const NomeSeries& a, const NomeSeries& b);
NomeSeries negate(const NomeSeries& a);
NomeSeries scale(const NomeSeries& a, const Rational& c);
NomeSeries mul(const NomeSeries& a, const NomeSeries& b);
/// Multiplies by c x^j.
NomeSeries mul_monomial(const NomeSeries& a, int j, const Rational& c = Rational(1));
/// Multiplies by p^r.
NomeSeries shift_p(const NomeSeries& a, const Rational& r);
/// Multiplicative inverse; the leading coefficient must be a single monomial c x^j.
NomeSeries invert(const NomeSeries& a);
/// Exact quotient a / b where every per-order Laurent division is exact.
NomeSeries divide(const NomeSeries& a, const NomeSeries& b);
/// a^c for rational c. The leading coefficient must be x^j (coefficient 1) unless c is an
/// integer, and j*c, level*c must be integers.
NomeSeries pow_rational(const NomeSeries& a, const Rational& c);
/// p d/dp, acting on the full exponent (lead included).
NomeSeries p_derivative(const NomeSeries& a);
/// Substitutes x -> x^s.
NomeSeries substitute_x(const NomeSeries& a, int s);
/// Substitutes p -> p^r (tau -> r tau) for positive rational r.
NomeSeries substitute_p(const NomeSeries& a, const Rational& r);

inline NomeSeries operator+(const NomeSeries& a, const NomeSeries& b) { return add(a, b); }
inline NomeSeries operator-(const NomeSeries& a, const NomeSeries& b) { return sub(a, b); }
inline NomeSeries operator-(const NomeSeries& a) { return negate(a); }
inline NomeSeries operator*(const NomeSeries& a, const NomeSeries& b) { return mul(a, b); }
inline NomeSeries operator*(const Rational& c, const NomeSeries& a) { return scale(a, c); }
inline NomeSeries operator/(const NomeSeries& a, const NomeSeries& b) { return divide(a, b); }

/// First place where two series differ, comparing both on a common grid through
/// min(top_a, top_b) (or through `through` if given and smaller).
struct SeriesMismatch {
  Rational exponent;
  int j = 0;
  Rational lhs;
  Rational rhs;
  std::string describe() const;
};

std::optional<SeriesMismatch> first_mismatch(const NomeSeries& a, const NomeSeries& b,
                                             std::optional<Rational> through = std::nullopt);
bool equal_through(const NomeSeries& a, const NomeSeries& b,
                   std::optional<Rational> through = std::nullopt);

/// e^{2 pi i K u} p^lead sum c_n(e^{2 pi i z}) p^{n/grid}, principal branch for p^lead.
/// Throws std::domain_error when Im tau <= 0.
Complex eval_numeric(const NomeSeries& a, Complex z, Complex u, Complex tau);

/// |p|^{(trunc+1)/grid} relative to |p|^lead: the size of the first omitted grid step.
double first_omitted_order_magnitude(const NomeSeries& a, Complex tau);

/// Magnitude of the contribution of the last known grid step at (z, tau); a cheap tail proxy.
double last_order_magnitude(const NomeSeries& a, Complex z, Complex tau);

/// A series times the exact scalar i^ipow * 2^two_exp. Used where theta_1 carries a factor i and
/// where level-2 closed forms carry (1/sqrt 2)^{rational}.
struct ScaledSeries {
  int ipow = 0;
  Rational two_exp;
  NomeSeries series;

  explicit ScaledSeries(NomeSeries s, int ipow_ = 0, Rational two_exp_ = Rational(0));

  /// Folds the integer part of two_exp and the real part of the i-power into the coefficients,
  /// leaving ipow in {0,1} and two_exp in [0,1).
  ScaledSeries normalized() const;
  Complex scalar() const;
};

ScaledSeries mul(const ScaledSeries& a, const ScaledSeries& b);
ScaledSeries divide(const ScaledSeries& a, const ScaledSeries& b);
/// Sum of two scaled series; their normalized scalars must coincide.
ScaledSeries add(const ScaledSeries& a, const ScaledSeries& b);
ScaledSeries pow_rational(const ScaledSeries& a, const Rational& c);
bool equal_through(const ScaledSeries& a, const ScaledSeries& b,
                   std::optional<Rational> through = std::nullopt);
Complex eval_numeric(const ScaledSeries& a, Complex z, Complex u, Complex tau);

// Series JSON encoding:
// {"level", "gridDenominator", "lead": "num/den", "order", "coeffs": [{"n", "terms": [{"j","c"}]}]}
std::string to_json(const NomeSeries& a, int indent = -1);
NomeSeries series_from_json(const std::string& text);

}  // namespace ajack
