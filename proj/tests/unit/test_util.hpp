#pragma once

#include <doctest.h>

#include <initializer_list>
#include <random>
#include <tuple>

#include "ajack/qseries.hpp"

namespace testutil {

using ajack::Complex;
using ajack::LaurentX;
using ajack::NomeSeries;
using ajack::Rational;

inline Rational q(long n, long d = 1) { return ajack::make_rational(n, d); }

/// Series on integer p-powers from (n, j, num, den) terms, known through p^order.
inline NomeSeries series(int level, int order, std::initializer_list<std::tuple<int, int, long, long>> terms,
                         const Rational& lead = Rational(0)) {
  auto s = NomeSeries::zero(level, 1, lead, order);
  for (const auto& [n, j, num, den] : terms) s.coeff_mut(n).add_term(j, q(num, den));
  return s;
}

/// Random series with small rational coefficients; `unit_lead` makes the p^0 coefficient 1.
inline NomeSeries random_series(std::mt19937& rng, int level, int order, bool unit_lead = false) {
  std::uniform_int_distribution<int> coef(-3, 3), deg(-3, 3);
  auto s = NomeSeries::zero(level, 1, Rational(0), order);
  for (int n = 0; n <= order; ++n) {
    if (n == 0 && unit_lead) {
      s.coeff_mut(0).add_term(0, Rational(1));
      continue;
    }
    for (int t = 0; t < 3; ++t) s.coeff_mut(n).add_term(deg(rng), q(coef(rng), 1 + (t % 2)));
  }
  return s;
}

/// Checks exact equality through the common known order and reports the first difference.
#define CHECK_SERIES_EQ(a, b)                                                        \
  do {                                                                               \
    const auto mismatch_ = ajack::first_mismatch((a), (b));                          \
    CHECK_MESSAGE(!mismatch_.has_value(), (mismatch_ ? mismatch_->describe() : "")); \
  } while (0)

}  // namespace testutil
