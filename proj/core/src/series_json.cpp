#include <nlohmann/json.hpp>

#include "ajack/qseries.hpp"

namespace ajack {

using ordered_json = nlohmann::ordered_json;

std::string to_json(const NomeSeries& a, int indent) {
  ordered_json j;
  j["level"] = a.level();
  j["gridDenominator"] = a.grid();
  j["lead"] = to_string(a.lead());
  j["order"] = a.trunc();
  ordered_json coeffs = ordered_json::array();
  for (int n = 0; n <= a.trunc(); ++n) {
    const LaurentX& c = a.coeff(n);
    if (c.is_zero()) continue;
    ordered_json terms = ordered_json::array();
    for (const auto& [jj, v] : c.terms()) terms.push_back(ordered_json{{"j", jj}, {"c", to_string(v)}});
    coeffs.push_back(ordered_json{{"n", n}, {"terms", std::move(terms)}});
  }
  j["coeffs"] = std::move(coeffs);
  return j.dump(indent);
}

NomeSeries series_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    const int level = j.at("level").get<int>();
    const int grid = j.at("gridDenominator").get<int>();
    const Rational lead = parse_rational(j.at("lead").get<std::string>());
    const int order = j.at("order").get<int>();
    if (order < 0) throw SeriesError("series JSON: negative order");
    if (grid < 1) throw SeriesError("series JSON: gridDenominator must be >= 1");
    auto s = NomeSeries::zero(level, grid, lead, order);
    for (const auto& entry : j.at("coeffs")) {
      const int n = entry.at("n").get<int>();
      if (n < 0 || n > order) throw SeriesError("series JSON: coefficient index out of range");
      for (const auto& t : entry.at("terms"))
        s.coeff_mut(n).add_term(t.at("j").get<int>(), parse_rational(t.at("c").get<std::string>()));
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw SeriesError(std::string("series JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw SeriesError(std::string("series JSON: ") + e.what());
  }
}

}  // namespace ajack
