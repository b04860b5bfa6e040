#include "ajack/rational.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace ajack {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return t;
  };
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.find('-') != std::string::npos)
    throw std::invalid_argument("parse_rational: malformed rational '" + s + "'");
  Integer n(strip_plus(num)), d(strip_plus(den));
  if (d == 0) throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

double to_double(const Rational& r) { return r.get_d(); }

long to_long(const Rational& r) {
  if (!is_integer(r)) throw std::domain_error("to_long: " + to_string(r) + " is not an integer");
  if (!r.get_num().fits_slong_p()) throw std::overflow_error("to_long: value out of range");
  return r.get_num().get_si();
}

long gcd(long a, long b) { return std::gcd(a, b); }

long lcm(long a, long b) {
  if (a == 0 || b == 0) return 0;
  return std::lcm(std::labs(a), std::labs(b));
}

}  // namespace ajack
