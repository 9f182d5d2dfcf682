#include "totpos/exact.hpp"

#include <cctype>

namespace totpos {

Integer binomial(const Integer& n, std::int64_t k) {
  if (n < 0) {
    throw std::domain_error("binomial: negative top argument " + n.str());
  }
  if (k < 0 || Integer(k) > n) return Integer(0);
  // C(n, k) == C(n, n-k); iterate over the smaller side.
  const Integer complement = n - k;
  std::int64_t steps = k;
  if (complement < k) steps = complement.convert_to<std::int64_t>();
  Integer result(1);
  const Integer base = n - steps;
  for (std::int64_t i = 1; i <= steps; ++i) {
    result *= base + i;
    result /= i;  // exact: result is C(base + i, i) here
  }
  return result;
}

Integer binomial(std::int64_t n, std::int64_t k) {
  return binomial(Integer(n), k);
}

Integer ballot_paths(std::int64_t m, std::int64_t n, std::int64_t t) {
  if (t <= 0) {
    throw std::domain_error("ballot_paths: forbidden diagonal offset must be positive");
  }
  if (m < 0 || n < 0) {
    throw std::domain_error("ballot_paths: endpoint must be in the first quadrant");
  }
  // An endpoint on or above the line y = x + t cannot be reached without
  // touching it; the reflection count only applies strictly below.
  if (n - m >= t) return Integer(0);
  return binomial(m + n, n) - binomial(m + n, n - t);
}

Rational make_rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  return Rational(numerator, denominator);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_decimal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string_view s = trim(text);
  if (!is_decimal(s)) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s));
  const Integer den = parse_integer(s.substr(slash + 1));
  if (den == 0) {
    throw std::domain_error("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(parse_integer(s.substr(0, slash)), den);
}

std::string to_string(const Integer& value) { return value.str(); }

std::string to_string(const Rational& value) {
  if (is_integral(value)) return boost::multiprecision::numerator(value).str();
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

}  // namespace totpos
