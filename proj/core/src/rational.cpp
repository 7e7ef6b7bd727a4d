#include "specforge/rational.hpp"

#include <cctype>
#include <limits>

namespace specforge {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

std::string bigint_string(const BigInt& n) { return n.str(); }

std::string rational_string(const Rational& r) {
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigInt parse_bigint(const std::string& s) {
  if (!is_integer_token(s)) {
    throw std::invalid_argument("not an integer: '" + s + "'");
  }
  return BigInt(s);
}

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    return Rational(parse_bigint(s));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den) || den[0] == '-') {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
  const BigInt d = parse_bigint(den);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  return Rational(parse_bigint(num), d);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }
double to_double(const BigInt& n) { return n.convert_to<double>(); }

std::int64_t to_int64(const BigInt& n) {
  if (n > std::numeric_limits<std::int64_t>::max() ||
      n < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("value does not fit in int64: " + n.str());
  }
  return n.convert_to<std::int64_t>();
}

}  // namespace specforge
