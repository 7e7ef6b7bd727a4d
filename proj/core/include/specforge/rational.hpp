#pragma once

// Exact arithmetic used throughout the core. All measure data, grids and
// certificates are exact rationals; floating point enters only through the
// fourier layer, always accompanied by an explicit error bound.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace specforge {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical decimal-free rendering: always "num/den" with den > 0, or a bare
// integer when den == 1. This is the wire format used by json_io.
std::string rational_string(const Rational& r);
std::string bigint_string(const BigInt& n);

// Strict parsers: optional leading '-', digits, optional "/digits" (rational
// only). Anything else throws std::invalid_argument. Zero denominators throw.
Rational parse_rational(const std::string& s);
BigInt parse_bigint(const std::string& s);

double to_double(const Rational& r);
double to_double(const BigInt& n);

// Throws std::overflow_error when the value does not fit.
std::int64_t to_int64(const BigInt& n);

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}
inline BigInt lcm(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::lcm(a, b);
}

inline BigInt numerator(const Rational& r) {
  return boost::multiprecision::numerator(r);
}
inline BigInt denominator(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

}  // namespace specforge
