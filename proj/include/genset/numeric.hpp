#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>

namespace genset {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
// 100 decimal digits, roughly 332 bits of mantissa.
using HighFloat = boost::multiprecision::cpp_bin_float_100;

inline constexpr int kHighFloatBits = std::numeric_limits<HighFloat>::digits;

inline BigInt binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    result *= n - r + i;
    result /= i;
  }
  return result;
}

inline BigInt binomial(const BigInt& n, std::uint64_t r) {
  if (n < 0 || BigInt(r) > n) return 0;
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    result *= n - r + i;
    result /= i;
  }
  return result;
}

inline BigInt pow2(std::uint64_t e) {
  BigInt v = 1;
  v <<= static_cast<unsigned>(e);
  return v;
}

inline BigInt from_u128(unsigned __int128 v) {
  BigInt hi = static_cast<std::uint64_t>(v >> 64);
  return (hi << 64) + static_cast<std::uint64_t>(v);
}

inline BigInt factorial(std::uint64_t n) {
  BigInt v = 1;
  for (std::uint64_t i = 2; i <= n; ++i) v *= i;
  return v;
}

inline BigInt ipow(BigInt base, std::uint64_t e) {
  BigInt result = 1;
  while (e) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) { return Rational(num, den); }

/// Exact rational power of two; negative exponents give 1/2^|e|.
inline Rational pow2_rational(const BigInt& e) {
  if (e >= 0) return Rational(pow2(static_cast<std::uint64_t>(e)));
  return Rational(BigInt(1), pow2(static_cast<std::uint64_t>(-e)));
}

/// Always "p/q", with q = 1 for integers.
inline std::string to_fraction_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

/// Parses "p/q", "p", or a finite decimal such as "0.25".
Rational parse_rational(const std::string& text);

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline HighFloat to_high(const Rational& q) {
  return HighFloat(boost::multiprecision::numerator(q)) / HighFloat(boost::multiprecision::denominator(q));
}

/// Decimal rendering with a fixed number of significant digits.
std::string to_decimal_string(const HighFloat& x, int significant = 6);
std::string to_decimal_string(const Rational& q, int significant = 6);

}  // namespace genset
