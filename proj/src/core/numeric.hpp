#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace rankmetric {

// Arbitrary-precision integers. BigNat is used where a value is
// non-negative by construction; the two share a representation.
using BigInt = boost::multiprecision::cpp_int;
using BigNat = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt ipow(const BigInt& base, std::uint64_t exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp > 0) b *= b;
  }
  return result;
}

// Binomial coefficient C(n, 2) for small n, as used in q-exponents.
constexpr std::uint64_t choose2(std::int64_t n) { return n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2; }

inline std::string to_decimal(const BigInt& x) { return x.str(); }

inline std::string to_decimal(const Rational& x) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// Exact quotient; returns false if the division leaves a remainder.
inline bool divide_exact(const BigInt& num, const BigInt& den, BigInt& out) {
  BigInt rem;
  boost::multiprecision::divide_qr(num, den, out, rem);
  return rem == 0;
}

// If x == base^k for some k >= 0, returns k; otherwise -1.
inline int exact_log(const BigInt& x, const BigInt& base) {
  if (x < 1 || base < 2) return -1;
  BigInt v = x;
  int k = 0;
  while (v > 1) {
    BigInt quo, rem;
    boost::multiprecision::divide_qr(v, base, quo, rem);
    if (rem != 0) return -1;
    v = quo;
    ++k;
  }
  return k;
}

}  // namespace rankmetric
