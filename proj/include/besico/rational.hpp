#pragma once

// Arbitrary-precision integers and rationals used by every exact computation.

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace besico {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& num, const BigInt& den = 1) {
  return Rational(num, den);
}

/// "n/d", or "n" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline BigInt ipow(const BigInt& base, std::uint64_t e) {
  BigInt result = 1, b = base;
  for (; e > 0; e >>= 1) {
    if (e & 1) result *= b;
    b *= b;
  }
  return result;
}

}  // namespace besico
