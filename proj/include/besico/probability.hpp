#pragma once

/**
 * @file probability.hpp
 * @brief Exact laws of point multiplicities under the uniform measure on
 * minimal arrangements (each of the q+1 intercepts uniform in F_q).
 *
 * Single point: M_P ~ Binomial(q+1, 1/q).
 *
 * Two distinct points P, Q:
 *
 *   P{M_P = i, M_Q = j}
 *     = C(q; i-1, j-1, q-i-j+2) (q-2)^(q-i-j+2) / q^(q+1)      [line PQ drawn]
 *     + C(q; i, j, q-i-j) (q-1) (q-2)^(q-i-j) / q^(q+1)        [line PQ not drawn]
 *
 * with multinomials vanishing on negative parts and 0^0 = 1, which keeps
 * the q = 2 case exact.
 */

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "besico/errors.hpp"
#include "besico/rational.hpp"

namespace besico {

/// Rational probability in lowest terms, 0 <= p <= 1.
class ExactProb {
 public:
  ExactProb() = default;
  explicit ExactProb(Rational v) : value_(std::move(v)) {
    if (value_ < 0 || value_ > 1)
      throw OutOfRange("probability " + besico::to_string(value_) + " outside [0, 1]");
  }

  const Rational& value() const { return value_; }
  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }
  double to_double() const { return besico::to_double(value_); }
  std::string str() const { return besico::to_string(value_); }

  bool operator==(const ExactProb& o) const { return value_ == o.value_; }
  bool operator==(const Rational& o) const { return value_ == o; }

 private:
  Rational value_{0};
};

inline BigInt factorial(std::int64_t n) {
  BigInt r = 1;
  for (std::int64_t k = 2; k <= n; ++k) r *= k;
  return r;
}

inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n || n < 0) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

/// a! / (b! c! d!); zero if any part is negative or the parts do not sum to a.
inline BigInt multinomial3(std::int64_t a, std::int64_t b, std::int64_t c,
                           std::int64_t d) {
  if (a < 0) throw OutOfRange("multinomial with negative total");
  if (b < 0 || c < 0 || d < 0 || b + c + d != a) return 0;
  return factorial(a) / (factorial(b) * factorial(c) * factorial(d));
}

namespace detail {

inline void check_multiplicity(std::uint32_t q, std::int64_t m) {
  if (m < 0 || m > static_cast<std::int64_t>(q) + 1)
    throw OutOfRange("multiplicity " + std::to_string(m) + " not in [0, " +
                     std::to_string(q + 1) + "]");
}

/// base^e with 0^0 = 1; negative exponents only occur under a vanishing
/// multinomial and are treated as 0.
inline BigInt pow_or_zero(std::int64_t base, std::int64_t e) {
  if (e < 0) return 0;
  return ipow(BigInt(base), static_cast<std::uint64_t>(e));
}

}  // namespace detail

/// P{M_P = m} = C(q+1, m) (1/q)^m (1 - 1/q)^(q+1-m).
inline ExactProb single_point_law(std::uint32_t q, std::int64_t m) {
  detail::check_multiplicity(q, m);
  const std::int64_t n = static_cast<std::int64_t>(q) + 1;
  const BigInt num = binomial(n, m) * ipow(BigInt(q - 1), static_cast<std::uint64_t>(n - m));
  return ExactProb(Rational(num, ipow(BigInt(q), static_cast<std::uint64_t>(n))));
}

/// P{M_P = i, M_Q = j} for two distinct points.
inline ExactProb joint_point_law(std::uint32_t q, std::int64_t i, std::int64_t j) {
  detail::check_multiplicity(q, i);
  detail::check_multiplicity(q, j);
  const std::int64_t qq = q;
  const BigInt through =
      multinomial3(qq, i - 1, j - 1, qq - i - j + 2) * detail::pow_or_zero(qq - 2, qq - i - j + 2);
  const BigInt missing = multinomial3(qq, i, j, qq - i - j) * BigInt(qq - 1) *
                         detail::pow_or_zero(qq - 2, qq - i - j);
  return ExactProb(Rational(through + missing, ipow(BigInt(q), q + 1)));
}

/// E(X_m) = q^2 P{M_P = m}.
inline Rational expected_xm(std::uint32_t q, std::int64_t m) {
  return single_point_law(q, m).value() * (BigInt(q) * q);
}

/// Spectrum functionals (1/q^2) sum w(m) X_m with w(m) = m^power:
/// S (power 0), mean multiplicity (power 1), second moment V (power 2).
enum class Functional { Count = 0, Mean = 1, SecondMoment = 2 };

inline const char* to_string(Functional f) {
  switch (f) {
    case Functional::Count: return "S";
    case Functional::Mean: return "M";
    case Functional::SecondMoment: return "V";
  }
  return "?";
}

namespace detail {
inline BigInt weight(Functional f, std::int64_t m) {
  return ipow(BigInt(m), static_cast<std::uint64_t>(f));
}
}  // namespace detail

/// E of the functional, from the single-point law.
inline Rational expectation(std::uint32_t q, Functional f) {
  Rational e = 0;
  for (std::int64_t m = 0; m <= static_cast<std::int64_t>(q) + 1; ++m)
    e += single_point_law(q, m).value() * detail::weight(f, m);
  return e;
}

/// Closed-form expectations 1, 1 + 1/q, 2 + 2/q.
inline Rational expected_constant(std::uint32_t q, Functional f) {
  switch (f) {
    case Functional::Count: return Rational(1);
    case Functional::Mean: return Rational(BigInt(q) + 1, BigInt(q));
    case Functional::SecondMoment: return Rational(2 * (BigInt(q) + 1), BigInt(q));
  }
  return 0;
}

/// Variance assembled from the two laws:
///   (q^2-1)/q^2 sum_{i,j} w(i) w(j) P{M_P=i, M_Q=j}
///   + 1/q^2 sum_i w(i)^2 P{M_P=i} - E^2.
/// The pairs P != Q contribute the first sum, the diagonal P = Q the second.
inline Rational variance_from_laws(std::uint32_t q, Functional f) {
  const std::int64_t top = static_cast<std::int64_t>(q) + 1;
  const BigInt q2 = BigInt(q) * q;
  Rational joint_sum = 0, single_sum = 0;
  for (std::int64_t i = 0; i <= top; ++i) {
    const BigInt wi = detail::weight(f, i);
    for (std::int64_t j = 0; j <= top; ++j)
      joint_sum += joint_point_law(q, i, j).value() * (wi * detail::weight(f, j));
    single_sum += single_point_law(q, i).value() * (wi * wi);
  }
  const Rational e = expectation(q, f);
  return Rational(q2 - 1, q2) * joint_sum + Rational(BigInt(1), q2) * single_sum - e * e;
}

/// q^2 / (m! e), the large-q approximation of E(X_m).
inline double asymptotic_xm(std::uint32_t q, std::int64_t m) {
  return static_cast<double>(q) * q / (std::tgamma(static_cast<double>(m) + 1) * std::numbers::e);
}

struct LawRow {
  std::int64_t m = 0;
  ExactProb probability;
  Rational expected;    // E(X_m)
  double asymptotic = 0;  // q^2/(m! e)
};

inline std::vector<LawRow> law_table(std::uint32_t q) {
  std::vector<LawRow> rows;
  for (std::int64_t m = 0; m <= static_cast<std::int64_t>(q) + 1; ++m)
    rows.push_back({m, single_point_law(q, m), expected_xm(q, m), asymptotic_xm(q, m)});
  return rows;
}

}  // namespace besico
