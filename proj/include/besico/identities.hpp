#pragma once

/**
 * @file identities.hpp
 * @brief Exact checks of the moment identities and inequalities satisfied
 * by the multiplicity spectrum of q+1 lines with distinct slopes.
 *
 * For every minimal arrangement over F_q:
 *   sum x_m = q^2,  sum m x_m = q(q+1),  sum m^2 x_m = 2q(q+1).
 * Everything downstream (incidence formula, closed forms of x_1 and x_2,
 * bounds, the three linear inequalities on x_0, x_1, x_2) follows from
 * these. All arithmetic is on exact integers; bounds with a divisor are
 * compared by cross-multiplication.
 */

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "besico/arrangement.hpp"
#include "besico/rational.hpp"

namespace besico {

enum class Relation { Equal, LessEq, GreaterEq };

inline const char* to_string(Relation r) {
  switch (r) {
    case Relation::Equal: return "==";
    case Relation::LessEq: return "<=";
    case Relation::GreaterEq: return ">=";
  }
  return "?";
}

/// One (in)equality with both sides kept.
struct Check {
  std::string name;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  Relation relation = Relation::Equal;

  bool pass() const {
    switch (relation) {
      case Relation::Equal: return lhs == rhs;
      case Relation::LessEq: return lhs <= rhs;
      case Relation::GreaterEq: return lhs >= rhs;
    }
    return false;
  }
  /// Attained with equality.
  bool sharp() const { return lhs == rhs; }
};

inline Check make_check(std::string name, std::int64_t lhs, std::int64_t rhs,
                        Relation rel) {
  return {std::move(name), lhs, rhs, rel};
}

inline std::int64_t sq(std::int64_t v) { return v * v; }

struct MomentChecks {
  Check count;   // sum x_m = q^2
  Check first;   // sum m x_m = q(q+1)
  Check second;  // sum m^2 x_m = 2q(q+1)

  bool all_pass() const { return count.pass() && first.pass() && second.pass(); }
};

inline MomentChecks verify_moments(const Spectrum& s) {
  const std::int64_t q = s.q();
  std::int64_t s0 = 0, s1 = 0, s2 = 0;
  for (std::size_t m = 0; m < s.size(); ++m) {
    const auto mm = static_cast<std::int64_t>(m);
    s0 += s[m];
    s1 += mm * s[m];
    s2 += mm * mm * s[m];
  }
  return {make_check("sum x_m = q^2", s0, q * q, Relation::Equal),
          make_check("sum m x_m = q(q+1)", s1, q * (q + 1), Relation::Equal),
          make_check("sum m^2 x_m = 2q(q+1)", s2, 2 * q * (q + 1), Relation::Equal)};
}

/// q(q+1)/2 + sum_{m>=1} (m-1)(m-2)/2 x_m, which is |B~| for a genuine spectrum.
inline std::int64_t incidence_formula_size(const Spectrum& s) {
  const std::int64_t q = s.q();
  std::int64_t total = q * (q + 1) / 2;
  for (std::size_t m = 1; m < s.size(); ++m) {
    const auto mm = static_cast<std::int64_t>(m);
    total += (mm - 1) * (mm - 2) / 2 * s[m];
  }
  return total;
}

struct DerivedCounts {
  std::int64_t x1 = 0;
  std::int64_t x2 = 0;
};

namespace detail {

inline DerivedCounts derived_unchecked(std::span<const std::int64_t> tail,
                                       std::int64_t q) {
  DerivedCounts d;
  std::int64_t x2_alt = q * (q + 1) / 2;  // C(q+1, 2)
  d.x2 = q * (q + 1) / 2;
  for (std::size_t k = 0; k < tail.size(); ++k) {
    const auto m = static_cast<std::int64_t>(k) + 3;
    d.x1 += (m * m - 2 * m) * tail[k];
    d.x2 += (-m * m + m) / 2 * tail[k];
    x2_alt -= m * (m - 1) / 2 * tail[k];
  }
  if (d.x2 != x2_alt) throw std::logic_error("closed forms of x_2 disagree");
  return d;
}

}  // namespace detail

/// x_1 and x_2 from the tail (x_3, ..., x_{q+1}). Throws NegativeResult when
/// the tail is infeasible (x_2 would be negative).
inline DerivedCounts derived_x1_x2(std::span<const std::int64_t> tail, std::uint32_t q) {
  if (tail.size() > q - 1)
    throw LengthMismatch("tail holds x_3..x_{q+1}: at most q-1 entries");
  for (std::int64_t v : tail)
    if (v < 0) throw OutOfRange("negative tail entry");
  const DerivedCounts d = detail::derived_unchecked(tail, q);
  if (d.x2 < 0) throw NegativeResult("x_2 = " + std::to_string(d.x2));
  return d;
}

inline std::span<const std::int64_t> tail_of(const Spectrum& s) {
  return s.counts().subspan(3);
}

/// Exact maximum of x_0 over all minimal arrangements: q(q-1)/2 for even q,
/// (q-1)^2/2 for odd q.
inline std::int64_t parity_max_x0(std::uint32_t q) {
  const std::int64_t qq = q;
  return q % 2 == 0 ? qq * (qq - 1) / 2 : (qq - 1) * (qq - 1) / 2;
}

struct BoundChecks {
  Check x0;               // x_0 <= q(q-1)/2
  Check x1;               // x_1 <= q^2 - 1
  std::vector<Check> xm;  // m^2 x_m <= 2q(q+1), m = 2..q+1
  std::int64_t x0_exact_max = 0;
  bool x0_attains_max = false;

  bool all_pass() const {
    if (!x0.pass() || !x1.pass()) return false;
    for (const Check& c : xm)
      if (!c.pass()) return false;
    return true;
  }
};

inline BoundChecks check_bounds(const Spectrum& s) {
  const std::int64_t q = s.q();
  BoundChecks b;
  b.x0 = make_check("x_0 <= q(q-1)/2", s[0], q * (q - 1) / 2, Relation::LessEq);
  b.x1 = make_check("x_1 <= q^2-1", s[1], q * q - 1, Relation::LessEq);
  for (std::size_t m = 2; m < s.size(); ++m) {
    const auto mm = static_cast<std::int64_t>(m);
    b.xm.push_back(make_check("m^2 x_" + std::to_string(m) + " <= 2q(q+1)",
                              mm * mm * s[m], 2 * q * (q + 1), Relation::LessEq));
  }
  b.x0_exact_max = parity_max_x0(s.q());
  b.x0_attains_max = s[0] == b.x0_exact_max;
  return b;
}

struct InequalityChecks {
  Check total;   // x_0 + x_1 + x_2 <= q^2
  Check lower;   // 3x_0 - x_2 <= q^2 - 2q
  Check upper;   // 3x_0 + 2x_1 + x_2 >= 2q^2 - q

  bool all_pass() const { return total.pass() && lower.pass() && upper.pass(); }
  bool all_sharp() const { return total.sharp() && lower.sharp() && upper.sharp(); }
};

inline InequalityChecks check_ze(const Spectrum& s) {
  const std::int64_t q = s.q();
  const std::int64_t x0 = s[0], x1 = s[1], x2 = s[2];
  return {make_check("x_0+x_1+x_2 <= q^2", x0 + x1 + x2, q * q, Relation::LessEq),
          make_check("3x_0-x_2 <= q^2-2q", 3 * x0 - x2, q * q - 2 * q, Relation::LessEq),
          make_check("3x_0+2x_1+x_2 >= 2q^2-q", 3 * x0 + 2 * x1 + x2, 2 * q * q - q,
                     Relation::GreaterEq)};
}

struct NormalizedTriple {
  Rational x0, x1, x2;
  bool operator==(const NormalizedTriple&) const = default;
};

/// (x_0, x_1, x_2) / q^2
inline NormalizedTriple normalized_triple(const Spectrum& s) {
  const BigInt q2 = BigInt(s.q()) * s.q();
  return {Rational(BigInt(s[0]), q2), Rational(BigInt(s[1]), q2),
          Rational(BigInt(s[2]), q2)};
}

/// sum m^3 x_m; not constant over arrangements.
inline std::int64_t third_moment(const Spectrum& s) {
  std::int64_t total = 0;
  for (std::size_t m = 0; m < s.size(); ++m) {
    const auto mm = static_cast<std::int64_t>(m);
    total += mm * mm * mm * s[m];
  }
  return total;
}

struct IdentityReport {
  std::uint32_t q = 0;
  MomentChecks moments;
  Check incidence_formula;  // formula value vs q^2 - x_0
  Check derived_x1;         // closed form vs actual x_1
  Check derived_x2;         // closed form vs actual x_2
  BoundChecks bounds;
  InequalityChecks inequalities;
  std::int64_t third_moment = 0;
  NormalizedTriple triple;

  bool equalities_pass() const {
    return moments.all_pass() && incidence_formula.pass() && derived_x1.pass() &&
           derived_x2.pass();
  }
  bool all_pass() const {
    return equalities_pass() && bounds.all_pass() && inequalities.all_pass();
  }
};

/// Every check in one report. Never throws on infeasible spectra; the
/// failing checks say what is wrong.
inline IdentityReport verify(const Spectrum& s) {
  const std::int64_t q = s.q();
  IdentityReport r;
  r.q = s.q();
  r.moments = verify_moments(s);
  r.incidence_formula = make_check("incidence formula = q^2 - x_0",
                                   incidence_formula_size(s), q * q - s[0],
                                   Relation::Equal);
  const DerivedCounts d = detail::derived_unchecked(tail_of(s), q);
  r.derived_x1 = make_check("x_1 = sum (m^2-2m) x_m", d.x1, s[1], Relation::Equal);
  r.derived_x2 = make_check("x_2 = q(q+1)/2 - sum (m^2-m)/2 x_m", d.x2, s[2],
                            Relation::Equal);
  r.bounds = check_bounds(s);
  r.inequalities = check_ze(s);
  r.third_moment = third_moment(s);
  r.triple = normalized_triple(s);
  return r;
}

}  // namespace besico
