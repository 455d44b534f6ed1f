#pragma once

/**
 * @file real_bridge.hpp
 * @brief Real line arrangements in exact rationals, their cell counts, and
 * the predictions those counts satisfy when a real arrangement shares the
 * incidence class of an arrangement of q+1 lines over F_q.
 *
 * Cell counts of a real arrangement from its incidence data:
 *   f_1 = p_1 + p_01,            f_2 = 1 - p_0 + p_1 + p_01,
 *   f_1^b = p_01 - p_1,          f_2^b = 1 - p_0 - p_1 + p_01.
 * Given a field spectrum x with x_i equal to the real x_i for i >= 2:
 *   f_1^b = (q+1)(q-1) - x_1,    f_2^b = x_0,
 *   f_1 = (q+1)^2 - x_1,         f_2 = 2(q+1) + x_0.
 *
 * Intersection points are deduplicated by exact rational equality; there
 * is no tolerance anywhere.
 */

#include <cctype>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "besico/arrangement.hpp"
#include "besico/identities.hpp"
#include "besico/rational.hpp"

namespace besico {

/// a x + b y = c, scaled so the first nonzero of (a, b) is 1.
class RationalLine {
 public:
  RationalLine(Rational a, Rational b, Rational c) {
    if (a == 0 && b == 0) throw OutOfRange("line with a = b = 0");
    const Rational lead = a != 0 ? a : b;
    a_ = a / lead;
    b_ = b / lead;
    c_ = c / lead;
  }

  /// y = slope x + intercept
  static RationalLine from_slope(const Rational& slope, const Rational& intercept) {
    return RationalLine(-slope, 1, intercept);
  }
  /// x = position
  static RationalLine vertical(const Rational& position) { return RationalLine(1, 0, position); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }

  bool parallel_to(const RationalLine& o) const { return a_ * o.b_ == o.a_ * b_; }
  bool contains(const std::pair<Rational, Rational>& pt) const {
    return a_ * pt.first + b_ * pt.second == c_;
  }

  bool operator==(const RationalLine&) const = default;

 private:
  Rational a_, b_, c_;
};

using RationalPoint = std::pair<Rational, Rational>;

inline std::optional<RationalPoint> intersect(const RationalLine& l, const RationalLine& m) {
  const Rational det = l.a() * m.b() - m.a() * l.b();
  if (det == 0) return std::nullopt;
  return RationalPoint{(l.c() * m.b() - m.c() * l.b()) / det,
                       (l.a() * m.c() - m.a() * l.c()) / det};
}

class RealArrangement {
 public:
  RealArrangement() = default;
  explicit RealArrangement(std::vector<RationalLine> lines) : lines_(std::move(lines)) {
    for (std::size_t i = 0; i < lines_.size(); ++i)
      for (std::size_t j = i + 1; j < lines_.size(); ++j)
        if (lines_[i] == lines_[j])
          throw DuplicateLine("lines " + std::to_string(i) + " and " + std::to_string(j));
  }

  std::size_t size() const { return lines_.size(); }
  const std::vector<RationalLine>& lines() const { return lines_; }

 private:
  std::vector<RationalLine> lines_;
};

struct IncidenceQuantities {
  std::int64_t p1 = 0;   // lines
  std::int64_t p0 = 0;   // distinct intersection points
  std::int64_t p01 = 0;  // (line, intersection point on it) pairs
  /// x[i] = points of multiplicity i, for i in 2..p1; x[0], x[1] unused.
  std::vector<std::int64_t> x;

  std::int64_t x_at(std::size_t i) const { return i < x.size() ? x[i] : 0; }
};

namespace detail {

/// Intersection point -> indices of the lines through it.
inline std::map<RationalPoint, std::set<std::size_t>> intersection_map(const RealArrangement& a) {
  std::map<RationalPoint, std::set<std::size_t>> pts;
  const auto& ls = a.lines();
  for (std::size_t i = 0; i < ls.size(); ++i)
    for (std::size_t j = i + 1; j < ls.size(); ++j)
      if (auto pt = intersect(ls[i], ls[j])) {
        auto& through = pts[*pt];
        through.insert(i);
        through.insert(j);
      }
  return pts;
}

}  // namespace detail

inline IncidenceQuantities real_quantities(const RealArrangement& a) {
  if (a.size() < 2) throw OutOfRange("need at least two lines");
  IncidenceQuantities out;
  out.p1 = static_cast<std::int64_t>(a.size());
  out.x.assign(a.size() + 1, 0);
  for (const auto& [pt, through] : detail::intersection_map(a)) {
    const auto m = static_cast<std::int64_t>(through.size());
    ++out.p0;
    out.p01 += m;
    ++out.x[m];
  }
  return out;
}

struct FVector {
  std::int64_t f0 = 0, f1 = 0, f2 = 0;
  std::int64_t f1b = 0, f2b = 0;
  bool operator==(const FVector&) const = default;
};

inline FVector f_vector(const IncidenceQuantities& iq) {
  FVector f;
  f.f0 = iq.p0;
  f.f1 = iq.p1 + iq.p01;
  f.f2 = 1 - iq.p0 + iq.p1 + iq.p01;
  f.f1b = iq.p01 - iq.p1;
  f.f2b = 1 - iq.p0 - iq.p1 + iq.p01;
  if (f.f0 < 0 || f.f1 < 0 || f.f2 < 0 || f.f1b < 0 || f.f2b < 0)
    throw NegativeCellCount("p1=" + std::to_string(iq.p1) + " p0=" + std::to_string(iq.p0) +
                            " p01=" + std::to_string(iq.p01));
  return f;
}

/// Edges counted line by line: k distinct points on a line cut it into k+1 edges.
inline std::int64_t f1_direct(const RealArrangement& a) {
  const auto& ls = a.lines();
  std::int64_t edges = 0;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    std::set<RationalPoint> on_line;
    for (std::size_t j = 0; j < ls.size(); ++j)
      if (j != i)
        if (auto pt = intersect(ls[i], ls[j])) on_line.insert(*pt);
    edges += static_cast<std::int64_t>(on_line.size()) + 1;
  }
  return edges;
}

/// A lies in the class of the field arrangement: q+1 lines and equal x_i
/// for every i in 2..q+1.
inline bool phi_check(const Spectrum& field_spectrum, const RealArrangement& a) {
  const std::uint32_t q = field_spectrum.q();
  if (a.size() != static_cast<std::size_t>(q) + 1) return false;
  const IncidenceQuantities iq = real_quantities(a);
  for (std::size_t i = 2; i <= q + 1; ++i)
    if (iq.x_at(i) != field_spectrum[i]) return false;
  return true;
}

struct FieldPrediction {
  std::int64_t f1b = 0, f2b = 0, f1 = 0, f2 = 0;
  std::int64_t ft0 = 0, ft1 = 0, ft2 = 0;  // field analogues of f_0, f_1, f_2
  std::int64_t euler = 0;                  // (ft0 + 1) - ft1 + ft2
};

/// Cell counts forced by a field spectrum. Throws IdentityViolation if the
/// spectrum is not one of q+1 lines (first two moment identities).
inline FieldPrediction predict_from_field(const Spectrum& s) {
  const MomentChecks mc = verify_moments(s);
  if (!mc.count.pass() || !mc.first.pass())
    throw IdentityViolation("spectrum fails sum x_m = q^2 or sum m x_m = q(q+1)");
  const std::int64_t q = s.q();
  FieldPrediction p;
  p.f1b = (q + 1) * (q - 1) - s[1];
  p.f2b = s[0];
  p.f1 = (q + 1) * (q + 1) - s[1];
  p.f2 = 2 * (q + 1) + s[0];
  for (std::size_t i = 2; i < s.size(); ++i) p.ft0 += s[i];
  p.ft1 = p.f1;
  p.ft2 = p.f2;
  p.euler = (p.ft0 + 1) - p.ft1 + p.ft2;
  return p;
}

struct CrossValidation {
  FieldPrediction predicted;
  IncidenceQuantities quantities;
  FVector real;
  std::int64_t f1_direct = 0;

  bool f1b_match() const { return real.f1b == predicted.f1b; }
  bool f2b_match() const { return real.f2b == predicted.f2b; }
  bool f1_match() const { return real.f1 == predicted.f1; }
  bool f2_match() const { return real.f2 == predicted.f2; }
  bool f0_match() const { return real.f0 == predicted.ft0; }
  bool f1_direct_match() const { return f1_direct == real.f1; }
  bool euler_real() const { return (real.f0 + 1) - real.f1 + real.f2 == 2; }
  bool passed() const {
    return f1b_match() && f2b_match() && f1_match() && f2_match() && f0_match() &&
           f1_direct_match() && euler_real() && predicted.euler == 2;
  }
};

/// Both routes to the cell counts. Throws PhiMismatch if A is not in the
/// class of the field spectrum.
inline CrossValidation cross_validate(const Spectrum& field_spectrum, const RealArrangement& a) {
  if (!phi_check(field_spectrum, a))
    throw PhiMismatch("real arrangement is not in the incidence class of the field arrangement");
  CrossValidation cv;
  cv.predicted = predict_from_field(field_spectrum);
  cv.quantities = real_quantities(a);
  cv.real = f_vector(cv.quantities);
  cv.f1_direct = f1_direct(a);
  return cv;
}

// Text format: one line per row, "a b c" for a x + b y = c. Each number is
// an integer, a fraction "n/d" or a decimal "d.ddd". '#' starts a comment.

inline Rational parse_rational(const std::string& tok) {
  std::size_t i = 0;
  bool negative = false;
  if (i < tok.size() && (tok[i] == '-' || tok[i] == '+')) negative = tok[i++] == '-';
  auto digits = [&](BigInt& out, std::size_t& count) {
    count = 0;
    while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) {
      out = out * 10 + (tok[i++] - '0');
      ++count;
    }
  };
  BigInt num = 0, den = 1;
  std::size_t n_int = 0;
  digits(num, n_int);
  if (i < tok.size() && tok[i] == '.') {
    ++i;
    std::size_t n_frac = 0;
    digits(num, n_frac);
    if (n_int + n_frac == 0) throw ParseError("bad number '" + tok + "'");
    den = ipow(BigInt(10), n_frac);
  } else if (i < tok.size() && tok[i] == '/') {
    ++i;
    den = 0;
    std::size_t n_den = 0;
    digits(den, n_den);
    if (n_int == 0 || n_den == 0 || den == 0) throw ParseError("bad fraction '" + tok + "'");
  } else if (n_int == 0) {
    throw ParseError("bad number '" + tok + "'");
  }
  if (i != tok.size()) throw ParseError("trailing characters in '" + tok + "'");
  Rational r(num, den);
  return negative ? Rational(-r) : r;
}

inline RealArrangement parse_real_arrangement(std::istream& in) {
  std::vector<RationalLine> lines;
  std::string row;
  int lineno = 0;
  while (std::getline(in, row)) {
    ++lineno;
    if (auto hash = row.find('#'); hash != std::string::npos) row.erase(hash);
    std::istringstream ss(row);
    std::vector<std::string> toks;
    for (std::string t; ss >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    if (toks.size() != 3)
      throw ParseError("line " + std::to_string(lineno) + ": expected 'a b c'");
    try {
      lines.emplace_back(parse_rational(toks[0]), parse_rational(toks[1]), parse_rational(toks[2]));
    } catch (const OutOfRange& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return RealArrangement(std::move(lines));
}

inline std::string format_real_arrangement(const RealArrangement& a) {
  std::string out;
  for (const auto& l : a.lines())
    out += to_string(l.a()) + " " + to_string(l.b()) + " " + to_string(l.c()) + "\n";
  return out;
}

namespace fixtures {

/// n lines through the origin: slopes 0..n-2 and the vertical.
inline RealArrangement pencil(std::size_t n) {
  std::vector<RationalLine> ls;
  for (std::size_t k = 0; k + 1 < n; ++k) ls.push_back(RationalLine::from_slope(Rational(k), 0));
  ls.push_back(RationalLine::vertical(0));
  return RealArrangement(std::move(ls));
}

/// n tangents y = k x - k^2 of a parabola (k = 1..n): pairwise crossing, no
/// three concurrent.
inline RealArrangement generic(std::size_t n) {
  std::vector<RationalLine> ls;
  for (std::size_t k = 1; k <= n; ++k) {
    const Rational s(static_cast<long long>(k));
    ls.push_back(RationalLine::from_slope(s, -s * s));
  }
  return RealArrangement(std::move(ls));
}

/// Six real lines with three triple points and six double points, the
/// incidence class of y=0, y=x+1, y=2x+1, y=3x+2, y=4x+2, x=0 over F_5.
inline RealArrangement q5_example() {
  std::istringstream in(
      "18/5 13/5 3771/125\n"
      "98/25 -1/2 33567/1250\n"
      "61/50 41/25 14487/1250\n"
      "27/10 -107/50 55757/2500\n"
      "-14/5 6/5 -2621/125\n"
      "119/50 24/25 13319/625\n");
  return parse_real_arrangement(in);
}

}  // namespace fixtures

}  // namespace besico
