#pragma once

// Lines of F_q^2, minimal Besicovitch arrangements and multiplicity spectra.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "besico/finite_field.hpp"

namespace besico {

/// Finite slope s or the vertical direction.
class Slope {
 public:
  static Slope finite(FieldElement s) { return Slope(s, false); }
  static Slope infinity(std::uint32_t q) { return Slope({0, q}, true); }

  bool is_infinite() const { return infinite_; }
  /// Meaningless for the vertical slope.
  FieldElement value() const { return value_; }

  /// Position in the intercept vector: canonical order, then infinity last.
  std::uint32_t slot() const { return infinite_ ? value_.q : value_.index; }

  bool operator==(const Slope&) const = default;

 private:
  Slope(FieldElement v, bool inf) : value_(v), infinite_(inf) {}
  FieldElement value_;
  bool infinite_;
};

struct Point {
  FieldElement x;
  FieldElement y;
  bool operator==(const Point&) const = default;
};

/// y = s x + b, or x = b when the slope is vertical.
struct Line {
  Slope slope;
  FieldElement intercept;

  bool contains(const Field& field, Point pt) const {
    if (slope.is_infinite()) return pt.x == intercept;
    return pt.y == field.add(field.mul(slope.value(), pt.x), intercept);
  }
};

/// The q points of a line, in canonical order of the free coordinate.
inline std::vector<Point> line_points(const Field& field, const Line& line) {
  std::vector<Point> out;
  out.reserve(field.size());
  for (FieldElement t : field.elements()) {
    if (line.slope.is_infinite())
      out.push_back({line.intercept, t});
    else
      out.push_back({t, field.add(field.mul(line.slope.value(), t), line.intercept)});
  }
  return out;
}

/// Point of intersection of two lines, if any.
inline std::vector<Point> intersect(const Field& field, const Line& a, const Line& b) {
  std::vector<Point> out;
  for (const Point& pt : line_points(field, a))
    if (b.contains(field, pt)) out.push_back(pt);
  return out;
}

/// One line per slope in F_q and the vertical slope: an element of the
/// sample space. Intercepts are stored by slot (finite slopes in canonical
/// order, vertical last).
class MinimalArrangement {
 public:
  static MinimalArrangement from_intercepts(const Field& field,
                                            std::span<const FieldElement> bs) {
    if (bs.size() != static_cast<std::size_t>(field.size()) + 1)
      throw LengthMismatch("expected " + std::to_string(field.size() + 1) +
                           " intercepts, got " + std::to_string(bs.size()));
    std::vector<std::uint32_t> idx;
    idx.reserve(bs.size());
    for (FieldElement b : bs) {
      if (b.q != field.size())
        throw FieldMismatch("intercept from F_" + std::to_string(b.q));
      idx.push_back(b.index);
    }
    return MinimalArrangement(field, std::move(idx));
  }

  /// Intercepts given as canonical element indices.
  static MinimalArrangement from_indices(const Field& field,
                                         std::span<const std::uint32_t> bs) {
    if (bs.size() != static_cast<std::size_t>(field.size()) + 1)
      throw LengthMismatch("expected " + std::to_string(field.size() + 1) +
                           " intercepts, got " + std::to_string(bs.size()));
    for (std::uint32_t b : bs)
      if (b >= field.size())
        throw OutOfRange("intercept index " + std::to_string(b) + " not in F_" +
                         std::to_string(field.size()));
    return MinimalArrangement(field, {bs.begin(), bs.end()});
  }

  const Field& field() const { return field_; }
  std::uint32_t q() const { return field_.size(); }
  std::size_t size() const { return intercepts_.size(); }

  std::span<const std::uint32_t> intercept_indices() const { return intercepts_; }

  FieldElement intercept(const Slope& s) const {
    return {intercepts_.at(s.slot()), q()};
  }

  Slope slope_at(std::size_t slot) const {
    if (slot == q()) return Slope::infinity(q());
    return Slope::finite({static_cast<std::uint32_t>(slot), q()});
  }

  Line line(std::size_t slot) const {
    return {slope_at(slot), {intercepts_.at(slot), q()}};
  }

  std::vector<Line> lines() const {
    std::vector<Line> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.push_back(line(i));
    return out;
  }

  bool operator==(const MinimalArrangement& o) const {
    return q() == o.q() && intercepts_ == o.intercepts_;
  }

 private:
  MinimalArrangement(Field field, std::vector<std::uint32_t> bs)
      : field_(std::move(field)), intercepts_(std::move(bs)) {}

  Field field_;
  std::vector<std::uint32_t> intercepts_;
};

/// Counts (x_0, ..., x_{q+1}) of points by multiplicity.
class Spectrum {
 public:
  Spectrum(std::uint32_t q, std::vector<std::int64_t> counts)
      : q_(q), counts_(std::move(counts)) {
    if (counts_.size() != static_cast<std::size_t>(q) + 2)
      throw LengthMismatch("spectrum needs q+2 = " + std::to_string(q + 2) +
                           " entries, got " + std::to_string(counts_.size()));
  }

  std::uint32_t q() const { return q_; }
  std::span<const std::int64_t> counts() const { return counts_; }
  std::int64_t operator[](std::size_t m) const { return counts_.at(m); }
  std::size_t size() const { return counts_.size(); }

  bool operator==(const Spectrum&) const = default;

 private:
  std::uint32_t q_;
  std::vector<std::int64_t> counts_;
};

inline void check_same_field(const MinimalArrangement& arr, Point pt) {
  if (pt.x.q != arr.q() || pt.y.q != arr.q())
    throw FieldMismatch("point is not in F_" + std::to_string(arr.q()) + "^2");
}

/// Number of lines through pt, one slope test per line.
inline int multiplicity(const MinimalArrangement& arr, Point pt) {
  check_same_field(arr, pt);
  const Field& f = arr.field();
  const auto bs = arr.intercept_indices();
  const std::uint32_t q = arr.q();
  int m = 0;
  // y = s x + b  <=>  b = y - s x
  for (std::uint32_t s = 0; s < q; ++s)
    if (bs[s] == f.add_index(pt.y.index, f.neg_index(f.mul_index(s, pt.x.index)))) ++m;
  if (bs[q] == pt.x.index) ++m;
  return m;
}

/// Per-point multiplicities, indexed x * q + y, by walking each line.
inline std::vector<std::uint32_t> multiplicity_grid(const MinimalArrangement& arr) {
  const Field& f = arr.field();
  const std::uint32_t q = arr.q();
  const auto bs = arr.intercept_indices();
  std::vector<std::uint32_t> grid(static_cast<std::size_t>(q) * q, 0);
  for (std::uint32_t s = 0; s < q; ++s)
    for (std::uint32_t x = 0; x < q; ++x)
      ++grid[static_cast<std::size_t>(x) * q + f.add_index(f.mul_index(s, x), bs[s])];
  for (std::uint32_t y = 0; y < q; ++y) ++grid[static_cast<std::size_t>(bs[q]) * q + y];
  return grid;
}

/// Multiplicity spectrum. Walks the q points of each of the q+1 lines, so
/// the cost is O(q^2) rather than a slope test per point.
inline Spectrum spectrum(const MinimalArrangement& arr) {
  std::vector<std::int64_t> counts(arr.q() + 2, 0);
  for (std::uint32_t m : multiplicity_grid(arr)) ++counts[m];
  return Spectrum(arr.q(), std::move(counts));
}

/// |B~| = q^2 - x_0.
inline std::int64_t besicovitch_set_size(const MinimalArrangement& arr) {
  const Spectrum s = spectrum(arr);
  return static_cast<std::int64_t>(arr.q()) * arr.q() - s[0];
}

/// [x_2, ..., x_{q+1}]
inline std::vector<std::int64_t> incidence_class(const Spectrum& s) {
  return {s.counts().begin() + 2, s.counts().end()};
}

}  // namespace besico
