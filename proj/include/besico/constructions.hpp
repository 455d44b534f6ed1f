#pragma once

// Named arrangements with closed-form spectra.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "besico/arrangement.hpp"
#include "besico/identities.hpp"

namespace besico {

enum class ConstructionKind { Concurrent, Parabola };

inline const char* to_string(ConstructionKind k) {
  return k == ConstructionKind::Concurrent ? "concurrent" : "parabola";
}

struct NamedConstruction {
  ConstructionKind kind;
  MinimalArrangement arrangement;
  Spectrum predicted;
};

/// All q+1 lines through `center` (the origin by default): x_1 = q^2 - 1,
/// x_{q+1} = 1.
inline NamedConstruction concurrent(const Field& field, std::optional<Point> center = {}) {
  const std::uint32_t q = field.size();
  const Point c = center.value_or(Point{field.zero(), field.zero()});
  if (c.x.q != q || c.y.q != q) throw FieldMismatch("center is not in F_" + std::to_string(q) + "^2");
  std::vector<FieldElement> bs;
  bs.reserve(q + 1);
  // y = s x + b through (cx, cy): b = cy - s cx
  for (FieldElement s : field.elements()) bs.push_back(field.sub(c.y, field.mul(s, c.x)));
  bs.push_back(c.x);
  std::vector<std::int64_t> predicted(q + 2, 0);
  predicted[1] = static_cast<std::int64_t>(q) * q - 1;
  predicted[q + 1] = 1;
  return {ConstructionKind::Concurrent, MinimalArrangement::from_intercepts(field, bs),
          Spectrum(q, std::move(predicted))};
}

/// Lines y = s x - s^2 for every finite s, plus x = 0.
inline NamedConstruction parabola(const Field& field) {
  const std::uint32_t q = field.size();
  std::vector<FieldElement> bs;
  bs.reserve(q + 1);
  for (FieldElement s : field.elements()) bs.push_back(field.neg(field.mul(s, s)));
  bs.push_back(field.zero());
  const std::int64_t qq = q;
  std::vector<std::int64_t> predicted(q + 2, 0);
  if (field.characteristic() == 2) {
    predicted[0] = qq * (qq - 1) / 2;
    predicted[2] = qq * (qq + 1) / 2;
  } else {
    predicted[0] = (qq - 1) * (qq - 1) / 2;
    predicted[1] = (3 * qq - 3) / 2;
    predicted[2] = (qq * qq - 2 * qq + 3) / 2;
    predicted[3] = (qq - 1) / 2;
  }
  return {ConstructionKind::Parabola, MinimalArrangement::from_intercepts(field, bs),
          Spectrum(q, std::move(predicted))};
}

inline NamedConstruction construct(ConstructionKind kind, const Field& field) {
  return kind == ConstructionKind::Concurrent ? concurrent(field) : parabola(field);
}

/// Maximum of x_0 over all minimal arrangements of F_q.
inline std::int64_t extremal_x0(std::uint64_t q) {
  detail::factor_prime_power(q);
  return parity_max_x0(static_cast<std::uint32_t>(q));
}

}  // namespace besico
