#pragma once

/**
 * @file finite_field.hpp
 * @brief Arithmetic in F_q for any prime power q = p^n.
 *
 * Elements use the polynomial basis over F_p modulo a fixed monic
 * irreducible of degree n. Every element has a canonical index in
 * {0, ..., q-1}: the base-p evaluation of its coefficient vector
 * (least-degree coefficient is the least significant digit). Index 0 is
 * the additive identity and index 1 the multiplicative identity.
 *
 * The modulus is the lexicographically smallest monic irreducible of
 * degree n, comparing coefficients from the constant term upwards, so two
 * fields of the same order are always identical.
 */

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "besico/errors.hpp"

namespace besico {

/// Largest order supported for extension fields (n > 1).
inline constexpr std::uint64_t kMaxExtensionOrder = 1u << 16;

struct FieldSpec {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::uint32_t q = 0;
  /// Monic modulus, n+1 coefficients least-degree first. For n == 1 this
  /// is x (unused).
  std::vector<std::uint32_t> modulus;

  bool operator==(const FieldSpec&) const = default;
};

/// A field element: canonical index plus the order of its field. Two fields
/// of equal order are identical, so the order identifies the field.
struct FieldElement {
  std::uint32_t index = 0;
  std::uint32_t q = 0;

  bool operator==(const FieldElement&) const = default;
  auto operator<=>(const FieldElement&) const = default;
};

namespace detail {

inline bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

/// (p, n) with q = p^n, or throws NotPrimePower.
inline std::pair<std::uint32_t, std::uint32_t> factor_prime_power(
    std::uint64_t q) {
  if (q < 2) throw NotPrimePower(std::to_string(q) + " is smaller than 2");
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;
  std::uint64_t rest = q;
  std::uint32_t n = 0;
  while (rest % p == 0) {
    rest /= p;
    ++n;
  }
  if (rest != 1)
    throw NotPrimePower(std::to_string(q) + " has at least two distinct prime factors");
  if (q > 0xffffffffull) throw OutOfRange("field order exceeds 2^32");
  return {static_cast<std::uint32_t>(p), n};
}

using Poly = std::vector<std::uint32_t>;  // coefficients low-degree first

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  // Fermat; p is prime and small enough that 64-bit products do not overflow.
  std::uint64_t result = 1, base = a % p;
  for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

/// Remainder of a modulo a nonzero polynomial m over F_p.
inline Poly poly_mod(Poly a, Poly m, std::uint32_t p) {
  trim(a);
  trim(m);
  const std::uint32_t lead_inv = inv_mod_p(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint64_t factor =
        static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      const std::uint64_t sub = factor * m[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

inline Poly digits(std::uint32_t index, std::uint32_t p, std::uint32_t n) {
  Poly out(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    out[i] = index % p;
    index /= p;
  }
  return out;
}

inline std::uint32_t from_digits(const Poly& d, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

/// Irreducibility by trial division against every monic polynomial of
/// degree 1..n/2.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t n = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; d <= n / 2; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t k = 0; k < count; ++k) {
      Poly g = digits(static_cast<std::uint32_t>(k), p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

inline Poly smallest_irreducible(std::uint32_t p, std::uint32_t n) {
  if (n == 1) return {0, 1};
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < n; ++i) count *= p;
  // k enumerates (c_0, ..., c_{n-1}) with c_0 as the most significant digit,
  // which is lexicographic order comparing the constant term first.
  for (std::uint64_t k = 0; k < count; ++k) {
    Poly f(n + 1);
    std::uint64_t rest = k;
    for (std::uint32_t i = n; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    f[n] = 1;
    if (f[0] != 0 && is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

/// Product of two canonical indices in F_p[x]/(modulus).
inline std::uint32_t poly_mulmod(std::uint32_t a, std::uint32_t b,
                                 const FieldSpec& spec) {
  const Poly da = digits(a, spec.p, spec.n);
  const Poly db = digits(b, spec.p, spec.n);
  Poly prod(2 * spec.n, 0);
  for (std::uint32_t i = 0; i < spec.n; ++i)
    for (std::uint32_t j = 0; j < spec.n; ++j)
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % spec.p);
  Poly r = poly_mod(std::move(prod), spec.modulus, spec.p);
  r.resize(spec.n, 0);
  return from_digits(r, spec.p);
}

struct Tables {
  FieldSpec spec;
  // Extension fields only: exp_[k] = g^k for a generator g, log_[a] for a != 0.
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

inline std::shared_ptr<const Tables> build_tables(FieldSpec spec) {
  auto t = std::make_shared<Tables>();
  t->spec = std::move(spec);
  const FieldSpec& s = t->spec;
  if (s.n == 1) return t;
  const std::uint32_t order = s.q - 1;
  for (std::uint32_t g = 2; g < s.q; ++g) {
    std::vector<std::uint32_t> powers;
    powers.reserve(order);
    std::uint32_t cur = 1;
    do {
      powers.push_back(cur);
      cur = poly_mulmod(cur, g, s);
    } while (cur != 1 && powers.size() <= order);
    if (powers.size() != order) continue;
    t->exp_ = std::move(powers);
    t->log_.assign(s.q, 0);
    for (std::uint32_t k = 0; k < order; ++k) t->log_[t->exp_[k]] = k;
    return t;
  }
  throw std::logic_error("multiplicative group has no generator");
}

}  // namespace detail

/// Factors q and picks the canonical modulus. Throws NotPrimePower.
inline FieldSpec make_field(std::uint64_t q) {
  const auto [p, n] = detail::factor_prime_power(q);
  if (n > 1 && q > kMaxExtensionOrder)
    throw OutOfRange("extension fields are limited to q <= 2^16");
  FieldSpec spec;
  spec.p = p;
  spec.n = n;
  spec.q = static_cast<std::uint32_t>(q);
  spec.modulus = detail::smallest_irreducible(p, n);
  return spec;
}

inline bool is_prime_power(std::uint64_t q) {
  try {
    detail::factor_prime_power(q);
    return true;
  } catch (const NotPrimePower&) {
    return false;
  }
}

/// Arithmetic context for one F_q. Cheap to copy; the lookup tables are
/// shared and immutable.
class Field {
 public:
  explicit Field(FieldSpec spec) : tables_(detail::build_tables(std::move(spec))) {}
  explicit Field(std::uint64_t q) : Field(make_field(q)) {}

  const FieldSpec& spec() const { return tables_->spec; }
  std::uint32_t size() const { return tables_->spec.q; }
  std::uint32_t characteristic() const { return tables_->spec.p; }
  std::uint32_t degree() const { return tables_->spec.n; }

  FieldElement zero() const { return {0, size()}; }
  FieldElement one() const { return {1, size()}; }

  FieldElement element(std::uint64_t index) const {
    if (index >= size())
      throw OutOfRange("index " + std::to_string(index) + " not in F_" +
                       std::to_string(size()));
    return {static_cast<std::uint32_t>(index), size()};
  }

  /// All q elements in canonical-index order.
  std::vector<FieldElement> elements() const {
    std::vector<FieldElement> out;
    out.reserve(size());
    for (std::uint32_t i = 0; i < size(); ++i) out.push_back({i, size()});
    return out;
  }

  std::vector<std::uint32_t> coefficients(FieldElement a) const {
    check(a);
    return detail::digits(a.index, spec().p, spec().n);
  }

  FieldElement add(FieldElement a, FieldElement b) const {
    check(a, b);
    return {add_index(a.index, b.index), size()};
  }
  FieldElement sub(FieldElement a, FieldElement b) const {
    check(a, b);
    return {add_index(a.index, neg_index(b.index)), size()};
  }
  FieldElement neg(FieldElement a) const {
    check(a);
    return {neg_index(a.index), size()};
  }
  FieldElement mul(FieldElement a, FieldElement b) const {
    check(a, b);
    return {mul_index(a.index, b.index), size()};
  }
  FieldElement inv(FieldElement a) const {
    check(a);
    if (a.index == 0) throw DivisionByZero("inverse of 0");
    return {inv_index(a.index), size()};
  }
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement a, std::uint64_t e) const {
    check(a);
    FieldElement result = one(), base = a;
    for (; e > 0; e >>= 1) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
    }
    return result;
  }

  // Index-level arithmetic for inner loops; no field checks.

  std::uint32_t add_index(std::uint32_t a, std::uint32_t b) const {
    const FieldSpec& s = spec();
    if (s.n == 1) {
      const std::uint64_t r = static_cast<std::uint64_t>(a) + b;
      return static_cast<std::uint32_t>(r >= s.q ? r - s.q : r);
    }
    if (s.p == 2) return a ^ b;
    std::uint32_t r = 0, place = 1;
    for (std::uint32_t i = 0; i < s.n; ++i) {
      r += ((a % s.p + b % s.p) % s.p) * place;
      a /= s.p;
      b /= s.p;
      place *= s.p;
    }
    return r;
  }

  std::uint32_t neg_index(std::uint32_t a) const {
    const FieldSpec& s = spec();
    if (s.n == 1) return a == 0 ? 0 : s.q - a;
    if (s.p == 2) return a;
    std::uint32_t r = 0, place = 1;
    for (std::uint32_t i = 0; i < s.n; ++i) {
      r += ((s.p - a % s.p) % s.p) * place;
      a /= s.p;
      place *= s.p;
    }
    return r;
  }

  std::uint32_t mul_index(std::uint32_t a, std::uint32_t b) const {
    const FieldSpec& s = spec();
    if (s.n == 1)
      return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % s.q);
    if (a == 0 || b == 0) return 0;
    const auto& t = *tables_;
    const std::uint32_t k = t.log_[a] + t.log_[b];
    const std::uint32_t order = s.q - 1;
    return t.exp_[k >= order ? k - order : k];
  }

  std::uint32_t inv_index(std::uint32_t a) const {
    const FieldSpec& s = spec();
    if (s.n == 1) return detail::inv_mod_p(a, s.p);
    const auto& t = *tables_;
    const std::uint32_t order = s.q - 1;
    return t.exp_[(order - t.log_[a]) % order];
  }

  bool operator==(const Field& other) const { return size() == other.size(); }

 private:
  void check(FieldElement a) const {
    if (a.q != size())
      throw FieldMismatch("element of F_" + std::to_string(a.q) +
                          " used in F_" + std::to_string(size()));
    if (a.index >= size()) throw OutOfRange("element index out of range");
  }
  void check(FieldElement a, FieldElement b) const {
    check(a);
    check(b);
  }

  std::shared_ptr<const detail::Tables> tables_;
};

/// Human-readable polynomial form, e.g. "x+1" or "2x^2+1".
inline std::string to_string(const Field& field, FieldElement a) {
  const auto c = field.coefficients(a);
  if (field.degree() == 1) return std::to_string(c[0]);
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0 || c[i] != 1) out += std::to_string(c[i]);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace besico
