#pragma once

/**
 * @file sampling.hpp
 * @brief Uniform sampling, exhaustive enumeration and Monte Carlo statistics
 * over the space of minimal arrangements.
 *
 * Sample k of a run is a pure function of (seed, k): each intercept comes
 * from a counter-based hash of (seed, k, slot, attempt), drawn by rejection
 * from the next power of two above q. Results therefore do not depend on
 * the number of worker threads or on execution order.
 */

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iterator>
#include <thread>
#include <vector>

#include "besico/arrangement.hpp"
#include "besico/identities.hpp"
#include "besico/probability.hpp"
#include "besico/rational.hpp"

namespace besico {

inline constexpr std::uint64_t kDefaultGuard = 10'000'000;

namespace detail {

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline constexpr std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t index,
                                            std::uint64_t slot, std::uint64_t attempt) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ index);
  h = splitmix64(h ^ (slot << 32 | (attempt & 0xffffffffull)));
  return h;
}

/// Runs fn(i) for i in [0, n) on `workers` threads (0 = hardware).
template <class Fn>
void parallel_for(std::uint64_t n, unsigned workers, Fn&& fn) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(n, 1)));
  if (workers <= 1) {
    for (std::uint64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  const std::uint64_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t lo = w * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::uint64_t i = lo; i < hi; ++i) fn(i);
    });
  }
}

}  // namespace detail

/// Uniform element of F_q as a canonical index.
inline std::uint32_t uniform_index(std::uint32_t q, std::uint64_t seed,
                                   std::uint64_t index, std::uint64_t slot) {
  const std::uint64_t mask = std::bit_ceil(static_cast<std::uint64_t>(q)) - 1;
  for (std::uint64_t attempt = 0;; ++attempt) {
    const std::uint64_t v = detail::counter_hash(seed, index, slot, attempt) & mask;
    if (v < q) return static_cast<std::uint32_t>(v);
  }
}

/// Arrangement number `index` of the stream defined by `seed`.
inline MinimalArrangement sample(const Field& field, std::uint64_t seed, std::uint64_t index) {
  const std::uint32_t q = field.size();
  std::vector<std::uint32_t> bs(q + 1);
  for (std::uint32_t slot = 0; slot <= q; ++slot) bs[slot] = uniform_index(q, seed, index, slot);
  return MinimalArrangement::from_indices(field, bs);
}

/// |Omega| = q^(q+1).
inline BigInt omega_size(std::uint32_t q) { return ipow(BigInt(q), q + 1); }

/// All q^(q+1) arrangements, lexicographic in the intercept vector (slot 0
/// most significant).
class Enumeration {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = MinimalArrangement;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = MinimalArrangement;

    iterator() = default;
    iterator(const Field* field, bool done)
        : field_(field), bs_(field->size() + 1, 0), done_(done) {}

    MinimalArrangement operator*() const { return MinimalArrangement::from_indices(*field_, bs_); }
    std::span<const std::uint32_t> indices() const { return bs_; }

    iterator& operator++() {
      const std::uint32_t q = field_->size();
      for (std::size_t k = bs_.size(); k-- > 0;) {
        if (++bs_[k] < q) return *this;
        bs_[k] = 0;
      }
      done_ = true;
      return *this;
    }
    void operator++(int) { ++*this; }

    bool operator==(const iterator& o) const { return done_ == o.done_ && (done_ || bs_ == o.bs_); }

   private:
    const Field* field_ = nullptr;
    std::vector<std::uint32_t> bs_;
    bool done_ = true;
  };

  explicit Enumeration(Field field) : field_(std::move(field)) {}

  iterator begin() const { return iterator(&field_, false); }
  iterator end() const { return iterator(&field_, true); }
  std::uint64_t size() const { return omega_size(field_.size()).convert_to<std::uint64_t>(); }

 private:
  Field field_;
};

/// Throws TooLarge when q^(q+1) exceeds the guard.
inline Enumeration enumerate(const Field& field, std::uint64_t guard = kDefaultGuard) {
  const BigInt count = omega_size(field.size());
  if (count > guard)
    throw TooLarge("enumerating F_" + std::to_string(field.size()) + " needs " +
                   count.str() + " arrangements, guard is " + std::to_string(guard));
  return Enumeration(field);
}

/// Per-multiplicity statistics of X_m.
struct MomentStats {
  std::uint32_t m = 0;
  Rational mean;            // denominator divides N
  Rational variance;        // unbiased sample variance (0 when N = 1)
  Rational expected;        // exact E(X_m)
  double asymptotic = 0;    // q^2/(m! e)
  std::uint64_t concentration_hits = 0;  // |X_m - q^2/(m! e)| < q ln q
  double concentration = 0;

  double relative_error() const {
    if (expected == 0) return mean == 0 ? 0.0 : INFINITY;
    return std::abs(to_double((mean - expected) / expected));
  }
};

struct SampleStats {
  std::uint32_t q = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint32_t m_max = 0;
  bool enumerated = false;
  std::vector<MomentStats> per_m;
  std::uint64_t identity_failures = 0;    // equality checks
  std::uint64_t inequality_failures = 0;  // bounds and the three linear inequalities
  /// Raw (x_0, x_1, x_2) per sample, kept on request.
  std::vector<std::array<std::int64_t, 3>> heads;
};

struct MonteCarloOptions {
  std::uint64_t samples = 2000;
  std::uint64_t seed = 0;
  std::uint32_t m_max = 6;
  unsigned workers = 0;
  bool keep_heads = false;
};

namespace detail {

struct SampleRecord {
  std::vector<std::int64_t> counts;  // x_0..x_{m_max}
  bool equalities = true;
  bool inequalities = true;
};

inline SampleRecord record_of(const MinimalArrangement& arr, std::uint32_t m_max) {
  const Spectrum s = spectrum(arr);
  const IdentityReport rep = verify(s);
  SampleRecord r;
  r.counts.assign(s.counts().begin(), s.counts().begin() + m_max + 1);
  r.equalities = rep.equalities_pass();
  r.inequalities = rep.bounds.all_pass() && rep.inequalities.all_pass();
  return r;
}

/// Streaming reduction of per-sample records. Every statistic is an exact
/// integer sum, so the result does not depend on the order of add() calls.
class StatsAccumulator {
 public:
  StatsAccumulator(std::uint32_t q, std::uint32_t m_max, bool keep_heads)
      : q_(q), m_max_(m_max), keep_heads_(keep_heads),
        radius_(q * std::log(static_cast<double>(q))),
        sum_(m_max + 1, 0), sum_sq_(m_max + 1, 0), hits_(m_max + 1, 0) {
    for (std::uint32_t m = 0; m <= m_max; ++m) asymptotic_.push_back(asymptotic_xm(q, m));
  }

  void add(const SampleRecord& r) {
    ++n_;
    for (std::uint32_t m = 0; m <= m_max_; ++m) {
      const std::int64_t x = r.counts[m];
      sum_[m] += x;
      sum_sq_[m] += BigInt(x) * x;
      if (std::abs(static_cast<double>(x) - asymptotic_[m]) < radius_) ++hits_[m];
    }
    if (!r.equalities) ++identity_failures_;
    if (!r.inequalities) ++inequality_failures_;
    if (keep_heads_) heads_.push_back({r.counts[0], r.counts[1], r.counts[2]});
  }

  SampleStats finish() && {
    SampleStats st;
    st.q = q_;
    st.m_max = m_max_;
    st.samples = n_;
    const BigInt n = n_;
    for (std::uint32_t m = 0; m <= m_max_; ++m) {
      MomentStats ms;
      ms.m = m;
      ms.expected = expected_xm(q_, m);
      ms.asymptotic = asymptotic_[m];
      ms.mean = Rational(sum_[m], n);
      ms.variance = n > 1 ? Rational(n * sum_sq_[m] - sum_[m] * sum_[m], n * (n - 1)) : Rational(0);
      ms.concentration_hits = hits_[m];
      ms.concentration = static_cast<double>(hits_[m]) / static_cast<double>(n_);
      st.per_m.push_back(std::move(ms));
    }
    st.identity_failures = identity_failures_;
    st.inequality_failures = inequality_failures_;
    st.heads = std::move(heads_);
    return st;
  }

 private:
  std::uint32_t q_, m_max_;
  bool keep_heads_;
  double radius_;
  std::uint64_t n_ = 0;
  std::vector<BigInt> sum_, sum_sq_;
  std::vector<std::uint64_t> hits_;
  std::vector<double> asymptotic_;
  std::uint64_t identity_failures_ = 0, inequality_failures_ = 0;
  std::vector<std::array<std::int64_t, 3>> heads_;
};

inline void check_m_max(std::uint32_t q, std::uint32_t m_max) {
  if (m_max > q + 1)
    throw OutOfRange("m_max " + std::to_string(m_max) + " exceeds q+1 = " + std::to_string(q + 1));
}

}  // namespace detail

/// Statistics of X_0..X_{m_max} over N independent uniform samples. Samples
/// are computed in parallel and reduced in index order.
inline SampleStats monte_carlo(const Field& field, const MonteCarloOptions& opt) {
  if (opt.samples == 0) throw OutOfRange("need at least one sample");
  const std::uint32_t q = field.size();
  detail::check_m_max(q, opt.m_max);
  const std::uint32_t kept = std::max(opt.m_max, 2u);
  std::vector<detail::SampleRecord> records(opt.samples);
  detail::parallel_for(opt.samples, opt.workers, [&](std::uint64_t k) {
    records[k] = detail::record_of(sample(field, opt.seed, k), kept);
  });
  detail::StatsAccumulator acc(q, opt.m_max, opt.keep_heads);
  for (const auto& r : records) acc.add(r);
  SampleStats st = std::move(acc).finish();
  st.seed = opt.seed;
  return st;
}

/// Same statistics with every arrangement of the space counted once (exact
/// expectations).
inline SampleStats enumerate_stats(const Field& field, std::uint32_t m_max,
                                   std::uint64_t guard = kDefaultGuard,
                                   bool keep_heads = false) {
  detail::check_m_max(field.size(), m_max);
  const Enumeration all = enumerate(field, guard);
  detail::StatsAccumulator acc(field.size(), m_max, keep_heads);
  for (const MinimalArrangement& arr : all) acc.add(detail::record_of(arr, std::max(m_max, 2u)));
  SampleStats st = std::move(acc).finish();
  st.enumerated = true;
  return st;
}

}  // namespace besico
