#include <gtest/gtest.h>

#include <set>

#include "besico/constructions.hpp"
#include "besico/identities.hpp"
#include "besico/sampling.hpp"

using namespace besico;

namespace {

Spectrum pencil5() { return Spectrum(5, {0, 24, 0, 0, 0, 0, 1}); }
Spectrum parabola5() { return Spectrum(5, {8, 6, 9, 2, 0, 0, 0}); }
Spectrum parabola4() { return Spectrum(4, {6, 0, 10, 0, 0, 0}); }

}  // namespace

TEST(Identities, Moments) {
  for (const Spectrum& s : {pencil5(), parabola5()}) {
    const MomentChecks m = verify_moments(s);
    EXPECT_TRUE(m.all_pass());
    EXPECT_EQ(m.count.lhs, 25);
    EXPECT_EQ(m.first.lhs, 30);
    EXPECT_EQ(m.second.lhs, 60);
  }
  std::vector<std::int64_t> degenerate(7, 0);
  degenerate[0] = 25;
  const MomentChecks m = verify_moments(Spectrum(5, degenerate));
  EXPECT_TRUE(m.count.pass());
  EXPECT_FALSE(m.first.pass());
  EXPECT_EQ(m.first.lhs, 0);
  EXPECT_EQ(m.first.rhs, 30);
}

TEST(Identities, IncidenceFormula) {
  EXPECT_EQ(incidence_formula_size(parabola5()), 17);
  EXPECT_EQ(incidence_formula_size(pencil5()), 25);
  EXPECT_EQ(incidence_formula_size(Spectrum(5, {10, 0, 15, 0, 0, 0, 0})), 15);
}

TEST(Identities, DerivedCounts) {
  const std::vector<std::int64_t> t1{2, 0, 0, 0}, t2{0, 0, 0, 1}, t3{0, 0, 0, 0};
  DerivedCounts d = derived_x1_x2(t1, 5);
  EXPECT_EQ(d.x1, 6);
  EXPECT_EQ(d.x2, 9);
  d = derived_x1_x2(t2, 5);
  EXPECT_EQ(d.x1, 24);
  EXPECT_EQ(d.x2, 0);
  d = derived_x1_x2(t3, 5);
  EXPECT_EQ(d.x1, 0);
  EXPECT_EQ(d.x2, 15);
}

TEST(Identities, DerivedCountsErrors) {
  const std::vector<std::int64_t> infeasible{6, 0, 0, 0}, negative{-1, 0, 0, 0}, long_tail(5, 0);
  EXPECT_THROW(derived_x1_x2(infeasible, 5), NegativeResult);
  EXPECT_THROW(derived_x1_x2(negative, 5), OutOfRange);
  EXPECT_THROW(derived_x1_x2(long_tail, 5), LengthMismatch);
}

TEST(Identities, Bounds) {
  BoundChecks b = check_bounds(parabola4());
  EXPECT_TRUE(b.all_pass());
  EXPECT_TRUE(b.x0.sharp());
  EXPECT_TRUE(b.x0_attains_max);

  b = check_bounds(parabola5());
  EXPECT_TRUE(b.all_pass());
  EXPECT_EQ(b.x0_exact_max, 8);
  EXPECT_TRUE(b.x0_attains_max);

  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const BoundChecks c = check_bounds(spectrum(concurrent(Field(q)).arrangement));
    EXPECT_TRUE(c.x1.sharp()) << q;
    EXPECT_TRUE(c.all_pass()) << q;
  }
  EXPECT_EQ(parity_max_x0(4), 6);
  EXPECT_EQ(parity_max_x0(5), 8);
  EXPECT_EQ(parity_max_x0(2), 1);
  EXPECT_EQ(parity_max_x0(3), 2);
}

TEST(Identities, BoundViolationsAreReported) {
  // Not from an arrangement: x_0 above q(q-1)/2.
  const BoundChecks b = check_bounds(Spectrum(5, {11, 0, 14, 0, 0, 0, 0}));
  EXPECT_FALSE(b.x0.pass());
  EXPECT_FALSE(b.all_pass());
}

TEST(Identities, ZeInequalities) {
  InequalityChecks z = check_ze(parabola4());
  EXPECT_TRUE(z.all_pass());
  EXPECT_TRUE(z.all_sharp());
  EXPECT_EQ(z.total.lhs, 16);
  EXPECT_EQ(z.lower.lhs, 8);
  EXPECT_EQ(z.upper.lhs, 28);

  z = check_ze(pencil5());
  EXPECT_TRUE(z.all_pass());
  EXPECT_EQ(z.total.lhs, 24);
  EXPECT_EQ(z.lower.lhs, 0);
  EXPECT_EQ(z.upper.lhs, 48);
  EXPECT_EQ(z.upper.rhs, 45);

  z = check_ze(parabola5());
  EXPECT_TRUE(z.all_pass());
  EXPECT_FALSE(z.total.sharp());
  EXPECT_TRUE(z.lower.sharp());
  EXPECT_TRUE(z.upper.sharp());
  EXPECT_EQ(z.total.lhs, 23);
}

TEST(Identities, NormalizedTriple) {
  const NormalizedTriple t = normalized_triple(pencil5());
  EXPECT_EQ(t.x0, 0);
  EXPECT_EQ(t.x1, Rational(24, 25));
  EXPECT_EQ(t.x2, 0);
  const NormalizedTriple p = normalized_triple(parabola4());
  EXPECT_EQ(p.x0, Rational(6, 16));
  EXPECT_EQ(p.x1, 0);
  EXPECT_EQ(p.x2, Rational(10, 16));
  // Even-q parabola tends to (1/2, 0, 1/2).
  const NormalizedTriple big = normalized_triple(spectrum(parabola(Field(1024)).arrangement));
  EXPECT_NEAR(to_double(big.x0), 0.5, 1e-3);
  EXPECT_NEAR(to_double(big.x2), 0.5, 1e-3);
}

TEST(Identities, ThirdMoment) {
  EXPECT_EQ(third_moment(pencil5()), 240);
  EXPECT_EQ(third_moment(parabola5()), 132);
}

TEST(Identities, ReportOnGenuineAndSyntheticSpectra) {
  const IdentityReport r = verify(parabola5());
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.third_moment, 132);
  std::vector<std::int64_t> degenerate(7, 0);
  degenerate[0] = 25;
  const IdentityReport bad = verify(Spectrum(5, degenerate));
  EXPECT_FALSE(bad.equalities_pass());
  EXPECT_FALSE(bad.all_pass());
}

// Exhaustive over q = 2..5: equalities, round trip of the derived counts,
// incidence formula, bounds, inequalities and the extremal values.
TEST(Identities, ExhaustiveSmallFields) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    std::int64_t max_x0 = 0, max_x1 = 0;
    std::set<std::int64_t> thirds;
    for (const MinimalArrangement& a : enumerate(Field(q))) {
      const Spectrum s = spectrum(a);
      const IdentityReport r = verify(s);
      ASSERT_TRUE(r.all_pass());
      const DerivedCounts d = derived_x1_x2(tail_of(s), q);
      ASSERT_EQ(d.x1, s[1]);
      ASSERT_EQ(d.x2, s[2]);
      ASSERT_EQ(incidence_formula_size(s), static_cast<std::int64_t>(q) * q - s[0]);
      max_x0 = std::max(max_x0, s[0]);
      max_x1 = std::max(max_x1, s[1]);
      thirds.insert(r.third_moment);
    }
    EXPECT_EQ(max_x0, parity_max_x0(q)) << q;
    EXPECT_EQ(max_x1, static_cast<std::int64_t>(q) * q - 1) << q;
    EXPECT_GE(thirds.size(), 2u) << q;
  }
}
