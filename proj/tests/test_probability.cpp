#include <gtest/gtest.h>

#include "besico/probability.hpp"
#include "oracles.hpp"

using namespace besico;

namespace {

Rational freq(std::uint64_t count, std::uint64_t total) { return Rational(BigInt(count), BigInt(total)); }

const std::uint32_t kPrimePowers[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16};

}  // namespace

TEST(Probability, Multinomial) {
  EXPECT_EQ(multinomial3(4, 2, 1, 1), 12);
  EXPECT_EQ(multinomial3(5, -1, 3, 3), 0);
  EXPECT_EQ(multinomial3(3, 3, 0, 0), 1);
  EXPECT_EQ(multinomial3(3, 1, 1, 0), 0);  // parts do not sum to the total
  EXPECT_THROW(multinomial3(-1, 0, 0, -1), OutOfRange);
}

TEST(Probability, ExactProbRange) {
  EXPECT_THROW(ExactProb(Rational(3, 2)), OutOfRange);
  EXPECT_THROW(ExactProb(Rational(-1, 5)), OutOfRange);
  const ExactProb p(Rational(6, 16));
  EXPECT_EQ(p.numerator(), 3);
  EXPECT_EQ(p.denominator(), 8);
  EXPECT_EQ(p.str(), "3/8");
  EXPECT_DOUBLE_EQ(p.to_double(), 0.375);
}

TEST(Probability, SinglePointExamples) {
  EXPECT_EQ(single_point_law(2, 1), Rational(3, 8));
  EXPECT_EQ(single_point_law(2, 3), Rational(1, 8));
  EXPECT_EQ(single_point_law(3, 0), Rational(16, 81));
  EXPECT_THROW(single_point_law(3, 5), OutOfRange);
  EXPECT_THROW(single_point_law(3, -1), OutOfRange);
}

TEST(Probability, JointExamples) {
  EXPECT_EQ(joint_point_law(3, 4, 4), Rational(0));
  EXPECT_EQ(joint_point_law(3, 0, 0), Rational(2, 81));
  EXPECT_THROW(joint_point_law(3, 0, 5), OutOfRange);
}

TEST(Probability, ExpectedCounts) {
  EXPECT_EQ(expected_xm(2, 0), Rational(1, 2));
  EXPECT_EQ(expected_xm(2, 1), Rational(3, 2));
  EXPECT_EQ(expected_xm(2, 2), Rational(3, 2));
  EXPECT_EQ(expected_xm(2, 3), Rational(1, 2));
  for (std::uint32_t q : kPrimePowers) {
    Rational total = 0, first = 0, second = 0;
    for (std::int64_t m = 0; m <= q + 1; ++m) {
      total += expected_xm(q, m);
      first += expected_xm(q, m) * m;
      second += expected_xm(q, m) * (m * m);
    }
    EXPECT_EQ(total, BigInt(q) * q);
    EXPECT_EQ(first, BigInt(q) * (q + 1));
    EXPECT_EQ(second, 2 * BigInt(q) * (q + 1));
  }
}

TEST(Probability, AsymptoticApproximation) {
  // E(X_m) = q^2/(m! e) + O(q).
  for (std::int64_t m = 0; m <= 4; ++m) {
    const double exact = to_double(expected_xm(1009, m));
    EXPECT_LT(std::abs(exact - asymptotic_xm(1009, m)), 1009.0) << m;
  }
  EXPECT_NEAR(asymptotic_xm(10, 0), 100 / std::numbers::e, 1e-12);
}

TEST(Probability, SingleLawSumsToOne) {
  for (std::uint32_t q = 2; q <= 64; ++q) {
    Rational total = 0;
    for (std::int64_t m = 0; m <= q + 1; ++m) total += single_point_law(q, m).value();
    EXPECT_EQ(total, 1) << q;
  }
}

TEST(Probability, JointLawNormalizedWithSingleMarginal) {
  for (std::uint32_t q = 2; q <= 16; ++q) {
    Rational total = 0;
    for (std::int64_t i = 0; i <= q + 1; ++i) {
      Rational row = 0;
      for (std::int64_t j = 0; j <= q + 1; ++j) row += joint_point_law(q, i, j).value();
      EXPECT_EQ(row, single_point_law(q, i).value()) << q << " " << i;
      total += row;
    }
    EXPECT_EQ(total, 1) << q;
  }
}

TEST(Probability, VarianceCancels) {
  for (std::uint32_t q : kPrimePowers) {
    for (Functional f : {Functional::Count, Functional::Mean, Functional::SecondMoment}) {
      EXPECT_EQ(variance_from_laws(q, f), 0) << q << " " << to_string(f);
      EXPECT_EQ(expectation(q, f), expected_constant(q, f)) << q << " " << to_string(f);
    }
  }
  EXPECT_EQ(expected_constant(4, Functional::Mean), Rational(5, 4));
  EXPECT_EQ(expected_constant(4, Functional::SecondMoment), Rational(5, 2));
}

// Oracle frequencies over every arrangement, for several point pairs
// including pairs on a common vertical and a common horizontal line.
TEST(Probability, LawsMatchEnumeration) {
  const std::vector<std::pair<std::pair<std::uint32_t, std::uint32_t>, std::pair<std::uint32_t, std::uint32_t>>>
      pairs{{{0, 0}, {1, 1}}, {{0, 0}, {0, 1}}, {{1, 0}, {0, 0}}, {{1, 1}, {0, 1}}};
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const oracle::PolyField f = q == 4 ? oracle::PolyField{2, 2, {1, 1, 1}} : oracle::prime_field(q);
    for (const auto& [P, Q] : pairs) {
      const oracle::LawCounts c = oracle::law_counts(f, P, Q);
      for (std::int64_t i = 0; i <= q + 1; ++i) {
        EXPECT_EQ(single_point_law(q, i).value(), freq(c.single[i], c.total)) << q << " " << i;
        for (std::int64_t j = 0; j <= q + 1; ++j) {
          const auto it = c.joint.find({static_cast<int>(i), static_cast<int>(j)});
          const std::uint64_t n = it == c.joint.end() ? 0 : it->second;
          EXPECT_EQ(joint_point_law(q, i, j).value(), freq(n, c.total)) << q << " (" << i << "," << j << ")";
        }
      }
    }
  }
}

TEST(Probability, LawTable) {
  const auto rows = law_table(2);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[1].probability, Rational(3, 8));
  EXPECT_EQ(rows[3].expected, Rational(1, 2));
}
