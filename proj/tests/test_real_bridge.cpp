#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "besico/constructions.hpp"
#include "besico/real_bridge.hpp"
#include "besico/sampling.hpp"

using namespace besico;

namespace {

RealArrangement from_slopes(std::vector<std::pair<Rational, Rational>> rows) {
  std::vector<RationalLine> ls;
  for (auto& [s, b] : rows) ls.push_back(RationalLine::from_slope(s, b));
  return RealArrangement(std::move(ls));
}

RealArrangement triangle() { return from_slopes({{0, 0}, {1, 0}, {-1, 2}}); }

// Faces by insertion: a new line crossing k distinct earlier points is cut
// into k+1 pieces, each splitting one face.
std::int64_t faces_by_insertion(const RealArrangement& a) {
  std::int64_t faces = 1;
  const auto& ls = a.lines();
  for (std::size_t i = 0; i < ls.size(); ++i) {
    std::set<RationalPoint> cuts;
    for (std::size_t j = 0; j < i; ++j)
      if (auto pt = intersect(ls[i], ls[j])) cuts.insert(*pt);
    faces += static_cast<std::int64_t>(cuts.size()) + 1;
  }
  return faces;
}

const Spectrum f5_example_spectrum() {
  return spectrum(MinimalArrangement::from_indices(Field(5), std::vector<std::uint32_t>{0, 1, 1, 2, 2, 0}));
}

}  // namespace

TEST(RealBridge, LineNormalization) {
  const RationalLine l(2, 4, 6), m(1, 2, 3);
  EXPECT_EQ(l, m);
  EXPECT_EQ(RationalLine(0, 3, 6), RationalLine::from_slope(0, 2));
  EXPECT_THROW(RationalLine(0, 0, 1), OutOfRange);
  EXPECT_TRUE(l.parallel_to(RationalLine(1, 2, 0)));
  EXPECT_FALSE(intersect(l, RationalLine(1, 2, 0)).has_value());
  const auto p = intersect(RationalLine::vertical(Rational(1, 3)), RationalLine::from_slope(2, 1));
  ASSERT_TRUE(p);
  EXPECT_EQ(p->first, Rational(1, 3));
  EXPECT_EQ(p->second, Rational(5, 3));
}

TEST(RealBridge, DuplicateLines) {
  EXPECT_THROW(RealArrangement({RationalLine(1, 1, 1), RationalLine(2, 2, 2)}), DuplicateLine);
}

TEST(RealBridge, Quantities) {
  IncidenceQuantities q = real_quantities(fixtures::pencil(3));
  EXPECT_EQ(q.p1, 3);
  EXPECT_EQ(q.p0, 1);
  EXPECT_EQ(q.p01, 3);
  EXPECT_EQ(q.x_at(3), 1);
  q = real_quantities(triangle());
  EXPECT_EQ(q.p0, 3);
  EXPECT_EQ(q.p01, 6);
  EXPECT_EQ(q.x_at(2), 3);
  EXPECT_THROW(real_quantities(RealArrangement({RationalLine(1, 0, 0)})), OutOfRange);
}

TEST(RealBridge, FVectors) {
  EXPECT_EQ(f_vector(real_quantities(triangle())), (FVector{3, 9, 7, 3, 1}));
  const FVector pencil = f_vector(real_quantities(fixtures::pencil(3)));
  EXPECT_EQ(pencil.f1b, 0);
  EXPECT_EQ(pencil.f2b, 0);
  EXPECT_EQ(pencil.f2, 6);
  EXPECT_EQ(f_vector(real_quantities(fixtures::pencil(2))), (FVector{1, 4, 4, 0, 0}));
  // Only parallel lines: the bounded-cell formulas do not apply.
  EXPECT_THROW(f_vector(real_quantities(from_slopes({{1, 0}, {1, 1}}))), NegativeCellCount);
}

TEST(RealBridge, F1Direct) {
  EXPECT_EQ(f1_direct(triangle()), 9);
  EXPECT_EQ(f1_direct(fixtures::pencil(3)), 6);
  const RealArrangement ladder = from_slopes({{0, 0}, {0, 1}, {1, 0}});
  EXPECT_EQ(f1_direct(ladder), 7);
  const IncidenceQuantities q = real_quantities(ladder);
  EXPECT_EQ(q.p1 + q.p01, 7);
}

TEST(RealBridge, PhiCheck) {
  const Spectrum s = f5_example_spectrum();
  EXPECT_EQ(s, Spectrum(5, {7, 9, 6, 3, 0, 0, 0}));
  EXPECT_TRUE(phi_check(s, fixtures::q5_example()));
  EXPECT_FALSE(phi_check(s, triangle()));
  EXPECT_FALSE(phi_check(spectrum(parabola(Field(5)).arrangement), fixtures::q5_example()));
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u})
    EXPECT_TRUE(phi_check(spectrum(concurrent(Field(q)).arrangement), fixtures::pencil(q + 1))) << q;
}

TEST(RealBridge, Predictions) {
  FieldPrediction p = predict_from_field(spectrum(concurrent(Field(5)).arrangement));
  EXPECT_EQ(p.f1b, 0);
  EXPECT_EQ(p.f2b, 0);
  p = predict_from_field(spectrum(parabola(Field(5)).arrangement));
  EXPECT_EQ(p.f1b, 18);
  EXPECT_EQ(p.f2b, 8);
  EXPECT_EQ(p.euler, 2);
  std::vector<std::int64_t> bad(7, 0);
  bad[0] = 25;
  EXPECT_THROW(predict_from_field(Spectrum(5, bad)), IdentityViolation);
}

TEST(RealBridge, CrossValidation) {
  const CrossValidation cv = cross_validate(f5_example_spectrum(), fixtures::q5_example());
  EXPECT_TRUE(cv.passed());
  EXPECT_EQ(cv.real.f2b, 7);
  EXPECT_EQ(cv.real.f1b, 15);
  EXPECT_EQ(cv.f1_direct, 27);

  const CrossValidation pencil = cross_validate(spectrum(concurrent(Field(5)).arrangement), fixtures::pencil(6));
  EXPECT_TRUE(pencil.passed());
  EXPECT_EQ(pencil.real.f1b, 0);
  EXPECT_EQ(pencil.real.f2b, 0);

  const CrossValidation generic = cross_validate(spectrum(parabola(Field(4)).arrangement), fixtures::generic(5));
  EXPECT_TRUE(generic.passed());
  EXPECT_EQ(generic.quantities.x_at(2), 10);
  EXPECT_EQ(generic.real.f2b, 6);

  EXPECT_THROW(cross_validate(f5_example_spectrum(), triangle()), PhiMismatch);
}

TEST(RealBridge, Parsing) {
  EXPECT_EQ(parse_rational("-3/2"), Rational(-3, 2));
  EXPECT_EQ(parse_rational("7"), 7);
  EXPECT_EQ(parse_rational("0.125"), Rational(1, 8));
  EXPECT_EQ(parse_rational("+4/6"), Rational(2, 3));
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational("1/2x"), ParseError);

  std::istringstream in("# comment\n1 -3/2 7\n\n0 1 2  # trailing\n");
  const RealArrangement a = parse_real_arrangement(in);
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a.lines()[0], RationalLine(1, Rational(-3, 2), 7));
  std::istringstream again(format_real_arrangement(a));
  EXPECT_EQ(parse_real_arrangement(again).lines(), a.lines());

  std::istringstream two("1 2\n");
  EXPECT_THROW(parse_real_arrangement(two), ParseError);
  std::istringstream zero("0 0 1\n");
  EXPECT_THROW(parse_real_arrangement(zero), ParseError);
}

// Edge and face counts along two independent paths, on random rational
// arrangements with forced parallels and concurrences.
TEST(RealBridge, RandomizedGeometry) {
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<int> count(2, 12), small(-3, 3), den(1, 3);
  int checked = 0;
  while (checked < 200) {
    const int n = count(rng);
    std::vector<RationalLine> ls;
    for (int k = 0; k < n; ++k) {
      if (rng() % 8 == 0) {
        ls.push_back(RationalLine::vertical(Rational(small(rng), den(rng))));
      } else if (rng() % 3 == 0 && !ls.empty()) {
        // Through an existing intersection point when there is one.
        const auto& a = ls[rng() % ls.size()];
        const auto& b = ls[rng() % ls.size()];
        const auto pt = intersect(a, b);
        if (!pt) continue;
        const Rational s(small(rng), den(rng));
        ls.push_back(RationalLine::from_slope(s, pt->second - s * pt->first));
      } else {
        ls.push_back(RationalLine::from_slope(Rational(small(rng), den(rng)), Rational(small(rng), den(rng))));
      }
      for (std::size_t j = 0; j + 1 < ls.size(); ++j)
        if (ls[j] == ls.back()) {
          ls.pop_back();
          break;
        }
    }
    if (ls.size() < 2) continue;
    const RealArrangement a(ls);
    const IncidenceQuantities q = real_quantities(a);
    if (q.p0 == 0) continue;  // all parallel
    std::int64_t sum_x = 0, sum_ix = 0;
    for (std::size_t i = 2; i < q.x.size(); ++i) sum_x += q.x[i], sum_ix += static_cast<std::int64_t>(i) * q.x[i];
    ASSERT_EQ(sum_x, q.p0);
    ASSERT_EQ(sum_ix, q.p01);
    const FVector f = f_vector(q);
    ASSERT_EQ(f1_direct(a), q.p1 + q.p01);
    ASSERT_EQ(faces_by_insertion(a), f.f2);
    ASSERT_EQ((f.f0 + 1) - f.f1 + f.f2, 2);
    ASSERT_EQ(f.f1 - f.f1b, 2 * q.p1);
    ASSERT_EQ(f.f2 - f.f2b, 2 * q.p1);
    ++checked;
  }
}

TEST(RealBridge, FieldSideIdentitiesExhaustive) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const std::int64_t qq = q;
    for (const auto& arr : enumerate(Field(q))) {
      const Spectrum s = spectrum(arr);
      const FieldPrediction p = predict_from_field(s);
      ASSERT_EQ(p.euler, 2);
      ASSERT_EQ(s[1] + p.f1b, (qq + 1) * (qq - 1));
      ASSERT_EQ(p.f1 - p.f1b, 2 * (qq + 1));
      ASSERT_EQ(p.f2 - p.f2b, 2 * (qq + 1));
    }
  }
}
