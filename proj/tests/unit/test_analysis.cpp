#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bnrsat/analysis.hpp"

namespace bnrsat {
namespace {

double f_at(const std::vector<unsigned>& v, double x) {
  double s = 1.0;
  for (unsigned c : v) s -= std::pow(x, -static_cast<double>(c));
  return s;
}

TEST(BranchingFactor, TableValues) {
  EXPECT_NEAR(branching_factor({{3, 3}}).factor, 1.2600, 5e-4);
  EXPECT_NEAR(branching_factor({{3, 4}}).factor, 1.2208, 5e-4);
  EXPECT_NEAR(branching_factor({{3, 5}}).factor, 1.1939, 5e-4);
  EXPECT_NEAR(branching_factor({{4, 4}}).factor, 1.1893, 5e-4);
}

TEST(BranchingFactor, ClosedForms) {
  EXPECT_NEAR(branching_factor({{2, 2}}).factor, std::sqrt(2.0), 1e-10);
  EXPECT_NEAR(branching_factor({{3, 3}}).factor, std::cbrt(2.0), 1e-10);
  EXPECT_NEAR(branching_factor({{4, 4}}).factor, std::pow(2.0, 0.25), 1e-10);
  // (1,2): x^2 = x + 1.
  EXPECT_NEAR(branching_factor({{1, 2}}).factor, (1 + std::sqrt(5.0)) / 2, 1e-10);
  EXPECT_DOUBLE_EQ(branching_factor({{5}}).factor, 1.0);
  EXPECT_NEAR(branching_factor({{1, 1}}).factor, 2.0, 1e-10);
}

TEST(BranchingFactor, RejectsBadVectors) {
  EXPECT_THROW(branching_factor({{}}), std::invalid_argument);
  EXPECT_THROW(branching_factor({{0, 3}}), std::invalid_argument);
}

TEST(BranchingFactor, RootPropertiesOnRandomVectors) {
  std::mt19937 rng(5);
  for (int i = 0; i < 300; ++i) {
    std::vector<unsigned> v = {1 + rng() % 12, 1 + rng() % 12};
    if (rng() % 3 == 0) v.push_back(1 + rng() % 12);
    const FactorResult r = branching_factor({v});
    EXPECT_LE(std::fabs(r.residual), 1e-10);
    EXPECT_LE(std::fabs(f_at(v, r.factor)), 1e-10);
    EXPECT_LT(f_at(v, r.factor - 1e-6), 0.0);
    EXPECT_GT(f_at(v, r.factor + 1e-6), 0.0);

    auto rev = v;
    std::reverse(rev.begin(), rev.end());
    EXPECT_NEAR(branching_factor({rev}).factor, r.factor, 1e-12);

    auto grown = v;
    grown[rng() % grown.size()] += 1;
    EXPECT_LT(branching_factor({grown}).factor, r.factor);
  }
}

TEST(Covers, Examples) {
  EXPECT_TRUE(covers({{3, 4}}, {{4, 5}}));
  EXPECT_FALSE(covers({{3, 4}}, {{3, 3}}));
  EXPECT_TRUE(covers({{3, 4}}, {{4, 3}}));
  EXPECT_THROW(covers({{3, 4}}, {{3, 4, 5}}), std::invalid_argument);
}

TEST(Covers, ImpliesSmallerFactor) {
  std::mt19937 rng(9);
  for (int i = 0; i < 500; ++i) {
    const BranchingVector b{{1 + rng() % 8, 1 + rng() % 8}};
    const BranchingVector c{{1 + rng() % 8, 1 + rng() % 8}};
    if (covers(b, c)) EXPECT_LE(branching_factor(c).factor, branching_factor(b).factor + 1e-12);
  }
}

TEST(Potential, Values) {
  // Reference values from direct high-precision evaluation of c * 1.2226^3.
  EXPECT_DOUBLE_EQ(potential(0, FormulaClass::Good), 2.0);
  EXPECT_NEAR(potential(3, FormulaClass::Good), 3.654964558352, 1e-11);
  EXPECT_NEAR(potential(3, FormulaClass::Bad), 4.000617949159, 1e-11);
}

TEST(Potential, RatioIsStableForLargeMeasures) {
  const double r = potential_ratio(100000 - 3, FormulaClass::Good, 100000, FormulaClass::Good);
  EXPECT_NEAR(r, std::pow(1.2226, -3), 1e-12);
  EXPECT_TRUE(std::isfinite(r));
}

TEST(Potential, ConstantChainsHold) {
  const PotentialConstants k;
  const double b = k.base;
  EXPECT_DOUBLE_EQ(k.c1, 2.0);
  EXPECT_DOUBLE_EQ(k.c2, 2.0 / 0.9136);
  EXPECT_LE(k.c2 * (std::pow(b, -3) + std::pow(b, -4)), k.c2);
  EXPECT_LE(2 * k.c1 * std::pow(b, -3), k.c2);
  EXPECT_LE(k.c2 * (std::pow(b, -3) + std::pow(b, -5)), k.c1);
  EXPECT_LE(2 * k.c2 * std::pow(b, -4), k.c1);
  EXPECT_LE(k.c1 * (std::pow(b, -3) + std::pow(b, -4)), k.c1);
}

}  // namespace
}  // namespace bnrsat
