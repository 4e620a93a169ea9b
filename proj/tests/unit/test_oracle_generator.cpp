#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <sstream>

#include "bnrsat/classify.hpp"
#include "bnrsat/generator.hpp"
#include "bnrsat/oracle.hpp"
#include "bnrsat/reducer.hpp"
#include "checks.hpp"

namespace bnrsat {
namespace {

TEST(Oracle, Examples) {
  const auto a = solve_exhaustive(Formula::from_dimacs({{1, 2}}));
  ASSERT_TRUE(a.satisfiable);
  EXPECT_EQ(a.model.value(1), Value::False);
  EXPECT_EQ(a.model.value(2), Value::True);

  EXPECT_FALSE(solve_exhaustive(Formula::from_dimacs({{1}, {-1}})).satisfiable);

  const auto e = solve_exhaustive(Formula(3));
  ASSERT_TRUE(e.satisfiable);
  for (Var v = 1; v <= 3; ++v) EXPECT_EQ(e.model.value(v), Value::False);
}

TEST(Oracle, Guard) {
  EXPECT_THROW(solve_exhaustive(Formula(kOracleMaxVars + 1)), std::invalid_argument);
  EXPECT_NO_THROW(solve_exhaustive(Formula::from_dimacs({{static_cast<int>(kOracleMaxVars)}})));
}

TEST(Oracle, MatchesBruteForceAndRenaming) {
  std::mt19937 rng(3);
  for (std::size_t i = 0; i < 300; ++i) {
    const Formula f = generate(corpus_config(55, i));
    const auto cs = f.to_dimacs();
    const int n = static_cast<int>(f.num_vars());
    const auto r = solve_exhaustive(f);
    EXPECT_EQ(r.satisfiable, testing::brute_force_sat(cs, n));

    std::vector<int> perm(static_cast<std::size_t>(n) + 1);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    auto renamed = cs;
    for (auto& c : renamed)
      for (int& l : c) l = l > 0 ? perm[static_cast<std::size_t>(l)] : -perm[static_cast<std::size_t>(-l)];
    EXPECT_EQ(solve_exhaustive(Formula::from_dimacs(renamed, static_cast<Var>(n))).satisfiable, r.satisfiable);

    if (r.satisfiable) {
      std::vector<bool> bits(static_cast<std::size_t>(n) + 1, false);
      for (int v = 1; v <= n; ++v) bits[static_cast<std::size_t>(v)] = r.model.value(static_cast<Var>(v)) == Value::True;
      EXPECT_TRUE(testing::satisfies(cs, bits));
    }
  }
}

// Reference outputs computed with an independent implementation of the
// documented algorithm.
TEST(SplitMix64, ReferenceStream) {
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xe220a8397b1dcdafull);
  EXPECT_EQ(rng.next(), 0x6e789e6aa1b965f4ull);
  EXPECT_EQ(rng.next(), 0x06c45d188009454full);

  SplitMix64 b(0x1234);
  const std::vector<std::uint64_t> expected = {4, 0, 6, 0, 6, 1, 0, 6};
  for (auto e : expected) EXPECT_EQ(b.bounded(7), e);
  EXPECT_THROW(b.bounded(0), std::invalid_argument);
}

TEST(Generator, UniformReferenceInstances) {
  GenConfig cfg;
  cfg.seed = 42;
  cfg.n = 6;
  cfg.m = 5;
  cfg.width_weights = {1, 1, 1, 1, 1};
  const std::vector<std::vector<int>> expected = {
      {1, 2, 5, 6}, {1, 3, -4, -5, 6}, {-2, -4, 6}, {-2, -3}, {1, -2, -4, -5}};
  EXPECT_EQ(generate(cfg).to_dimacs(), expected);

  cfg.seed = 7;
  cfg.n = 10;
  cfg.m = 4;
  cfg.width_weights = {0, 0, 1, 0, 0};
  const std::vector<std::vector<int>> expected3 = {{4, -5, 8}, {-3, 6, -9}, {-1, -3, -10}, {4, 5, -7}};
  EXPECT_EQ(generate(cfg).to_dimacs(), expected3);
}

TEST(Generator, UniformShape) {
  GenConfig cfg;
  cfg.seed = 1;
  cfg.n = 10;
  cfg.m = 42;
  const Formula f = generate(cfg);
  EXPECT_EQ(f.num_clauses(), 42u);
  EXPECT_LE(f.num_vars(), 10u);
  for (const Clause& c : f.clauses()) EXPECT_EQ(c.size(), 3u);
}

TEST(Generator, SameSeedSameFormula) {
  for (GenMode mode : {GenMode::Uniform, GenMode::Degree3Adversarial, GenMode::ReducedFuzz}) {
    GenConfig cfg;
    cfg.seed = 99;
    cfg.n = 20;
    cfg.m = 70;
    cfg.mode = mode;
    EXPECT_EQ(generate(cfg).to_dimacs(), generate(cfg).to_dimacs());
    cfg.seed = 100;
    const auto other = generate(cfg).to_dimacs();
    cfg.seed = 99;
    EXPECT_NE(generate(cfg).to_dimacs(), other);
  }
}

TEST(Generator, Degree3Profile) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.n = static_cast<Var>(5 + seed % 40);
    cfg.mode = GenMode::Degree3Adversarial;
    const Formula f = generate(cfg);
    for (const Clause& c : f.clauses()) EXPECT_EQ(c.size(), 3u);
    for (Var v = 1; v <= cfg.n; ++v) {
      const DegreePair d = f.degree_pair(Literal::positive(v));
      const bool ok = (d.pos == 3 && d.neg == 3) || (d.pos == 3 && d.neg == 4) || (d.pos == 4 && d.neg == 3);
      EXPECT_TRUE(ok) << "seed " << seed << " var " << v;
    }
  }
}

TEST(Generator, Degree3FindsBadFormulas) {
  std::size_t attempts = 0;
  for (std::uint64_t seed = 0; seed < 1'000'000; ++seed) {
    ++attempts;
    GenConfig cfg;
    cfg.seed = seed;
    cfg.n = 30;
    cfg.mode = GenMode::Degree3Adversarial;
    if (classify(generate(cfg)) == FormulaClass::Bad) break;
  }
  EXPECT_LT(attempts, 1'000'000u);
}

TEST(Generator, ReducedModeIsReducedAndNontrivial) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.n = 15;
    cfg.m = 60;
    cfg.mode = GenMode::ReducedFuzz;
    const Formula f = generate(cfg);
    EXPECT_FALSE(f.empty());
    EXPECT_FALSE(f.has_empty_clause());
    EXPECT_TRUE(is_reduced(f));
  }
}

TEST(Generator, Errors) {
  GenConfig cfg;
  cfg.n = 0;
  cfg.m = 3;
  EXPECT_THROW(generate(cfg), GenerationError);
  cfg.n = 2;
  cfg.mode = GenMode::Degree3Adversarial;
  EXPECT_THROW(generate(cfg), GenerationError);
  cfg.mode = GenMode::Uniform;
  cfg.width_weights = {0, 0, 0, 0, 0};
  EXPECT_THROW(generate(cfg), GenerationError);
}

TEST(Manifest, RoundTrip) {
  std::istringstream in("# comment\n12 uniform 10 42 0,0,1,0,0\n\n0x10 degree3 30 0 0,0,1,0,0  # tail\n");
  const auto cfgs = parse_manifest(in);
  ASSERT_EQ(cfgs.size(), 2u);
  EXPECT_EQ(cfgs[1].seed, 16u);
  EXPECT_EQ(cfgs[1].mode, GenMode::Degree3Adversarial);
  EXPECT_EQ(format_manifest_line(cfgs[0]), "12 uniform 10 42 0,0,1,0,0");
  std::istringstream again(format_manifest_line(cfgs[1]));
  EXPECT_EQ(parse_manifest(again)[0], cfgs[1]);

  std::istringstream bad("1 uniform 10\n");
  EXPECT_THROW(parse_manifest(bad), std::invalid_argument);
  std::istringstream mode("1 nope 10 4 1,1,1,1,1\n");
  EXPECT_THROW(parse_manifest(mode), std::invalid_argument);
}

}  // namespace
}  // namespace bnrsat
