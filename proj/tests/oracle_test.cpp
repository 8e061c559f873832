#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "rectdist/oracle.hpp"
#include "rectdist/random.hpp"
#include "test_support.hpp"

namespace rectdist::oracle {
namespace {

using rectdist::testing::B;
using rectdist::testing::kInf;
using rectdist::testing::R;

bool has(const std::vector<Rational>& axis, const Rational& x) {
  return std::binary_search(axis.begin(), axis.end(), x);
}

TEST(CriticalGridTest, ContainsTranslatesSentinelsAndMidpoints) {
  const Axes axes = critical_grid(R("(0,2) x (0,2)"), R("(1,3) x (1,3)"), 1);
  ASSERT_EQ(axes.size(), 2u);
  for (const auto& axis : axes) {
    EXPECT_TRUE(std::is_sorted(axis.begin(), axis.end()));
    EXPECT_EQ(std::adjacent_find(axis.begin(), axis.end()), axis.end());
    for (int v = -1; v <= 5; ++v) EXPECT_TRUE(has(axis, v)) << v;
    EXPECT_TRUE(has(axis, Rational(1, 2)));
    // Sentinels lie strictly outside every translate (-2 .. 5).
    EXPECT_LT(axis.front(), -2);
    EXPECT_GT(axis.back(), 5);
  }
}

TEST(CriticalGridTest, ZeroEps) {
  const Axes axes = critical_grid(R("(0,1) x (0,1)"), R("(0,1) x (0,1)"), 0);
  for (const auto& axis : axes) {
    EXPECT_EQ(axis, (std::vector<Rational>{-1, 0, Rational(1, 2), 1, 2}));
  }
}

TEST(CriticalGridTest, InfiniteEndpointsContributeNothing) {
  const Axes axes = critical_grid(R("(-inf,inf) x (0,inf)"), std::nullopt, 1);
  EXPECT_EQ(axes[0].size(), 3u);  // no finite values: a placeholder and its sentinels
  EXPECT_TRUE(has(axes[1], 0));
  EXPECT_TRUE(has(axes[1], -2));
  EXPECT_TRUE(has(axes[1], 2));
}

TEST(GridModuleTest, DimsAreStrictMembership) {
  const Rectangle r = R("(0,2) x (1,inf)");
  const Axes axes = critical_grid(r, std::nullopt, 0);
  const GridModule m(r, axes);
  ASSERT_EQ(m.size(), axes[0].size() * axes[1].size());
  for (std::size_t i = 0; i < axes[0].size(); ++i) {
    for (std::size_t j = 0; j < axes[1].size(); ++j) {
      const std::size_t p = i * m.strides()[0] + j * m.strides()[1];
      EXPECT_EQ(m.dim_at(p), r.contains(std::vector<Rational>{axes[0][i], axes[1][j]}));
    }
  }
  const GridModule zero(std::nullopt, axes);
  for (std::size_t p = 0; p < zero.size(); ++p) EXPECT_FALSE(zero.dim_at(p));
}

TEST(GridModuleTest, OffsetShiftsSupport) {
  const Rectangle r = R("(1,3)");
  const Axes axes{{0, Rational(1, 2), 1, 2, 3}};
  const GridModule shifted(r, axes, 1);  // support of the 1-shift is (0, 2)
  EXPECT_FALSE(shifted.dim_at(0));
  EXPECT_TRUE(shifted.dim_at(1));
  EXPECT_TRUE(shifted.dim_at(2));
  EXPECT_FALSE(shifted.dim_at(3));
}

TEST(GridCheckTest, Examples) {
  const Rectangle r = R("(0,2) x (0,2)");
  const Rectangle q = R("(1,3) x (1,3)");
  EXPECT_TRUE(grid_interleaving_check(r, q, 1));
  EXPECT_FALSE(grid_interleaving_check(r, q, Rational(3, 4)));
  EXPECT_TRUE(grid_interleaving_check(r, r, 0));
  EXPECT_TRUE(grid_interleaving_check(ModuleSupport(r), std::nullopt, 1));
  EXPECT_FALSE(grid_interleaving_check(ModuleSupport(r), std::nullopt, Rational(99, 100)));
  EXPECT_TRUE(grid_interleaving_check(std::nullopt, ModuleSupport(r), 1));
}

TEST(GridCheckTest, NontrivialMorphismAgreesWithCondition) {
  std::mt19937_64 rng(50);
  RandomBarParams p;
  p.inf_prob = 0.15;
  for (int t = 0; t < 300; ++t) {
    const Rectangle r = random_rectangle(rng, p);
    const Rectangle q = random_rectangle(rng, p);
    for (const Rational eps : {Rational(0), Rational(1, 2), Rational(1), Rational(2), Rational(7, 2)}) {
      EXPECT_EQ(grid_nontrivial_morphism(r, q, eps), admits_nontrivial_morphism(r, q, eps))
          << format_rectangle(r) << " " << format_rectangle(q) << " " << eps;
    }
  }
}

TEST(OracleDistanceTest, Examples) {
  EXPECT_EQ(oracle_interleaving_distance(R("(0,2) x (0,2)"), R("(1,3) x (1,3)")), ExtReal(1));
  EXPECT_EQ(oracle_interleaving_distance(R("(0,3) x (1,5)"), R("(0,3) x (1,5)")), ExtReal(0));
  EXPECT_EQ(oracle_interleaving_distance(R("(0,1) x (0,10)"), R("(100,101) x (0,10)")), ExtReal::fraction(1, 2));
  EXPECT_EQ(oracle_interleaving_distance(R("(0,inf) x (0,inf)"), R("(1,inf) x (1,inf)")), ExtReal(1));
  EXPECT_EQ(oracle_interleaving_distance(ModuleSupport(R("(0,10) x (0,1)")), std::nullopt), ExtReal::fraction(1, 2));
  EXPECT_EQ(oracle_interleaving_distance(ModuleSupport(R("(0,inf) x (-inf,inf)")), std::nullopt), kInf);
  EXPECT_EQ(oracle_interleaving_distance(std::nullopt, std::nullopt), ExtReal(0));
  EXPECT_THROW(oracle_interleaving_distance(R("(0,1)"), R("(0,1) x (0,1)")), DimensionMismatch);
}

TEST(OracleDistanceTest, CandidatesIncludeDifferencesAndHalves) {
  const auto c = distance_candidates(R("(0,3)"), R("(1,inf)"));
  EXPECT_EQ(c, (std::vector<Rational>{0, Rational(1, 2), 1, Rational(3, 2), 2, 3}));
}

TEST(EnumerationTest, Examples) {
  EXPECT_EQ(enumerate_bottleneck(B("(0,2) x (0,2)"), B("(1,3) x (1,3)")), ExtReal(1));
  EXPECT_EQ(enumerate_bottleneck(B(""), B("")), ExtReal(0));
  std::mt19937_64 rng(51);
  const Barcode b = random_barcode(rng, 3, RandomBarParams{});
  EXPECT_EQ(enumerate_bottleneck(b, b), ExtReal(0));
  EXPECT_THROW(enumerate_bottleneck(random_barcode(rng, 9, RandomBarParams{}), b), TooLarge);
  EXPECT_THROW(enumerate_bottleneck(B("(0,1)"), B("(0,1) x (0,1)")), DimensionMismatch);
}

// Properties.

TEST(OracleProperty, AgreesWithFormula) {
  std::mt19937_64 rng(52);
  for (std::size_t dim : {1, 2, 3}) {
    RandomBarParams p;
    p.dim = dim;
    p.inf_prob = 0.15;
    for (int t = 0; t < (dim == 3 ? 40 : 150); ++t) {
      const Rectangle r = random_rectangle(rng, p);
      const Rectangle q = random_rectangle(rng, p);
      EXPECT_EQ(oracle_interleaving_distance(r, q), interleaving_distance(r, q))
          << format_rectangle(r) << " vs " << format_rectangle(q);
    }
  }
}

TEST(OracleProperty, ZeroModuleBridge) {
  std::mt19937_64 rng(53);
  RandomBarParams p;
  p.inf_prob = 0.15;
  for (int t = 0; t < 100; ++t) {
    const Rectangle r = random_rectangle(rng, p);
    const ExtReal threshold = triviality_threshold(r);
    for (const Rational& eps : distance_candidates(r, std::nullopt)) {
      EXPECT_EQ(grid_interleaving_check(ModuleSupport(r), std::nullopt, eps), ExtReal(2 * eps) >= threshold);
    }
  }
}

TEST(OracleProperty, RefinementDoesNotChangeAnswer) {
  std::mt19937_64 rng(54);
  std::uniform_int_distribution<long long> num(-80, 80);
  std::uniform_int_distribution<long long> den(1, 8);
  RandomBarParams p;
  p.inf_prob = 0.15;
  for (int t = 0; t < 150; ++t) {
    const Rectangle r = random_rectangle(rng, p);
    const Rectangle q = random_rectangle(rng, p);
    const Rational eps(num(rng) < 0 ? 1 : 2, den(rng));
    Axes axes = critical_grid(r, q, eps);
    for (auto& axis : axes) {
      for (int k = 0; k < 4; ++k) axis.emplace_back(num(rng), den(rng));
      std::sort(axis.begin(), axis.end());
      axis.erase(std::unique(axis.begin(), axis.end()), axis.end());
    }
    EXPECT_EQ(grid_interleaving_check(r, q, eps), grid_interleaving_check(r, q, eps, axes));
  }
}

TEST(OracleProperty, CheckIsMonotoneInEps) {
  std::mt19937_64 rng(55);
  RandomBarParams p;
  p.inf_prob = 0.15;
  for (int t = 0; t < 60; ++t) {
    const Rectangle r = random_rectangle(rng, p);
    const Rectangle q = random_rectangle(rng, p);
    bool seen = false;
    for (const Rational& eps : distance_candidates(r, q)) {
      const bool ok = grid_interleaving_check(r, q, eps);
      if (seen) EXPECT_TRUE(ok);
      seen = seen || ok;
    }
  }
}

}  // namespace
}  // namespace rectdist::oracle
