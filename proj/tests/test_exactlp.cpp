#include <gtest/gtest.h>

#include "eucdom/eucdom.hpp"
#include "support/oracles.hpp"

using namespace eucdom;
using namespace eucdom::testing;

namespace {

HomogeneousSystem system_of(int vars, const std::vector<std::vector<int>>& rows) {
  HomogeneousSystem sys(vars);
  for (const auto& r : rows) {
    RationalVector row;
    for (int c : r) row.emplace_back(c);
    sys.add_row(std::move(row), "r" + std::to_string(sys.num_rows() + 1));
  }
  return sys;
}

RationalVector ints(std::initializer_list<int> values) {
  RationalVector out;
  for (int v : values) out.emplace_back(v);
  return out;
}

}  // namespace

TEST(ExactLP, FeasibleWithMarginOne) {
  const auto sys = system_of(2, {{1, -1}, {1, 0}});
  const auto result = feasible_strict(sys);
  ASSERT_TRUE(is_feasible(result));
  const auto& x = std::get<Feasible>(result).witness;
  EXPECT_TRUE(check_witness(sys, x));
  for (const auto& row : sys.rows()) EXPECT_LE(dot(row, x), -1);
}

TEST(ExactLP, OpposedRowsGiveUnitCertificate) {
  const auto sys = system_of(2, {{1, -1}, {-1, 1}});
  const auto result = feasible_strict(sys);
  ASSERT_FALSE(is_feasible(result));
  EXPECT_EQ(std::get<Infeasible>(result).certificate, ints({1, 1}));
}

TEST(ExactLP, ZeroRowIsInfeasible) {
  const auto result = feasible_strict(system_of(3, {{1, 2, 3}, {0, 0, 0}}));
  ASSERT_FALSE(is_feasible(result));
  EXPECT_EQ(std::get<Infeasible>(result).certificate, ints({0, 1}));
}

TEST(ExactLP, CertificateIsPrimitiveInteger) {
  // 2*(x) + 1*(-2x) = 0 with rows scaled so the raw duals are fractional
  const auto sys = system_of(1, {{3}, {-6}});
  const auto result = feasible_strict(sys);
  ASSERT_FALSE(is_feasible(result));
  EXPECT_EQ(std::get<Infeasible>(result).certificate, ints({2, 1}));
}

TEST(ExactLP, Errors) {
  HomogeneousSystem sys(2);
  EXPECT_THROW(sys.add_row(ints({1}), "short"), DimensionError);
  EXPECT_THROW(feasible_strict(sys), std::invalid_argument);
  EXPECT_THROW(HomogeneousSystem(0), std::invalid_argument);
  sys.add_row(ints({1, 0}), "x");
  EXPECT_THROW(check_witness(sys, ints({1})), DimensionError);
  EXPECT_THROW(check_certificate(sys, ints({1, 1})), DimensionError);
  EXPECT_THROW(HomogeneousSystem(2, {ints({1, 0})}, {"a", "b"}), DimensionError);
}

TEST(ExactLP, CheckersRejectBadVectors) {
  const auto sys = system_of(2, {{1, -1}, {-1, 1}});
  EXPECT_FALSE(check_certificate(sys, ints({0, 0})));
  EXPECT_FALSE(check_certificate(sys, ints({-1, -1})));
  EXPECT_FALSE(check_certificate(sys, ints({1, 2})));
  EXPECT_FALSE(check_witness(sys, ints({0, 0})));
}

TEST(ExactLP, DumpFormat) {
  HomogeneousSystem sys(2);
  sys.add_row({Rational(1, 2), Rational(-3)}, "first");
  EXPECT_EQ(dump_system(sys), "first: 1/2 -3\n");
}

TEST(ExactLPProperty, ExactlyOneSideValidAndMatchesEliminationOracle) {
  Rng rng(41);
  int feasible_count = 0, infeasible_count = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int vars = uniform(rng, 1, 4), rows = uniform(rng, 1, 6);
    auto sys = random_system(rng, vars, rows, 3);
    if (uniform(rng, 0, 2) == 0) {
      // append minus a nonnegative combination of the rows: forces infeasibility
      RationalVector extra(static_cast<std::size_t>(vars));
      for (int r = 0; r < rows; ++r) {
        const int w = uniform(rng, 0, 2);
        for (int j = 0; j < vars; ++j) extra[j] -= w * sys.row(r)[j];
      }
      sys.add_row(std::move(extra), "combo");
    }
    const bool oracle = fm_strictly_feasible(sys.rows(), vars);
    const auto result = feasible_strict(sys);
    ASSERT_EQ(is_feasible(result), oracle) << dump_system(sys);
    if (const auto* f = std::get_if<Feasible>(&result)) {
      ++feasible_count;
      EXPECT_TRUE(check_witness(sys, f->witness));
    } else {
      ++infeasible_count;
      const auto& y = std::get<Infeasible>(result).certificate;
      EXPECT_TRUE(check_certificate(sys, y));
      Integer g = 0;
      for (const auto& v : y) {
        EXPECT_EQ(denominator(v), 1);
        g = gcd(g, Integer(numerator(v)));
      }
      EXPECT_EQ(g, 1);
    }
  }
  EXPECT_GT(feasible_count, 100);
  EXPECT_GT(infeasible_count, 100);
}

TEST(ExactLPProperty, PositiveRowScalingPreservesOutcome) {
  Rng rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const int vars = uniform(rng, 1, 4), rows = uniform(rng, 1, 6);
    const auto sys = random_system(rng, vars, rows, 4);
    HomogeneousSystem scaled(vars);
    for (int r = 0; r < rows; ++r) {
      RationalVector row = sys.row(r);
      const Rational factor(uniform(rng, 1, 7), uniform(rng, 1, 5));
      for (auto& c : row) c *= factor;
      scaled.add_row(std::move(row), sys.label(r));
    }
    EXPECT_EQ(is_feasible(feasible_strict(sys)), is_feasible(feasible_strict(scaled)));
  }
}
