#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "jacobi/spectral.hpp"

namespace jacobi {
namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

TEST(LambdaFromZ, Examples) {
  EXPECT_NEAR(lambda_from_z({-1, 0, 1}, 1.0), -2.0, 1e-15);
  EXPECT_NEAR(lambda_from_z({-1, 0, 1}, 1.0), band_edges({-1, 0, 1}).lambda_min, 1e-15);
  EXPECT_NEAR(lambda_from_z({1, 0, 1}, kI), 0.0, 1e-15);
  EXPECT_NEAR(lambda_from_z({2, 1, 2}, -1.0), -1.5, 1e-15);
}

TEST(LambdaFromZ, RejectsOffCircle) {
  EXPECT_THROW(lambda_from_z({1, 0, 1}, Complex{0.5, 0.0}), InputError);
  EXPECT_THROW(lambda_from_z({1, 0, 1}, Complex{0.0, 1.0 + 1e-9}), InputError);
}

TEST(BandEdges, Examples) {
  const BandEdges unit = band_edges({1, 0, 1});
  EXPECT_DOUBLE_EQ(unit.lambda_min, -2.0);
  EXPECT_DOUBLE_EQ(unit.lambda_max, 2.0);
  const BandEdges shifted = band_edges({2, 1, 2});
  EXPECT_DOUBLE_EQ(shifted.lambda_min, -1.5);
  EXPECT_DOUBLE_EQ(shifted.lambda_max, 2.5);
  const BandEdges negative = band_edges({-3, 0, 1});
  EXPECT_DOUBLE_EQ(negative.lambda_min, -6.0);
  EXPECT_DOUBLE_EQ(negative.lambda_max, 6.0);
}

TEST(ZFromLambda, Examples) {
  EXPECT_LT(std::abs(z_from_lambda({-1, 0, 1}, -2.0) - 1.0), 1e-12);
  EXPECT_LT(std::abs(z_from_lambda({1, 0, 1}, 0.0) + kI), 1e-12);
  EXPECT_LT(std::abs(z_from_lambda({-1, 0, 1}, 0.0) - kI), 1e-12);
}

TEST(ZFromLambda, RejectsOutsideBand) {
  EXPECT_THROW(z_from_lambda({1, 0, 1}, 2.5), InputError);
  EXPECT_THROW(z_from_lambda({1, 0, 1}, -2.0001), InputError);
}

// a_inf < 0: lambda_min -> 1, lambda_max -> -1; a_inf > 0: the reverse.
TEST(ZFromLambda, BandEdgesFollowHoppingSign) {
  const Limits negative{-1.5, 0.3, 2.0};
  const BandEdges ne = band_edges(negative);
  EXPECT_LT(std::abs(z_from_lambda(negative, ne.lambda_min) - 1.0), 1e-12);
  EXPECT_LT(std::abs(z_from_lambda(negative, ne.lambda_max) + 1.0), 1e-12);

  const Limits positive{1.5, 0.3, 2.0};
  const BandEdges pe = band_edges(positive);
  EXPECT_LT(std::abs(z_from_lambda(positive, pe.lambda_min) + 1.0), 1e-12);
  EXPECT_LT(std::abs(z_from_lambda(positive, pe.lambda_max) - 1.0), 1e-12);
}

TEST(ZFromLambda, RoundTripOnDesignatedHalf) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> angle(1e-3, kPi - 1e-3);
  std::uniform_real_distribution<double> value(0.3, 3.0);
  for (int trial = 0; trial < 500; ++trial) {
    const double sign = trial % 2 == 0 ? 1.0 : -1.0;
    const Limits limits{sign * value(rng), value(rng) - 1.5, value(rng)};
    // Upper half for a_inf < 0, lower half for a_inf > 0.
    const double theta = limits.a_inf < 0 ? angle(rng) : -angle(rng);
    const Complex z = std::polar(1.0, theta);
    EXPECT_LT(std::abs(z_from_lambda(limits, lambda_from_z(limits, z)) - z), 1e-10);
  }
}

TEST(SampleCircle, SmallGridAvoidsEdges) {
  const CircleGrid grid = sample_circle({1, 0, 1}, 4, 0.1);
  ASSERT_EQ(grid.points.size(), 4u);
  for (const SpectralPoint& p : grid.points) {
    EXPECT_GE(distance_to_edges(p.z), 0.1);
    EXPECT_NEAR(std::abs(p.z), 1.0, 1e-15);
  }
}

TEST(SampleCircle, RejectsDegenerateRequests) {
  EXPECT_THROW(sample_circle({1, 0, 1}, 1, 0.99 * kPi), InputError);
  EXPECT_THROW(sample_circle({1, 0, 1}, 0, 0.1), InputError);
  EXPECT_THROW(sample_circle({1, 0, 1}, 4, 0.0), InputError);
}

TEST(SampleCircle, LargeGridIsConjugationSymmetric) {
  const Limits limits{1.2, -0.4, 0.8};
  const CircleGrid grid = sample_circle(limits, 512, 1e-3);
  ASSERT_EQ(grid.points.size(), 512u);
  const BandEdges edges = band_edges(limits);
  for (std::size_t k = 0; k < grid.points.size(); ++k) {
    const SpectralPoint& p = grid.points[k];
    EXPECT_GE(distance_to_edges(p.z), 1e-3);
    EXPECT_GE(p.lambda, edges.lambda_min - 1e-12);
    EXPECT_LE(p.lambda, edges.lambda_max + 1e-12);
    const SpectralPoint& mirror = grid.points[grid.points.size() - 1 - k];
    EXPECT_LT(std::abs(mirror.z - std::conj(p.z)), 1e-14);
    if (k > 0) EXPECT_GT(p.theta, grid.points[k - 1].theta);
  }
}

TEST(SampleCircle, SinglePointAndDeterminism) {
  const CircleGrid one = sample_circle({1, 0, 1}, 1, 1e-3);
  ASSERT_EQ(one.points.size(), 1u);
  EXPECT_NEAR(one.points[0].theta, kPi / 2, 1e-15);

  const CircleGrid a = sample_circle({1, 0, 1}, 33, 0.05);
  const CircleGrid b = sample_circle({1, 0, 1}, 33, 0.05);
  for (std::size_t k = 0; k < a.points.size(); ++k) EXPECT_EQ(a.points[k].theta, b.points[k].theta);
}

}  // namespace
}  // namespace jacobi
