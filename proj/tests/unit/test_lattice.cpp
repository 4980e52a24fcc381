#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "jacobi/lattice.hpp"

namespace jacobi {
namespace {

using testing::free_fixture;
using testing::q1_fixture;
using testing::two_impurity_fixture;

TEST(ValidateSequence, AcceptsSingleImpurity) {
  const CoefficientSequence seq = q1_fixture();
  EXPECT_EQ(seq.window(), (IndexWindow{0, 0}));
  EXPECT_EQ(seq.at(0), (Coefficients{1.0, 0.5, 1.0}));
}

TEST(ValidateSequence, RejectsNonpositiveWeight) {
  EXPECT_THROW(validate_sequence({{1, 0, 1}, {0, 0}, {1.0}, {0.0}, {-1.0}}), InputError);
  EXPECT_THROW(validate_sequence({{1, 0, 1}, {0, 0}, {1.0}, {0.0}, {0.0}}), InputError);
}

TEST(ValidateSequence, RejectsZeroHopping) {
  EXPECT_THROW(validate_sequence({{1, 0, 1}, {0, 1}, {1.0, 0.0}, {0.0, 0.0}, {1.0, 1.0}}), InputError);
}

TEST(ValidateSequence, RejectsBadLimits) {
  EXPECT_THROW(validate_sequence({{0, 0, 1}, {0, 0}, {1.0}, {0.0}, {1.0}}), InputError);
  EXPECT_THROW(validate_sequence({{1, 0, 0}, {0, 0}, {1.0}, {0.0}, {1.0}}), InputError);
  EXPECT_THROW(validate_sequence({{1, 0, -2}, {0, 0}, {1.0}, {0.0}, {1.0}}), InputError);
}

TEST(ValidateSequence, RejectsLengthMismatch) {
  EXPECT_THROW(validate_sequence({{1, 0, 1}, {0, 1}, {1.0}, {0.0, 0.0}, {1.0, 1.0}}), InputError);
  EXPECT_THROW(validate_sequence({{1, 0, 1}, {2, 1}, {}, {}, {}}), InputError);
}

TEST(ValidateSequence, RejectsOversizedWindow) {
  const std::size_t sites = 11;
  RawCoefficients raw{{1, 0, 1}, {0, 10}, std::vector<double>(sites, 1.0), std::vector<double>(sites, 0.0),
                      std::vector<double>(sites, 1.0)};
  EXPECT_THROW(validate_sequence(raw, 10), InputError);
  EXPECT_NO_THROW(validate_sequence(raw, 11));
}

TEST(ValidateSequence, AcceptsNegativeHoppingLimit) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.2, 1.5);
  RawCoefficients raw{{-1, 0, 1}, {-2, 2}, {}, {}, {}};
  for (int k = 0; k < 5; ++k) {
    raw.a.push_back(k % 2 == 0 ? -u(rng) : u(rng));
    raw.b.push_back(u(rng) - 0.75);
    raw.w.push_back(u(rng));
  }
  const CoefficientSequence seq = validate_sequence(raw);
  EXPECT_EQ(seq.window().size(), 5u);
  EXPECT_FALSE(nonpositive_a_sites(seq).empty());
}

TEST(ValidateSequence, KeepsEdgeValuesEqualToLimits) {
  const CoefficientSequence seq = validate_sequence({{1, 0, 1}, {-1, 1}, {1, 1, 1}, {0, 0.2, 0}, {1, 1, 1}});
  EXPECT_EQ(seq.window(), (IndexWindow{-1, 1}));
}

TEST(CoefficientAt, StoredAndLimitValues) {
  const CoefficientSequence seq = q1_fixture();
  EXPECT_EQ(coefficient_at(seq, 0), (Coefficients{1.0, 0.5, 1.0}));
  EXPECT_EQ(coefficient_at(seq, 7), (Coefficients{1.0, 0.0, 1.0}));

  const CoefficientSequence other = free_sequence({-1, 2, 3});
  EXPECT_EQ(coefficient_at(other, -1000000), (Coefficients{-1.0, 2.0, 3.0}));
}

TEST(CoefficientAt, AgreesWithStoredArrays) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const CoefficientSequence seq = testing::random_fixture(rng);
    const IndexWindow& w = seq.window();
    for (Site n = w.n_min - 5; n <= w.n_max + 5; ++n) {
      const Coefficients c = coefficient_at(seq, n);
      if (w.contains(n)) {
        const auto k = static_cast<std::size_t>(n - w.n_min);
        EXPECT_EQ(c, (Coefficients{seq.a_values()[k], seq.b_values()[k], seq.w_values()[k]}));
      } else {
        EXPECT_EQ(c, (Coefficients{seq.limits().a_inf, seq.limits().b_inf, seq.limits().w_inf}));
      }
    }
  }
}

TEST(Fragmentation, RequiresStrictlyIncreasingBreakpoints) {
  EXPECT_THROW(Fragmentation({}), InputError);
  EXPECT_THROW(Fragmentation({3, 3}), InputError);
  EXPECT_THROW(Fragmentation({4, 1}), InputError);
  EXPECT_EQ(Fragmentation({-2, 5, 9}).fragment_count(), 4u);
}

TEST(Fragment, FreeSequenceSplitsIntoFreePieces) {
  const auto pieces = fragment(free_fixture(), Fragmentation({0}));
  ASSERT_EQ(pieces.size(), 2u);
  EXPECT_EQ(pieces[0].at(0), (Coefficients{1.0, 0.0, 1.0}));
  EXPECT_TRUE(effective_support(pieces[0]).free);
  EXPECT_TRUE(effective_support(pieces[1]).free);
}

TEST(Fragment, BreakpointSiteBelongsToLeftFragment) {
  const auto pieces = fragment(q1_fixture(), Fragmentation({0}));
  ASSERT_EQ(pieces.size(), 2u);
  EXPECT_EQ(pieces[0].b(0), 0.5);
  EXPECT_TRUE(effective_support(pieces[1]).free);
}

TEST(Fragment, TwoImpuritiesSeparate) {
  const auto pieces = fragment(two_impurity_fixture(), Fragmentation({0}));
  ASSERT_EQ(pieces.size(), 2u);
  EXPECT_EQ(pieces[0].b(-1), 0.3);
  EXPECT_EQ(pieces[0].b(1), 0.0);
  EXPECT_EQ(pieces[1].b(-1), 0.0);
  EXPECT_EQ(pieces[1].b(1), -0.4);
  EXPECT_EQ(effective_support(pieces[0]).window, (IndexWindow{-1, -1}));
  EXPECT_EQ(effective_support(pieces[1]).window, (IndexWindow{1, 1}));
}

TEST(Fragment, BreakpointsOutsideWindow) {
  const CoefficientSequence seq = two_impurity_fixture();
  const auto pieces = fragment(seq, Fragmentation({-10, 10}));
  ASSERT_EQ(pieces.size(), 3u);
  EXPECT_TRUE(effective_support(pieces[0]).free);
  EXPECT_EQ(effective_support(pieces[1]).window, (IndexWindow{-1, 1}));
  EXPECT_TRUE(effective_support(pieces[2]).free);
}

// Every perturbed value lands in exactly one fragment; the others hold the limit.
TEST(Fragment, IsAPartition) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    const CoefficientSequence seq = testing::random_fixture(rng);
    const std::size_t count = 2 + trial % 4;
    const Fragmentation frag = testing::random_fragmentation(rng, seq, count);
    const auto pieces = fragment(seq, frag);
    ASSERT_EQ(pieces.size(), count);
    const Limits& lim = seq.limits();
    for (Site n = seq.window().n_min - 2; n <= seq.window().n_max + 2; ++n) {
      const Coefficients original = seq.at(n);
      int a_hits = 0, b_hits = 0, w_hits = 0;
      int a_limits = 0, b_limits = 0, w_limits = 0;
      for (const auto& piece : pieces) {
        const Coefficients c = piece.at(n);
        a_hits += c.a == original.a;
        b_hits += c.b == original.b;
        w_hits += c.w == original.w;
        a_limits += c.a == lim.a_inf;
        b_limits += c.b == lim.b_inf;
        w_limits += c.w == lim.w_inf;
      }
      const int others = static_cast<int>(count) - 1;
      if (original.a != lim.a_inf) EXPECT_TRUE(a_hits == 1 && a_limits == others);
      if (original.b != lim.b_inf) EXPECT_TRUE(b_hits == 1 && b_limits == others);
      if (original.w != lim.w_inf) EXPECT_TRUE(w_hits == 1 && w_limits == others);
    }
  }
}

TEST(Fragment, NestedSplitMatchesDirectSplit) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const CoefficientSequence seq = testing::random_fixture(rng);
    const Fragmentation pair = testing::random_fragmentation(rng, seq, 3);
    const Site m = pair.breakpoints()[0];
    const Site m2 = pair.breakpoints()[1];

    const auto outer = fragment(seq, Fragmentation({m}));
    const auto inner = fragment(outer[1], Fragmentation({m2}));
    const auto direct = fragment(seq, pair);
    for (Site n = seq.window().n_min - 4; n <= seq.window().n_max + 4; ++n) {
      EXPECT_EQ(outer[0].at(n), direct[0].at(n));
      EXPECT_EQ(inner[0].at(n), direct[1].at(n));
      EXPECT_EQ(inner[1].at(n), direct[2].at(n));
    }
  }
}

TEST(EffectiveSupport, Examples) {
  EXPECT_EQ(effective_support(q1_fixture()).window, (IndexWindow{0, 0}));
  EXPECT_FALSE(effective_support(q1_fixture()).free);

  const Support free = effective_support(free_fixture());
  EXPECT_TRUE(free.free);
  EXPECT_EQ(free.window, (IndexWindow{0, 0}));

  RawCoefficients raw{{1, 0, 1}, {-3, 5}, std::vector<double>(9, 1.0), std::vector<double>(9, 0.0),
                      std::vector<double>(9, 1.0)};
  raw.b[5] = 0.7;  // site 2
  EXPECT_EQ(effective_support(validate_sequence(raw)).window, (IndexWindow{2, 2}));
}

TEST(NonpositiveSites, ListsSitesWithNonpositiveHopping) {
  const CoefficientSequence seq = validate_sequence({{1, 0, 1}, {4, 6}, {1.0, -0.5, 2.0}, {0, 0, 0}, {1, 1, 1}});
  EXPECT_EQ(nonpositive_a_sites(seq), (std::vector<Site>{5}));
  EXPECT_TRUE(nonpositive_a_sites(q1_fixture()).empty());
}

TEST(Tabulate, CoversArbitraryWindow) {
  const RawCoefficients raw = tabulate(q1_fixture(), {-2, 2});
  EXPECT_EQ(raw.b, (std::vector<double>{0, 0, 0.5, 0, 0}));
  EXPECT_EQ(validate_sequence(raw).at(0), q1_fixture().at(0));
}

}  // namespace
}  // namespace jacobi
