#ifndef JACOBI_TESTS_FIXTURES_HPP
#define JACOBI_TESTS_FIXTURES_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "jacobi/lattice.hpp"

namespace jacobi::testing {

inline constexpr Limits kUnitLimits{1.0, 0.0, 1.0};

// No perturbation: the single stored site carries the limits.
inline CoefficientSequence free_fixture() {
  return validate_sequence({kUnitLimits, {0, 0}, {1.0}, {0.0}, {1.0}});
}

// Single impurity b(0) = 0.5.
inline CoefficientSequence q1_fixture() {
  return validate_sequence({kUnitLimits, {0, 0}, {1.0}, {0.5}, {1.0}});
}

// b(-1) = 0.3, b(1) = -0.4.
inline CoefficientSequence two_impurity_fixture() {
  return validate_sequence({kUnitLimits, {-1, 1}, {1.0, 1.0, 1.0}, {0.3, 0.0, -0.4}, {1.0, 1.0, 1.0}});
}

// Bond a(1) = 2 against a_inf = 1, plus a site potential on each side of
// the breakpoint 0 so both fragments scatter.
inline CoefficientSequence strong_bond_fixture() {
  return validate_sequence({kUnitLimits, {-1, 2}, {1.0, 0.7, 2.0, 1.3}, {0.2, -0.5, 0.4, 0.1}, {1.0, 1.5, 0.8, 1.2}});
}

struct RandomFixtureOptions {
  std::size_t max_support = 40;
  double max_deviation = 2.0;
};

// Random finite-support fixture with positive a(n) and w(n). Each
// coefficient stays within max_deviation of its limit; a and w also keep
// at least 20% of their limit so the class invariants hold.
inline CoefficientSequence random_fixture(std::mt19937_64& rng, const RandomFixtureOptions& options = {}) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * unit(rng); };

  Limits limits{uniform(0.5, 2.0), uniform(-1.0, 1.0), uniform(0.5, 2.0)};
  std::uniform_int_distribution<std::size_t> length(1, options.max_support);
  std::uniform_int_distribution<Site> start(-20, 5);
  const std::size_t sites = length(rng);
  const Site n_min = start(rng);

  const double da = std::min(options.max_deviation, 0.8 * limits.a_inf);
  const double dw = std::min(options.max_deviation, 0.8 * limits.w_inf);
  const double db = options.max_deviation;
  RawCoefficients raw{limits, {n_min, n_min + static_cast<Site>(sites) - 1}, {}, {}, {}};
  for (std::size_t k = 0; k < sites; ++k) {
    raw.a.push_back(limits.a_inf + uniform(-da, da));
    raw.b.push_back(limits.b_inf + uniform(-db, db));
    raw.w.push_back(limits.w_inf + uniform(-dw, dw));
  }
  return validate_sequence(std::move(raw));
}

// Strictly increasing breakpoints drawn around the stored window.
inline Fragmentation random_fragmentation(std::mt19937_64& rng, const CoefficientSequence& seq,
                                          std::size_t fragments) {
  std::uniform_int_distribution<Site> site(seq.window().n_min - 3, seq.window().n_max + 3);
  std::vector<Site> cuts;
  while (cuts.size() + 1 < fragments) {
    const Site candidate = site(rng);
    if (std::find(cuts.begin(), cuts.end(), candidate) == cuts.end()) cuts.push_back(candidate);
  }
  std::sort(cuts.begin(), cuts.end());
  return Fragmentation(std::move(cuts));
}

}  // namespace jacobi::testing

#endif  // JACOBI_TESTS_FIXTURES_HPP
