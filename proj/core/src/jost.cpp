#include "jacobi/jost.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace jacobi {

namespace {

IndexWindow solution_range(const CoefficientSequence& seq, const SolveOptions& options) {
  IndexWindow range{seq.window().n_min - 2, seq.window().n_max + 2};
  if (options.cover) {
    range.n_min = std::min(range.n_min, options.cover->n_min);
    range.n_max = std::max(range.n_max, options.cover->n_max);
  }
  return range;
}

LatticeSolution recurse_left(const CoefficientSequence& seq, Complex z, SolutionKind kind, Complex label,
                             const IndexWindow& range) {
  const Complex factor = spectral_factor(seq.limits(), z);
  const double w_inf = seq.limits().w_inf;
  const Site top = seq.window().n_max;
  std::vector<Complex> values(range.size());
  auto slot = [&](Site n) -> Complex& { return values[static_cast<std::size_t>(n - range.n_min)]; };

  for (Site n = top; n <= range.n_max; ++n) slot(n) = power(z, n);
  for (Site n = top; n > range.n_min; --n) {
    const Coefficients c = seq.at(n);
    const Complex rhs = (c.w / w_inf) * factor * slot(n);
    slot(n - 1) = (rhs - seq.a(n + 1) * slot(n + 1) - c.b * slot(n)) / c.a;
  }
  return {kind, label, range.n_min, std::move(values)};
}

LatticeSolution recurse_right(const CoefficientSequence& seq, Complex z, SolutionKind kind, Complex label,
                              const IndexWindow& range) {
  const Complex factor = spectral_factor(seq.limits(), z);
  const double w_inf = seq.limits().w_inf;
  const Site bottom = seq.window().n_min - 1;
  std::vector<Complex> values(range.size());
  auto slot = [&](Site n) -> Complex& { return values[static_cast<std::size_t>(n - range.n_min)]; };

  for (Site n = range.n_min; n <= bottom; ++n) slot(n) = power(z, -n);
  for (Site n = bottom; n < range.n_max; ++n) {
    const Coefficients c = seq.at(n);
    const Complex rhs = (c.w / w_inf) * factor * slot(n);
    slot(n + 1) = (rhs - c.b * slot(n) - c.a * slot(n - 1)) / seq.a(n + 1);
  }
  return {kind, label, range.n_min, std::move(values)};
}

}  // namespace

Complex LatticeSolution::operator()(Site n) const {
  if (!covers(n)) {
    throw InputError("site " + std::to_string(n) + " outside solution range [" + std::to_string(lo()) + ", " +
                     std::to_string(hi()) + "]");
  }
  return values_[static_cast<std::size_t>(n - lo_)];
}

void require_admissible(Complex z, double exclusion_delta) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) ||
      std::abs(std::abs(z) - 1.0) > kCircleTolerance) {
    throw InputError("spectral parameter must lie on the unit circle");
  }
  // Grid points sit exactly on the exclusion boundary; allow for rounding.
  if (distance_to_edges(z) < exclusion_delta * (1.0 - 1e-9)) {
    throw NumericalFault("spectral parameter within " + to_text(exclusion_delta) + " of z = +-1");
  }
}

LatticeSolution jost_left(const CoefficientSequence& seq, Complex z, const SolveOptions& options) {
  require_admissible(z, options.exclusion_delta);
  return recurse_left(seq, z, SolutionKind::left_jost, z, solution_range(seq, options));
}

LatticeSolution jost_right(const CoefficientSequence& seq, Complex z, const SolveOptions& options) {
  require_admissible(z, options.exclusion_delta);
  return recurse_right(seq, z, SolutionKind::right_jost, z, solution_range(seq, options));
}

LatticeSolution conjugate_solution(const CoefficientSequence& seq, Complex z, Side side,
                                   const SolveOptions& options) {
  require_admissible(z, options.exclusion_delta);
  const Complex inverse = 1.0 / z;
  const IndexWindow range = solution_range(seq, options);
  return side == Side::left ? recurse_left(seq, inverse, SolutionKind::left_conjugate, z, range)
                            : recurse_right(seq, inverse, SolutionKind::right_conjugate, z, range);
}

Complex wronskian(const CoefficientSequence& seq, const LatticeSolution& phi, const LatticeSolution& zeta,
                  Site n) {
  return seq.a(n + 1) * (phi(n) * zeta(n + 1) - phi(n + 1) * zeta(n));
}

double wronskian_constancy_check(const CoefficientSequence& seq, const LatticeSolution& phi,
                                 const LatticeSolution& zeta) {
  const Site lo = std::max(phi.lo(), zeta.lo());
  const Site hi = std::min(phi.hi(), zeta.hi());
  if (hi - lo + 1 < 3) throw InputError("solutions overlap on fewer than 3 sites");

  const Complex reference = wronskian(seq, phi, zeta, lo);
  double deviation = 0.0;
  double scale = 0.0;
  for (Site n = lo; n < hi; ++n) {
    deviation = std::max(deviation, std::abs(wronskian(seq, phi, zeta, n) - reference));
    scale = std::max(scale, std::abs(seq.a(n + 1)) *
                                (std::abs(phi(n) * zeta(n + 1)) + std::abs(phi(n + 1) * zeta(n))));
  }
  return scaled_residual(deviation, scale);
}

double equation_residual(const CoefficientSequence& seq, const LatticeSolution& sol) {
  const bool conjugate = sol.kind() == SolutionKind::left_conjugate || sol.kind() == SolutionKind::right_conjugate;
  const Complex factor = spectral_factor(seq.limits(), conjugate ? 1.0 / sol.z() : sol.z());
  const double w_inf = seq.limits().w_inf;
  double worst = 0.0;
  for (Site n = sol.lo() + 1; n < sol.hi(); ++n) {
    const Coefficients c = seq.at(n);
    const Complex up = seq.a(n + 1) * sol(n + 1);
    const Complex mid = c.b * sol(n);
    const Complex down = c.a * sol(n - 1);
    const Complex rhs = (c.w / w_inf) * factor * sol(n);
    const double size = std::abs(up) + std::abs(mid) + std::abs(down) + std::abs(rhs);
    const double residual = std::abs(up + mid + down - rhs);
    worst = std::max(worst, residual / std::max(size, std::numeric_limits<double>::min()));
  }
  return worst;
}

double conjugation_symmetry_check(const CoefficientSequence& seq, Complex z, const SolveOptions& options) {
  double worst = 0.0;
  auto compare = [&](const LatticeSolution& at_inverse, const LatticeSolution& at_z) {
    for (Site n = at_z.lo(); n <= at_z.hi(); ++n) {
      const double diff = std::abs(at_inverse(n) - std::conj(at_z(n)));
      worst = std::max(worst, scaled_residual(diff, std::abs(at_z(n))));
    }
  };
  compare(conjugate_solution(seq, z, Side::left, options), jost_left(seq, z, options));
  compare(conjugate_solution(seq, z, Side::right, options), jost_right(seq, z, options));
  return worst;
}

}  // namespace jacobi
