#ifndef JACOBI_JOST_HPP
#define JACOBI_JOST_HPP

#include <optional>
#include <span>
#include <vector>

#include "jacobi/lattice.hpp"
#include "jacobi/numeric.hpp"
#include "jacobi/spectral.hpp"

namespace jacobi {

enum class SolutionKind { left_jost, right_jost, left_conjugate, right_conjugate };

enum class Side { left, right };

/// Values of one solution of the Jacobi system on a contiguous index range.
/// For the conjugate kinds, z() is the argument the caller passed; the
/// stored values belong to the Jost solution at 1/z.
class LatticeSolution {
 public:
  LatticeSolution(SolutionKind kind, Complex z, Site lo, std::vector<Complex> values)
      : kind_(kind), z_(z), lo_(lo), values_(std::move(values)) {}

  SolutionKind kind() const { return kind_; }
  Complex z() const { return z_; }
  Site lo() const { return lo_; }
  Site hi() const { return lo_ + static_cast<Site>(values_.size()) - 1; }
  bool covers(Site n) const { return n >= lo() && n <= hi(); }

  /// Throws InputError outside [lo, hi].
  Complex operator()(Site n) const;

  std::span<const Complex> values() const { return values_; }

 private:
  SolutionKind kind_;
  Complex z_;
  Site lo_;
  std::vector<Complex> values_;
};

struct SolveOptions {
  /// Minimum chord distance from z = +-1.
  double exclusion_delta = kDefaultExclusion;
  /// Sites the returned solutions must cover in addition to the default
  /// range [n_min - 2, n_max + 2] of the stored window.
  std::optional<IndexWindow> cover;
};

/// Throws InputError if |z| != 1 and NumericalFault if z lies within
/// exclusion_delta of +-1.
void require_admissible(Complex z, double exclusion_delta);

/// a_inf (z + 1/z) + b_inf, the right-hand factor of the z-form equation
/// before the site weight w(n)/w_inf is applied.
inline Complex spectral_factor(const Limits& limits, Complex z) {
  return limits.a_inf * (z + 1.0 / z) + limits.b_inf;
}

/// Jost solution from the left: seeded with z^n on n_max, n_max + 1 where
/// the coefficients are already at their limits, then recursed downward.
LatticeSolution jost_left(const CoefficientSequence& seq, Complex z, const SolveOptions& options = {});

/// Jost solution from the right: seeded with z^-n on n_min - 2, n_min - 1,
/// then recursed upward.
LatticeSolution jost_right(const CoefficientSequence& seq, Complex z, const SolveOptions& options = {});

/// g_l(z, n) = f_l(1/z, n) or g_r(z, n) = f_r(1/z, n).
LatticeSolution conjugate_solution(const CoefficientSequence& seq, Complex z, Side side,
                                   const SolveOptions& options = {});

/// a(n+1) (phi(n) zeta(n+1) - phi(n+1) zeta(n)).
Complex wronskian(const CoefficientSequence& seq, const LatticeSolution& phi, const LatticeSolution& zeta,
                  Site n);

/// Largest change of the Wronskian across the common range of phi and zeta,
/// scaled by the magnitude of the products it is formed from (at least 1).
double wronskian_constancy_check(const CoefficientSequence& seq, const LatticeSolution& phi,
                                 const LatticeSolution& zeta);

/// Largest relative residual of the z-form equation at interior sites of sol.
double equation_residual(const CoefficientSequence& seq, const LatticeSolution& sol);

/// Largest scaled |f(1/z, n) - conj(f(z, n))| over f_l and f_r.
double conjugation_symmetry_check(const CoefficientSequence& seq, Complex z, const SolveOptions& options = {});

}  // namespace jacobi

#endif  // JACOBI_JOST_HPP
