#ifndef JACOBI_ORACLE_HPP
#define JACOBI_ORACLE_HPP

#include "jacobi/lattice.hpp"
#include "jacobi/numeric.hpp"
#include "jacobi/scattering.hpp"

namespace jacobi {

/// One-site propagator of the Jacobi system:
/// (phi(n+1), phi(n)) = entries * (phi(n), phi(n-1)).
struct StepMatrix {
  Matrix2 entries;
  Site site = 0;
};

StepMatrix step_matrix(const CoefficientSequence& seq, Complex z, Site n);

/// Scattering data from the product of step matrices across the support,
/// converted to plane-wave amplitudes at both ends. Independent of the Jost
/// recursion.
ScatteringData transfer_matrix_scattering(const CoefficientSequence& seq, Complex z,
                                          double exclusion_delta = kDefaultExclusion);

/// Scattering data from Wronskians of the Jost solutions:
///   T   = a_inf (1/z - z) / [f_l; f_r]
///   L/T = [f_l; g_r] / (a_inf (z - 1/z))
///   R/T = [f_r; g_l] / (a_inf (1/z - z))
ScatteringData wronskian_scattering(const CoefficientSequence& seq, Complex z,
                                    double exclusion_delta = kDefaultExclusion);

}  // namespace jacobi

#endif  // JACOBI_ORACLE_HPP
