#ifndef JACOBI_SCATTERING_HPP
#define JACOBI_SCATTERING_HPP

#include <vector>

#include "jacobi/jost.hpp"
#include "jacobi/lattice.hpp"
#include "jacobi/numeric.hpp"
#include "jacobi/spectral.hpp"

namespace jacobi {

/// Transmission T and right/left reflection R, L at one point of the circle.
struct ScatteringData {
  Complex z;
  Complex T;
  Complex R;
  Complex L;
};

/// Below this |1/z - z| the plane-wave tail system is treated as singular.
inline constexpr double kSingularTailThreshold = 1e-9;

/// Largest accepted scaled disagreement between the 1/T values read from
/// the f_l and f_r tails.
inline constexpr double kTailMismatchLimit = 1e-8;

/// Reads 1/T and L/T from the exact left tail of f_l, and 1/T and R/T from
/// the exact right tail of f_r; the two 1/T values are cross-checked and
/// averaged. Throws NumericalFault for a singular tail system or a mismatch.
ScatteringData extract_scattering(const CoefficientSequence& seq, Complex z, const SolveOptions& options = {});

/// |X(1/z) - X(z)*| for X = T, R, L.
struct SymmetryReport {
  double T = 0.0;
  double R = 0.0;
  double L = 0.0;
  double max() const;
};

SymmetryReport check_symmetries(const CoefficientSequence& seq, Complex z, const SolveOptions& options = {});

/// Scaled residuals of the scattering identities on the circle
/// (tilde denotes the value at 1/z):
///   left_unitarity      1/(T T~) - L L~/(T T~) - 1
///   right_unitarity     1/(T T~) - R R~/(T T~) - 1
///   left_reflection     R~/T~ + L/T
///   right_reflection    L~/T~ + R/T
///   transmission        T^2 - R L - T/T~
struct IdentityReport {
  double left_unitarity = 0.0;
  double right_unitarity = 0.0;
  double left_reflection = 0.0;
  double right_reflection = 0.0;
  double transmission = 0.0;
  double max() const;
};

/// Throws InputError unless inverse.z == 1/data.z.
IdentityReport check_identities(const ScatteringData& data, const ScatteringData& inverse);

/// max(||T|^2 + |R|^2 - 1|, ||T|^2 + |L|^2 - 1|).
double unitarity_defect(const ScatteringData& data);

/// Scattering data at every grid point, in grid order. A fault at one
/// point is rethrown with its theta attached.
std::vector<ScatteringData> scattering_sweep(const CoefficientSequence& seq, const CircleGrid& grid,
                                             const SolveOptions& options = {});

}  // namespace jacobi

#endif  // JACOBI_SCATTERING_HPP
