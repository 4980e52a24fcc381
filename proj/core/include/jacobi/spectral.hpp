#ifndef JACOBI_SPECTRAL_HPP
#define JACOBI_SPECTRAL_HPP

#include <cstddef>
#include <vector>

#include "jacobi/lattice.hpp"
#include "jacobi/numeric.hpp"

namespace jacobi {

inline constexpr double kCircleTolerance = 1e-12;

/// Default distance kept between sampled points and the degenerate points z = +-1.
inline constexpr double kDefaultExclusion = 1e-3;

/// A point z = exp(i theta) on the unit circle and its spectral value lambda.
struct SpectralPoint {
  Complex z;
  double theta = 0.0;
  double lambda = 0.0;
};

/// Endpoints of the continuous spectrum.
struct BandEdges {
  double lambda_min = 0.0;
  double lambda_max = 0.0;
};

struct CircleGrid {
  std::vector<SpectralPoint> points;
  double exclusion_delta = kDefaultExclusion;
};

/// lambda = (a_inf (z + 1/z) + b_inf) / w_inf for |z| = 1.
/// Throws InputError when z is off the circle.
double lambda_from_z(const Limits& limits, Complex z);

BandEdges band_edges(const Limits& limits);

/// Inverse of lambda_from_z on the band. The root lies on the closed upper
/// half circle when a_inf < 0 and on the closed lower half circle when
/// a_inf > 0. Throws InputError for lambda outside [lambda_min, lambda_max].
Complex z_from_lambda(const Limits& limits, double lambda);

/// `count` points on the circle, split between the upper and lower halves,
/// equispaced in theta on each half and keeping chord distance at least
/// exclusion_delta from z = +-1. Points are ordered by increasing theta.
CircleGrid sample_circle(const Limits& limits, std::size_t count, double exclusion_delta = kDefaultExclusion);

/// min(|z - 1|, |z + 1|).
inline double distance_to_edges(Complex z) { return std::min(std::abs(z - 1.0), std::abs(z + 1.0)); }

}  // namespace jacobi

#endif  // JACOBI_SPECTRAL_HPP
