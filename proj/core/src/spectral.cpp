#include "jacobi/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace jacobi {

namespace {

// Equispaced angles on [lo, hi]; a single point sits at the midpoint.
void fill_arc(std::vector<double>& out, std::size_t count, double lo, double hi) {
  if (count == 1) {
    out.push_back(0.5 * (lo + hi));
    return;
  }
  const double step = (hi - lo) / static_cast<double>(count - 1);
  for (std::size_t k = 0; k < count; ++k) out.push_back(lo + step * static_cast<double>(k));
}

}  // namespace

double lambda_from_z(const Limits& limits, Complex z) {
  if (std::abs(std::abs(z) - 1.0) > kCircleTolerance) {
    throw InputError("spectral parameter is off the unit circle (|z| = " + to_text(std::abs(z)) + ")");
  }
  const Complex value = (limits.a_inf * (z + 1.0 / z) + limits.b_inf) / limits.w_inf;
  if (std::abs(value.imag()) > kCircleTolerance * std::max(1.0, std::abs(value))) {
    throw NumericalFault("spectral map produced a non-real lambda");
  }
  return value.real();
}

BandEdges band_edges(const Limits& limits) {
  const double spread = 2.0 * std::abs(limits.a_inf);
  return {(-spread + limits.b_inf) / limits.w_inf, (spread + limits.b_inf) / limits.w_inf};
}

Complex z_from_lambda(const Limits& limits, double lambda) {
  const BandEdges edges = band_edges(limits);
  const double slack = 1e-12 * std::max({1.0, std::abs(edges.lambda_min), std::abs(edges.lambda_max)});
  if (lambda < edges.lambda_min - slack || lambda > edges.lambda_max + slack) {
    throw InputError("lambda = " + to_text(lambda) + " lies outside the band [" +
                     to_text(edges.lambda_min) + ", " + to_text(edges.lambda_max) + "]");
  }
  // z + 1/z = 2 cos(theta) on the circle.
  const double cosine = std::clamp((lambda * limits.w_inf - limits.b_inf) / (2.0 * limits.a_inf), -1.0, 1.0);
  const double theta = std::acos(cosine);
  return std::polar(1.0, limits.a_inf < 0.0 ? theta : -theta);
}

CircleGrid sample_circle(const Limits& limits, std::size_t count, double exclusion_delta) {
  if (count == 0) throw InputError("grid needs at least one point");
  if (!(exclusion_delta > 0.0) || !(exclusion_delta < 1.0)) {
    throw InputError("exclusion delta must lie in (0, 1); the requested exclusion leaves no usable grid");
  }
  // Angular half-width whose chord to +-1 equals exclusion_delta, nudged
  // outward so rounding never lands a point inside the excluded arc.
  const double guard = 2.0 * std::asin(0.5 * exclusion_delta) * (1.0 + 1e-12);
  const double lo = guard;
  const double hi = std::numbers::pi - guard;

  const std::size_t upper = (count + 1) / 2;
  const std::size_t lower = count / 2;
  std::vector<double> upper_angles;
  std::vector<double> lower_angles;
  fill_arc(upper_angles, upper, lo, hi);
  if (lower > 0) fill_arc(lower_angles, lower, lo, hi);

  CircleGrid grid;
  grid.exclusion_delta = exclusion_delta;
  grid.points.reserve(count);
  auto push = [&](double theta) {
    const Complex z = std::polar(1.0, theta);
    grid.points.push_back({z, theta, lambda_from_z(limits, z)});
  };
  for (auto it = lower_angles.rbegin(); it != lower_angles.rend(); ++it) push(-*it);
  for (double theta : upper_angles) push(theta);
  return grid;
}

}  // namespace jacobi
