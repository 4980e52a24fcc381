#include "jacobi/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace jacobi {

namespace {

// Coefficients (A, B) of phi(n) = A z^n + B z^-n fitted through two
// consecutive sites; the system determinant is 1/z - z.
struct PlaneWave {
  Complex forward;
  Complex backward;
};

PlaneWave fit_plane_wave(Complex z, Site n, Complex at_n, Complex at_next) {
  const Complex det = 1.0 / z - z;
  if (std::abs(det) < kSingularTailThreshold) {
    throw NumericalFault("plane-wave tail system is singular (|1/z - z| = " + to_text(std::abs(det)) + ")");
  }
  const Complex forward = (at_n * power(z, -(n + 1)) - at_next * power(z, -n)) / det;
  const Complex backward = (power(z, n) * at_next - power(z, n + 1) * at_n) / det;
  return {forward, backward};
}

}  // namespace

ScatteringData extract_scattering(const CoefficientSequence& seq, Complex z, const SolveOptions& options) {
  const LatticeSolution left = jost_left(seq, z, options);
  const LatticeSolution right = jost_right(seq, z, options);

  // f_l = (1/T) z^n + (L/T) z^-n on n <= n_min - 1.
  const Site low = seq.window().n_min - 2;
  const PlaneWave left_tail = fit_plane_wave(z, low, left(low), left(low + 1));
  // f_r = (R/T) z^n + (1/T) z^-n on n >= n_max.
  const Site high = seq.window().n_max + 1;
  const PlaneWave right_tail = fit_plane_wave(z, high, right(high), right(high + 1));

  const Complex inv_t_left = left_tail.forward;
  const Complex inv_t_right = right_tail.backward;
  const double mismatch = scaled_residual(std::abs(inv_t_left - inv_t_right),
                                          std::abs(inv_t_left) + std::abs(inv_t_right));
  if (!(mismatch <= kTailMismatchLimit)) {
    throw NumericalFault("left and right tails disagree on 1/T (scaled mismatch " + to_text(mismatch) + ")");
  }
  const Complex inv_t = 0.5 * (inv_t_left + inv_t_right);
  if (inv_t == Complex{}) throw NumericalFault("1/T vanished");
  const Complex t = 1.0 / inv_t;
  return {z, t, right_tail.forward * t, left_tail.backward * t};
}

double SymmetryReport::max() const { return std::max({T, R, L}); }

SymmetryReport check_symmetries(const CoefficientSequence& seq, Complex z, const SolveOptions& options) {
  const ScatteringData at_z = extract_scattering(seq, z, options);
  const ScatteringData at_inverse = extract_scattering(seq, 1.0 / z, options);
  return {std::abs(at_inverse.T - std::conj(at_z.T)), std::abs(at_inverse.R - std::conj(at_z.R)),
          std::abs(at_inverse.L - std::conj(at_z.L))};
}

double IdentityReport::max() const {
  return std::max({left_unitarity, right_unitarity, left_reflection, right_reflection, transmission});
}

IdentityReport check_identities(const ScatteringData& data, const ScatteringData& inverse) {
  if (std::abs(inverse.z * data.z - 1.0) > 1e-12) {
    throw InputError("identity check needs scattering data at z and 1/z");
  }
  const Complex inv_tt = 1.0 / (data.T * inverse.T);
  auto sum_residual = [](Complex value, double scale) { return scaled_residual(std::abs(value), scale); };

  IdentityReport report;
  const Complex ll = data.L * inverse.L * inv_tt;
  report.left_unitarity = sum_residual(inv_tt - ll - 1.0, std::abs(inv_tt) + std::abs(ll));
  const Complex rr = data.R * inverse.R * inv_tt;
  report.right_unitarity = sum_residual(inv_tt - rr - 1.0, std::abs(inv_tt) + std::abs(rr));

  const Complex r_inv = inverse.R / inverse.T;
  const Complex l_inv = inverse.L / inverse.T;
  const Complex r_over_t = data.R / data.T;
  const Complex l_over_t = data.L / data.T;
  report.left_reflection = sum_residual(r_inv + l_over_t, std::abs(r_inv) + std::abs(l_over_t));
  report.right_reflection = sum_residual(l_inv + r_over_t, std::abs(l_inv) + std::abs(r_over_t));

  const Complex tt = data.T * data.T;
  const Complex rl = data.R * data.L;
  const Complex ratio = data.T / inverse.T;
  report.transmission = sum_residual(tt - rl - ratio, std::abs(tt) + std::abs(rl) + std::abs(ratio));
  return report;
}

double unitarity_defect(const ScatteringData& data) {
  const double t2 = std::norm(data.T);
  return std::max(std::abs(t2 + std::norm(data.R) - 1.0), std::abs(t2 + std::norm(data.L) - 1.0));
}

std::vector<ScatteringData> scattering_sweep(const CoefficientSequence& seq, const CircleGrid& grid,
                                             const SolveOptions& options) {
  std::vector<ScatteringData> out;
  out.reserve(grid.points.size());
  for (const SpectralPoint& point : grid.points) {
    try {
      out.push_back(extract_scattering(seq, point.z, options));
    } catch (const NumericalFault& fault) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "theta = " << point.theta << ": " << fault.what();
      throw NumericalFault(msg.str());
    }
  }
  return out;
}

}  // namespace jacobi
