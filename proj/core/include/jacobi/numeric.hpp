#ifndef JACOBI_NUMERIC_HPP
#define JACOBI_NUMERIC_HPP

#include <algorithm>
#include <complex>
#include <cstdio>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace jacobi {

using Complex = std::complex<double>;
using Site = std::int64_t;
using Matrix2 = Eigen::Matrix2cd;

/// Malformed coefficients, fragmentations, grids or files.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation that cannot be trusted at the requested spectral point.
class NumericalFault : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// z^n by binary powering; exact for n = 0 and accurate to O(log|n|) ulps.
inline Complex power(Complex z, Site n) {
  Complex base = n < 0 ? 1.0 / z : z;
  auto e = static_cast<std::uint64_t>(n < 0 ? -n : n);
  Complex result{1.0, 0.0};
  while (e != 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return result;
}

/// Short decimal form of a real for diagnostics.
inline std::string to_text(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.6g", value);
  return buffer;
}

inline constexpr double kUnitRoundoff = 0x1p-53;

/// Residual normalized by the magnitude of the terms that produced it.
/// Quantities of order one are compared in absolute terms.
inline double scaled_residual(double difference, double scale) {
  return difference / std::max(1.0, scale);
}

/// Largest entrywise modulus.
inline double max_abs(const Matrix2& m) { return m.cwiseAbs().maxCoeff(); }

/// Largest entry of |a|*|b|, the rounding scale of the product a*b.
inline double product_scale(const Matrix2& a, const Matrix2& b) {
  return (a.cwiseAbs() * b.cwiseAbs()).maxCoeff();
}

/// Scaled max-entry distance between two matrices.
inline double matrix_residual(const Matrix2& lhs, const Matrix2& rhs, double scale) {
  double diff = (lhs - rhs).cwiseAbs().maxCoeff();
  return scaled_residual(diff, std::max({scale, max_abs(lhs), max_abs(rhs)}));
}

}  // namespace jacobi

#endif  // JACOBI_NUMERIC_HPP
