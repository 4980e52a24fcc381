#include "jacobi/oracle.hpp"

#include <cmath>
#include <string>

#include <Eigen/LU>

#include "jacobi/jost.hpp"

namespace jacobi {

namespace {

// Columns are the states (phi(n), phi(n-1)) of z^n and z^-n.
Matrix2 amplitude_basis(Complex z, Site n) {
  Matrix2 basis;
  basis << power(z, n), power(z, -n), power(z, n - 1), power(z, -(n - 1));
  return basis;
}

}  // namespace

StepMatrix step_matrix(const CoefficientSequence& seq, Complex z, Site n) {
  const Limits& lim = seq.limits();
  const Complex lambda_w = (seq.w(n) / lim.w_inf) * (lim.a_inf * (z + 1.0 / z) + lim.b_inf);
  const double next = seq.a(n + 1);
  Matrix2 m;
  m << (lambda_w - seq.b(n)) / next, -seq.a(n) / next, 1.0, 0.0;
  return {m, n};
}

ScatteringData transfer_matrix_scattering(const CoefficientSequence& seq, Complex z, double exclusion_delta) {
  require_admissible(z, exclusion_delta);
  if (std::abs(z - 1.0 / z) < kSingularTailThreshold) {
    throw NumericalFault("plane-wave basis change is singular near z = +-1");
  }
  const Site first = seq.window().n_min - 1;
  const Site last = seq.window().n_max + 1;

  // Carries (phi(first), phi(first-1)) to (phi(last+1), phi(last)).
  Matrix2 product = Matrix2::Identity();
  for (Site n = first; n <= last; ++n) product = step_matrix(seq, z, n).entries * product;

  // Amplitudes on the right as a linear map of amplitudes on the left.
  const Matrix2 amplitudes = amplitude_basis(z, last + 1).inverse() * product * amplitude_basis(z, first);
  const Complex inv_t = amplitudes(1, 1);
  if (inv_t == Complex{}) throw NumericalFault("transfer product has vanishing 1/T");
  return {z, 1.0 / inv_t, amplitudes(0, 1) / inv_t, -amplitudes(1, 0) / inv_t};
}

ScatteringData wronskian_scattering(const CoefficientSequence& seq, Complex z, double exclusion_delta) {
  SolveOptions options;
  options.exclusion_delta = exclusion_delta;
  const LatticeSolution f_l = jost_left(seq, z, options);
  const LatticeSolution f_r = jost_right(seq, z, options);
  const LatticeSolution g_l = conjugate_solution(seq, z, Side::left, options);
  const LatticeSolution g_r = conjugate_solution(seq, z, Side::right, options);

  const Site n = seq.window().n_min;
  const Complex free_value = seq.limits().a_inf * (1.0 / z - z);
  if (std::abs(free_value) < kSingularTailThreshold) {
    throw NumericalFault("free Wronskian vanishes near z = +-1");
  }
  const Complex jost = wronskian(seq, f_l, f_r, n);
  if (jost == Complex{}) throw NumericalFault("[f_l; f_r] vanished on the unit circle");

  const Complex t = free_value / jost;
  const Complex l_over_t = -wronskian(seq, f_l, g_r, n) / free_value;
  const Complex r_over_t = wronskian(seq, f_r, g_l, n) / free_value;
  return {z, t, r_over_t * t, l_over_t * t};
}

}  // namespace jacobi
