#include "jacobi/transition.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

namespace jacobi {

namespace {

Matrix2 make_matrix(Complex m11, Complex m12, Complex m21, Complex m22) {
  Matrix2 m;
  m << m11, m12, m21, m22;
  return m;
}

// [[z^n, z^-n], [z^(n+1), z^-(n+1)]]
Matrix2 plane_wave_basis(Complex z, Site n) {
  return make_matrix(power(z, n), power(z, -n), power(z, n + 1), power(z, -(n + 1)));
}

Site single_breakpoint(const Fragmentation& frag) {
  if (frag.breakpoints().size() != 1) {
    throw InputError("junction checks need exactly one breakpoint, got " +
                     std::to_string(frag.breakpoints().size()));
  }
  return frag.breakpoints()[0];
}

// Every solution used by a junction check must reach one site past n1 on
// either side.
SolveOptions junction_options(const SolveOptions& options, Site n1) {
  SolveOptions out = options;
  IndexWindow need{n1 - 1, n1 + 2};
  if (out.cover) {
    need.n_min = std::min(need.n_min, out.cover->n_min);
    need.n_max = std::max(need.n_max, out.cover->n_max);
  }
  out.cover = need;
  return out;
}

struct PairSolution {
  Complex x;
  Complex y;
  double x_scale = 1.0;  // magnitude of the terms that produce x
  double y_scale = 1.0;
  double condition = 1.0;  // (|p0 q1| + |q0 p1|) / |det|
};

// Solves [[p0, q0], [p1, q1]] (x, y)^T = (r0, r1)^T by Cramer's rule.
PairSolution solve_pair(Complex p0, Complex q0, Complex p1, Complex q1, Complex r0, Complex r1) {
  const Complex det = p0 * q1 - q0 * p1;
  const double size = std::abs(p0 * q1) + std::abs(q0 * p1);
  const double d = std::abs(det);
  if (!(d > 0.0) || !std::isfinite(size)) throw NumericalFault("junction system is singular");
  PairSolution out{(r0 * q1 - q0 * r1) / det, (p0 * r1 - r0 * p1) / det};
  out.condition = size / d;
  out.x_scale = (std::abs(r0 * q1) + std::abs(q0 * r1) + std::abs(out.x) * size) / d;
  out.y_scale = (std::abs(p0 * r1) + std::abs(r0 * p1) + std::abs(out.y) * size) / d;
  return out;
}

// Solves for (x, y) in phi = x u + y v at the adjacent pair (n, n+1),
// n in [first, last], with the smallest condition number.
PairSolution best_pair(const LatticeSolution& u, const LatticeSolution& v, const LatticeSolution& phi, Site first,
                       Site last, Site* chosen) {
  std::optional<PairSolution> best;
  for (Site n = first; n <= last; ++n) {
    const Complex det = u(n) * v(n + 1) - v(n) * u(n + 1);
    if (det == Complex{}) continue;
    PairSolution candidate = solve_pair(u(n), v(n), u(n + 1), v(n + 1), phi(n), phi(n + 1));
    if (!best || candidate.condition < best->condition) {
      best = candidate;
      *chosen = n;
    }
  }
  if (!best) throw NumericalFault("junction system is singular at every site pair");
  return *best;
}

double value_residual(Complex actual, Complex expected, double scale) {
  return scaled_residual(std::abs(actual - expected), std::max(scale, std::abs(expected)));
}

}  // namespace

TransitionMatrix transition_matrix(const ScatteringData& data, const ScatteringData& inverse) {
  if (std::abs(inverse.z * data.z - 1.0) > 1e-12) {
    throw InputError("transition matrix needs scattering data at z and 1/z");
  }
  const Complex inv_t = 1.0 / data.T;
  return {make_matrix(inv_t, -data.R * inv_t, data.L * inv_t, 1.0 / inverse.T), data.z};
}

TransitionMatrix transition_matrix(const CoefficientSequence& seq, Complex z, const SolveOptions& options) {
  return transition_matrix(extract_scattering(seq, z, options), extract_scattering(seq, 1.0 / z, options));
}

double determinant_defect(const TransitionMatrix& m) {
  const Matrix2& e = m.entries;
  const Complex diagonal = e(0, 0) * e(1, 1);
  const Complex cross = e(0, 1) * e(1, 0);
  return scaled_residual(std::abs(diagonal - cross - 1.0), std::abs(diagonal) + std::abs(cross));
}

FactorizationReport factorization_check(const CoefficientSequence& seq, const Fragmentation& frag, Complex z,
                                        double tolerance, const SolveOptions& options) {
  const std::vector<CoefficientSequence> pieces = fragment(seq, frag);
  return factorization_check(seq, pieces, z, tolerance, options);
}

FactorizationReport factorization_check(const CoefficientSequence& seq,
                                        std::span<const CoefficientSequence> fragments, Complex z,
                                        double tolerance, const SolveOptions& options) {
  FactorizationReport report;
  report.z = z;
  report.fragment_count = fragments.size();
  report.lhs = transition_matrix(seq, z, options);

  Matrix2 product = Matrix2::Identity();
  Eigen::Matrix2d magnitude = Eigen::Matrix2d::Identity();
  for (const CoefficientSequence& piece : fragments) {
    const TransitionMatrix factor = transition_matrix(piece, z, options);
    product = product * factor.entries;
    magnitude = magnitude * factor.entries.cwiseAbs();
  }
  report.rhs_product = product;
  report.residual = (report.lhs.entries - product).cwiseAbs().maxCoeff();
  report.scale = std::max(max_abs(report.lhs.entries), magnitude.maxCoeff());
  report.scaled_residual = jacobi::scaled_residual(report.residual, report.scale);
  report.passed = report.scaled_residual <= tolerance;
  return report;
}

double RightExpansionReport::max() const {
  return std::max({alpha_residual, beta_residual, first_column_residual, expansion_residual});
}

double LeftExpansionReport::max() const {
  return std::max(
      {gamma_residual, epsilon_residual, second_column_residual, right_junction_residual, left_junction_residual});
}

double JunctionReport::max() const {
  return std::max({left_planewave, junction_scaling, right_planewave, right_fragment_matrix, left_fragment_matrix});
}

double ProofAlgebraReport::max() const {
  return std::max({upper_inverse, determinant_prefactor, fragment_inverse, junction_identity, rearranged_identity,
                   product_form, transition_form});
}

RightExpansionReport right_expansion_check(const CoefficientSequence& seq, const Fragmentation& frag, Complex z,
                                           const SolveOptions& options) {
  const Site n1 = single_breakpoint(frag);
  const SolveOptions opts = junction_options(options, n1);
  const std::vector<CoefficientSequence> pieces = fragment(seq, frag);
  const CoefficientSequence& right_piece = pieces[1];

  const LatticeSolution f_l = jost_left(seq, z, opts);
  const LatticeSolution f_r = jost_right(seq, z, opts);
  const LatticeSolution f_l2 = jost_left(right_piece, z, opts);
  const LatticeSolution g_l2 = conjugate_solution(right_piece, z, Side::left, opts);
  const ScatteringData data = extract_scattering(seq, z, opts);

  RightExpansionReport report;
  const Site last = std::min({f_r.hi(), f_l2.hi(), g_l2.hi()}) - 1;
  const PairSolution solved = best_pair(f_l2, g_l2, f_r, n1, last, &report.recovery_site);
  const Complex alpha = data.R / data.T;
  const Complex beta = 1.0 / data.T;
  report.alpha = solved.x;
  report.beta = solved.y;
  report.condition = solved.condition;
  report.alpha_residual = value_residual(report.alpha, alpha, solved.x_scale);
  report.beta_residual = value_residual(report.beta, beta, solved.y_scale);

  for (Site n : {n1, n1 + 1}) {
    report.first_column_residual =
        std::max(report.first_column_residual, value_residual(f_l2(n), f_l(n), std::abs(f_l(n))));
  }
  for (Site n = n1; n <= f_r.hi(); ++n) {
    const Complex forward = alpha * f_l2(n);
    const Complex backward = beta * g_l2(n);
    report.expansion_residual = std::max(
        report.expansion_residual, value_residual(forward + backward, f_r(n), std::abs(forward) + std::abs(backward)));
  }
  return report;
}

LeftExpansionReport left_expansion_check(const CoefficientSequence& seq, const Fragmentation& frag, Complex z,
                                         const SolveOptions& options) {
  const Site n1 = single_breakpoint(frag);
  const SolveOptions opts = junction_options(options, n1);
  const std::vector<CoefficientSequence> pieces = fragment(seq, frag);
  const CoefficientSequence& left_piece = pieces[0];

  const LatticeSolution f_l = jost_left(seq, z, opts);
  const LatticeSolution f_r = jost_right(seq, z, opts);
  const LatticeSolution f_r1 = jost_right(left_piece, z, opts);
  const LatticeSolution g_r1 = conjugate_solution(left_piece, z, Side::right, opts);
  const ScatteringData data = extract_scattering(seq, z, opts);

  LeftExpansionReport report;
  const Site first = std::max({f_l.lo(), f_r1.lo(), g_r1.lo()});
  const PairSolution solved = best_pair(g_r1, f_r1, f_l, first, n1 - 1, &report.recovery_site);
  const Complex inv_t = 1.0 / data.T;
  const Complex l_over_t = data.L / data.T;
  report.gamma = solved.x;
  report.epsilon = solved.y;
  report.condition = solved.condition;
  report.gamma_residual = value_residual(report.gamma, inv_t, solved.x_scale);
  report.epsilon_residual = value_residual(report.epsilon, l_over_t, solved.y_scale);
  report.swapped_gamma_residual = value_residual(report.gamma, l_over_t, solved.x_scale);
  report.swapped_epsilon_residual = value_residual(report.epsilon, inv_t, solved.y_scale);

  for (Site n = f_r.lo(); n <= n1; ++n) {
    report.second_column_residual =
        std::max(report.second_column_residual, value_residual(f_r1(n), f_r(n), std::abs(f_r(n))));
  }

  const double ratio = seq.limits().a_inf / seq.a(n1 + 1);
  const Complex scaled_right = ratio * f_r1(n1 + 1);
  report.right_junction_residual = value_residual(f_r(n1 + 1), scaled_right, std::abs(f_r(n1 + 1)));
  const Complex g_term = ratio * inv_t * g_r1(n1 + 1);
  const Complex f_term = ratio * l_over_t * f_r1(n1 + 1);
  report.left_junction_residual =
      value_residual(f_l(n1 + 1), g_term + f_term, std::abs(g_term) + std::abs(f_term));
  return report;
}

JunctionReport junction_planewave_check(const CoefficientSequence& seq, const Fragmentation& frag, Complex z,
                                        const SolveOptions& options) {
  const Site n1 = single_breakpoint(frag);
  const SolveOptions opts = junction_options(options, n1);
  const std::vector<CoefficientSequence> pieces = fragment(seq, frag);
  const CoefficientSequence& left_piece = pieces[0];
  const CoefficientSequence& right_piece = pieces[1];
  const Complex inverse_z = 1.0 / z;

  const ScatteringData s1 = extract_scattering(left_piece, z, opts);
  const ScatteringData s1_inv = extract_scattering(left_piece, inverse_z, opts);
  const ScatteringData s2 = extract_scattering(right_piece, z, opts);
  const ScatteringData s2_inv = extract_scattering(right_piece, inverse_z, opts);

  const LatticeSolution f_l2 = jost_left(right_piece, z, opts);
  const LatticeSolution g_l2 = conjugate_solution(right_piece, z, Side::left, opts);
  const LatticeSolution f_r1 = jost_right(left_piece, z, opts);
  const LatticeSolution g_r1 = conjugate_solution(left_piece, z, Side::right, opts);

  JunctionReport report;
  const Complex inv_t2 = 1.0 / s2.T;
  const Complex l2_over_t2 = s2.L / s2.T;
  auto left_wave = [&](Site n, Complex& forward, Complex& backward) {
    forward = inv_t2 * power(z, n);
    backward = l2_over_t2 * power(z, -n);
  };
  for (Site n = f_l2.lo(); n <= n1; ++n) {
    Complex forward, backward;
    left_wave(n, forward, backward);
    report.left_planewave = std::max(
        report.left_planewave, value_residual(f_l2(n), forward + backward, std::abs(forward) + std::abs(backward)));
  }
  const double ratio = seq.limits().a_inf / seq.a(n1 + 1);
  {
    Complex forward, backward;
    left_wave(n1 + 1, forward, backward);
    report.junction_scaling = value_residual(f_l2(n1 + 1), ratio * (forward + backward),
                                             std::abs(ratio) * (std::abs(forward) + std::abs(backward)));
  }

  const Complex inv_t1 = 1.0 / s1.T;
  const Complex r1_over_t1 = s1.R / s1.T;
  for (Site n = n1; n <= f_r1.hi(); ++n) {
    const Complex backward = inv_t1 * power(z, -n);
    const Complex forward = r1_over_t1 * power(z, n);
    report.right_planewave = std::max(
        report.right_planewave, value_residual(f_r1(n), forward + backward, std::abs(forward) + std::abs(backward)));
  }

  const Matrix2 basis = plane_wave_basis(z, n1);
  Matrix2 junction_scale = Matrix2::Identity();
  junction_scale(1, 1) = ratio;

  const Matrix2 right_values = make_matrix(f_l2(n1), g_l2(n1), f_l2(n1 + 1), g_l2(n1 + 1));
  const Matrix2 right_amplitudes = make_matrix(inv_t2, s2_inv.L / s2_inv.T, l2_over_t2, 1.0 / s2_inv.T);
  const Matrix2 scaled_basis = junction_scale * basis;
  report.right_fragment_matrix = matrix_residual(right_values, scaled_basis * right_amplitudes,
                                                 product_scale(scaled_basis, right_amplitudes));

  const Matrix2 left_values = make_matrix(g_r1(n1), f_r1(n1), g_r1(n1 + 1), f_r1(n1 + 1));
  const Matrix2 left_amplitudes = make_matrix(1.0 / s1_inv.T, r1_over_t1, s1_inv.R / s1_inv.T, inv_t1);
  report.left_fragment_matrix =
      matrix_residual(left_values, basis * left_amplitudes, product_scale(basis, left_amplitudes));
  return report;
}

ProofAlgebraReport proof_algebra_check(const ScatteringData& left, const ScatteringData& left_inverse,
                                       const ScatteringData& right, const ScatteringData& right_inverse,
                                       const ScatteringData& whole, const ScatteringData& whole_inverse) {
  const Matrix2 identity = Matrix2::Identity();
  const Complex inv_t = 1.0 / whole.T;

  // U = [[1, R/T], [0, 1/T]] and its closed-form inverse.
  const Matrix2 upper = make_matrix(1.0, whole.R * inv_t, 0.0, inv_t);
  const Matrix2 upper_inv = make_matrix(1.0, -whole.R, 0.0, whole.T);
  const Matrix2 upper_inv_variant = make_matrix(1.0, -whole.R, 0.0, inv_t);

  // M1 = [[1/T1~, R1/T1], [R1~/T1~, 1/T1]] and its closed-form inverse.
  const Complex inv_t1 = 1.0 / left.T;
  const Complex inv_t1_tilde = 1.0 / left_inverse.T;
  const Complex r1 = left.R * inv_t1;
  const Complex r1_tilde = left_inverse.R * inv_t1_tilde;
  const Matrix2 left_matrix = make_matrix(inv_t1_tilde, r1, r1_tilde, inv_t1);
  const Matrix2 left_matrix_inv = make_matrix(inv_t1, -r1, -r1_tilde, inv_t1_tilde);

  // N2 = [[1/T2, L2~/T2~], [L2/T2, 1/T2~]] and D = [[1/T, 0], [L/T, 1]].
  const Complex inv_t2_tilde = 1.0 / right_inverse.T;
  const Matrix2 right_matrix =
      make_matrix(1.0 / right.T, right_inverse.L * inv_t2_tilde, right.L / right.T, inv_t2_tilde);
  const Matrix2 lower = make_matrix(inv_t, 0.0, whole.L * inv_t, 1.0);

  ProofAlgebraReport report;
  report.upper_inverse = matrix_residual(upper * upper_inv, identity, product_scale(upper, upper_inv));
  report.variant_upper_inverse =
      matrix_residual(upper * upper_inv_variant, identity, product_scale(upper, upper_inv_variant));

  const Complex diagonal = inv_t1 * inv_t1_tilde;
  const Complex cross = r1 * r1_tilde;
  report.determinant_prefactor =
      scaled_residual(std::abs(diagonal - cross - 1.0), std::abs(diagonal) + std::abs(cross));
  report.fragment_inverse =
      matrix_residual(left_matrix * left_matrix_inv, identity, product_scale(left_matrix, left_matrix_inv));

  // N2 U = M1 D, the junction identity before either side is inverted.
  report.junction_identity =
      matrix_residual(right_matrix * upper, left_matrix * lower,
                      std::max(product_scale(right_matrix, upper), product_scale(left_matrix, lower)));

  const Matrix2 lhs = left_matrix_inv * right_matrix;
  const Matrix2 rhs = lower * upper_inv;
  const double scale = std::max(product_scale(left_matrix_inv, right_matrix), product_scale(lower, upper_inv));
  report.rearranged_identity = matrix_residual(lhs, rhs, scale);

  const TransitionMatrix lambda1 = transition_matrix(left, left_inverse);
  const TransitionMatrix lambda2 = transition_matrix(right, right_inverse);
  const TransitionMatrix lambda = transition_matrix(whole, whole_inverse);
  report.product_form = matrix_residual(lhs, lambda1.entries * lambda2.entries,
                                        std::max(scale, product_scale(lambda1.entries, lambda2.entries)));
  report.transition_form = matrix_residual(rhs, lambda.entries, product_scale(lower, upper_inv));
  return report;
}

}  // namespace jacobi
