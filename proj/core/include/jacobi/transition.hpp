#ifndef JACOBI_TRANSITION_HPP
#define JACOBI_TRANSITION_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "jacobi/jost.hpp"
#include "jacobi/lattice.hpp"
#include "jacobi/numeric.hpp"
#include "jacobi/scattering.hpp"

namespace jacobi {

/// [[1/T, -R/T], [L/T, 1/T(1/z)]]: maps the plane-wave amplitudes on the
/// right of the lattice to those on the left.
struct TransitionMatrix {
  Matrix2 entries;
  Complex z;

  Complex determinant() const { return entries.determinant(); }
};

/// Throws InputError unless inverse.z == 1/data.z.
TransitionMatrix transition_matrix(const ScatteringData& data, const ScatteringData& inverse);

/// Extracts scattering data at z and 1/z and assembles the transition matrix.
TransitionMatrix transition_matrix(const CoefficientSequence& seq, Complex z, const SolveOptions& options = {});

/// |det - 1| scaled by |m11 m22| + |m12 m21|.
double determinant_defect(const TransitionMatrix& m);

struct FactorizationReport {
  Complex z;
  TransitionMatrix lhs;
  Matrix2 rhs_product;
  double residual = 0.0;         // max |lhs(i,j) - rhs_product(i,j)|
  double scale = 0.0;            // rounding scale of the product, at least max |lhs|
  double scaled_residual = 0.0;  // residual / max(1, scale)
  std::size_t fragment_count = 0;
  bool passed = false;           // scaled_residual <= tolerance
};

/// Compares the whole-lattice transition matrix with the ordered product of
/// the fragment transition matrices.
FactorizationReport factorization_check(const CoefficientSequence& seq, const Fragmentation& frag, Complex z,
                                        double tolerance, const SolveOptions& options = {});

/// Same comparison against caller-supplied fragments, in left-to-right order.
FactorizationReport factorization_check(const CoefficientSequence& seq,
                                        std::span<const CoefficientSequence> fragments, Complex z,
                                        double tolerance, const SolveOptions& options = {});

/// Right-fragment expansion at a single breakpoint n1: on n >= n1,
/// f_l = f_l2 and f_r = alpha f_l2 + beta g_l2 with alpha = R/T, beta = 1/T.
/// The coefficients are recovered from a 2x2 solve at the adjacent site
/// pair (recovery_site, recovery_site + 1) on n >= n1 with the smallest
/// condition number; next to a strong scatterer the fragment solutions are
/// large and nearly parallel and the pair (n1, n1+1) can be singular in
/// double precision. Their residuals are scaled by the magnitude of the
/// terms in the solve. The expansion itself is checked at every site with
/// the predicted coefficients.
struct RightExpansionReport {
  Complex alpha;
  Complex beta;
  Site recovery_site = 0;
  double condition = 1.0;
  double alpha_residual = 0.0;
  double beta_residual = 0.0;
  double first_column_residual = 0.0;  // f_l(n) - f_l2(n), n in {n1, n1+1}
  double expansion_residual = 0.0;     // f_r - (alpha f_l2 + beta g_l2) on n >= n1
  double max() const;
};

/// Left-fragment expansion at n1: on n <= n1, f_r = f_r1 and f_l is a
/// combination gamma g_r1 + epsilon f_r1, recovered at the best-conditioned
/// adjacent pair on n <= n1.
/// Matching the n -> -infinity tails gives gamma = 1/T and epsilon = L/T;
/// the swapped_* fields measure the swapped assignment gamma = L/T,
/// epsilon = 1/T for reference and are not part of max().
/// Across the junction, f_r(n1+1) and f_l(n1+1) equal the fragment values
/// scaled by a_inf / a(n1+1).
struct LeftExpansionReport {
  Complex gamma;
  Complex epsilon;
  Site recovery_site = 0;
  double condition = 1.0;
  double gamma_residual = 0.0;
  double epsilon_residual = 0.0;
  double swapped_gamma_residual = 0.0;
  double swapped_epsilon_residual = 0.0;
  double second_column_residual = 0.0;  // f_r(n) - f_r1(n) on n <= n1
  double right_junction_residual = 0.0;
  double left_junction_residual = 0.0;
  double max() const;
};

/// Plane-wave forms of the fragment Jost solutions next to a breakpoint n1.
struct JunctionReport {
  double left_planewave = 0.0;     // f_l2 = z^n/T2 + (L2/T2) z^-n on n <= n1
  double junction_scaling = 0.0;   // f_l2(n1+1) = (a_inf / a(n1+1)) [plane wave at n1+1]
  double right_planewave = 0.0;    // f_r1 = z^-n/T1 + (R1/T1) z^n on n >= n1
  double right_fragment_matrix = 0.0;  // [f_l2 g_l2] at (n1, n1+1) in amplitude form
  double left_fragment_matrix = 0.0;   // [g_r1 f_r1] at (n1, n1+1) in amplitude form
  double max() const;
};

/// Throws InputError unless frag has exactly one breakpoint.
RightExpansionReport right_expansion_check(const CoefficientSequence& seq, const Fragmentation& frag, Complex z,
                                           const SolveOptions& options = {});
LeftExpansionReport left_expansion_check(const CoefficientSequence& seq, const Fragmentation& frag, Complex z,
                                         const SolveOptions& options = {});
JunctionReport junction_planewave_check(const CoefficientSequence& seq, const Fragmentation& frag, Complex z,
                                        const SolveOptions& options = {});

/// Matrix algebra that turns the two junction expansions into the
/// two-fragment factorization. variant_upper_inverse measures the variant
/// with 1/T in the (2,2) entry of the upper-triangular inverse; it is for
/// reference and is not part of max().
struct ProofAlgebraReport {
  double upper_inverse = 0.0;           // [[1, R/T], [0, 1/T]]^-1 = [[1, -R], [0, T]]
  double variant_upper_inverse = 0.0;
  double determinant_prefactor = 0.0;   // 1/(T1 T1~) - R1 R1~/(T1 T1~) = 1
  double fragment_inverse = 0.0;        // closed-form inverse of the left-fragment amplitude matrix
  double junction_identity = 0.0;       // M1^-1 N2 = D U^-1
  double rearranged_identity = 0.0;     // M1^-1 N2 = D [[1, -R], [0, T]]
  double product_form = 0.0;            // M1^-1 N2 = Lambda1 Lambda2
  double transition_form = 0.0;         // D [[1, -R], [0, T]] = Lambda
  double max() const;
};

ProofAlgebraReport proof_algebra_check(const ScatteringData& left, const ScatteringData& left_inverse,
                                       const ScatteringData& right, const ScatteringData& right_inverse,
                                       const ScatteringData& whole, const ScatteringData& whole_inverse);

}  // namespace jacobi

#endif  // JACOBI_TRANSITION_HPP
