#ifndef JACOBI_LATTICE_HPP
#define JACOBI_LATTICE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "jacobi/numeric.hpp"

namespace jacobi {

/// Limiting values of a(n), b(n), w(n) as n -> +-infinity.
struct Limits {
  double a_inf = 1.0;
  double b_inf = 0.0;
  double w_inf = 1.0;
};

/// Closed range of lattice sites [n_min, n_max].
struct IndexWindow {
  Site n_min = 0;
  Site n_max = 0;

  std::size_t size() const { return static_cast<std::size_t>(n_max - n_min + 1); }
  bool contains(Site n) const { return n >= n_min && n <= n_max; }
  friend bool operator==(const IndexWindow&, const IndexWindow&) = default;
};

/// Coefficient triple at one site.
struct Coefficients {
  double a = 0.0;
  double b = 0.0;
  double w = 0.0;
  friend bool operator==(const Coefficients&, const Coefficients&) = default;
};

/// Unvalidated coefficient description; value arrays are indexed by n - n_min.
struct RawCoefficients {
  Limits limits;
  IndexWindow window;
  std::vector<double> a;
  std::vector<double> b;
  std::vector<double> w;
};

inline constexpr std::size_t kMaxWindowSites = 10000;

/// Finite-support Jacobi coefficients. Outside the stored window every
/// coefficient takes its limiting value. Immutable once validated.
class CoefficientSequence {
 public:
  const Limits& limits() const { return limits_; }
  const IndexWindow& window() const { return window_; }

  Coefficients at(Site n) const {
    if (!window_.contains(n)) return {limits_.a_inf, limits_.b_inf, limits_.w_inf};
    auto k = static_cast<std::size_t>(n - window_.n_min);
    return {a_[k], b_[k], w_[k]};
  }
  double a(Site n) const { return window_.contains(n) ? a_[offset(n)] : limits_.a_inf; }
  double b(Site n) const { return window_.contains(n) ? b_[offset(n)] : limits_.b_inf; }
  double w(Site n) const { return window_.contains(n) ? w_[offset(n)] : limits_.w_inf; }

  std::span<const double> a_values() const { return a_; }
  std::span<const double> b_values() const { return b_; }
  std::span<const double> w_values() const { return w_; }

 private:
  friend CoefficientSequence validate_sequence(RawCoefficients raw, std::size_t max_sites);

  CoefficientSequence(Limits limits, IndexWindow window, std::vector<double> a,
                      std::vector<double> b, std::vector<double> w)
      : limits_(limits), window_(window), a_(std::move(a)), b_(std::move(b)), w_(std::move(w)) {}

  std::size_t offset(Site n) const { return static_cast<std::size_t>(n - window_.n_min); }

  Limits limits_;
  IndexWindow window_;
  std::vector<double> a_;
  std::vector<double> b_;
  std::vector<double> w_;
};

/// Checks the class invariants (a != 0, w > 0, a_inf != 0, w_inf > 0, arrays
/// covering the window) and returns the immutable sequence.
/// Throws InputError on any violation.
CoefficientSequence validate_sequence(RawCoefficients raw,
                                      std::size_t max_sites = kMaxWindowSites);

/// Total extension of the stored window by the limiting values.
Coefficients coefficient_at(const CoefficientSequence& seq, Site n);

/// The sequence with no perturbation, stored on the single site [0, 0].
CoefficientSequence free_sequence(const Limits& limits);

/// Values of seq tabulated over an arbitrary window.
RawCoefficients tabulate(const CoefficientSequence& seq, const IndexWindow& window);

/// Strictly increasing interior breakpoints n_1 < ... < n_{N-1}; the outer
/// endpoints -inf and +inf are implicit, so there are size()+1 fragments.
class Fragmentation {
 public:
  /// Throws InputError unless the list is nonempty and strictly increasing.
  explicit Fragmentation(std::vector<Site> breakpoints);

  std::span<const Site> breakpoints() const { return breakpoints_; }
  std::size_t fragment_count() const { return breakpoints_.size() + 1; }

 private:
  std::vector<Site> breakpoints_;
};

/// Splits seq into fragment_count() sequences. Fragment j keeps the original
/// coefficients on n_{j-1} < n <= n_j and the limiting values elsewhere;
/// every fragment shares the limits and stored window of seq.
std::vector<CoefficientSequence> fragment(const CoefficientSequence& seq, const Fragmentation& frag);

struct Support {
  IndexWindow window;
  bool free = false;  // true when every coefficient equals its limit; window is then [0, 0]
};

/// Smallest window outside which all three coefficients equal their limits.
Support effective_support(const CoefficientSequence& seq);

/// Stored sites with a(n) <= 0. The junction arguments for factorization
/// are written for positive a(n); the numerics only need a(n) != 0.
std::vector<Site> nonpositive_a_sites(const CoefficientSequence& seq);

}  // namespace jacobi

#endif  // JACOBI_LATTICE_HPP
