#include "jacobi/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace jacobi {

namespace {

std::string site_message(const char* what, Site n, double value) {
  return std::string(what) + " at site " + std::to_string(n) + " (value " + to_text(value) + ")";
}

}  // namespace

CoefficientSequence validate_sequence(RawCoefficients raw, std::size_t max_sites) {
  const Limits& lim = raw.limits;
  if (!std::isfinite(lim.a_inf) || !std::isfinite(lim.b_inf) || !std::isfinite(lim.w_inf)) {
    throw InputError("limiting values must be finite");
  }
  if (lim.a_inf == 0.0) throw InputError("a_inf must be nonzero");
  if (!(lim.w_inf > 0.0)) throw InputError("w_inf must be positive");
  if (raw.window.n_min > raw.window.n_max) {
    throw InputError("window has n_min > n_max");
  }
  const std::size_t sites = raw.window.size();
  if (sites > max_sites) {
    throw InputError("window of " + std::to_string(sites) + " sites exceeds the supported " +
                     std::to_string(max_sites));
  }
  if (raw.a.size() != sites || raw.b.size() != sites || raw.w.size() != sites) {
    throw InputError("coefficient arrays must have length n_max - n_min + 1 = " + std::to_string(sites));
  }
  for (std::size_t k = 0; k < sites; ++k) {
    const Site n = raw.window.n_min + static_cast<Site>(k);
    if (!std::isfinite(raw.a[k]) || !std::isfinite(raw.b[k]) || !std::isfinite(raw.w[k])) {
      throw InputError("non-finite coefficient at site " + std::to_string(n));
    }
    if (raw.a[k] == 0.0) throw InputError(site_message("zero a(n)", n, raw.a[k]));
    if (!(raw.w[k] > 0.0)) throw InputError(site_message("nonpositive weight w(n)", n, raw.w[k]));
  }
  return CoefficientSequence(lim, raw.window, std::move(raw.a), std::move(raw.b), std::move(raw.w));
}

Coefficients coefficient_at(const CoefficientSequence& seq, Site n) { return seq.at(n); }

CoefficientSequence free_sequence(const Limits& limits) {
  return validate_sequence({limits, {0, 0}, {limits.a_inf}, {limits.b_inf}, {limits.w_inf}});
}

RawCoefficients tabulate(const CoefficientSequence& seq, const IndexWindow& window) {
  RawCoefficients raw{seq.limits(), window, {}, {}, {}};
  raw.a.reserve(window.size());
  raw.b.reserve(window.size());
  raw.w.reserve(window.size());
  for (Site n = window.n_min; n <= window.n_max; ++n) {
    Coefficients c = seq.at(n);
    raw.a.push_back(c.a);
    raw.b.push_back(c.b);
    raw.w.push_back(c.w);
  }
  return raw;
}

Fragmentation::Fragmentation(std::vector<Site> breakpoints) : breakpoints_(std::move(breakpoints)) {
  if (breakpoints_.empty()) throw InputError("fragmentation needs at least one breakpoint");
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (breakpoints_[i] <= breakpoints_[i - 1]) {
      throw InputError("breakpoints must be strictly increasing");
    }
  }
}

std::vector<CoefficientSequence> fragment(const CoefficientSequence& seq, const Fragmentation& frag) {
  const Limits& lim = seq.limits();
  const IndexWindow& window = seq.window();
  const auto cuts = frag.breakpoints();

  std::vector<CoefficientSequence> pieces;
  pieces.reserve(frag.fragment_count());
  for (std::size_t j = 0; j < frag.fragment_count(); ++j) {
    // Fragment j owns n_{j-1} < n <= n_j.
    const bool has_lower = j > 0;
    const bool has_upper = j < cuts.size();
    RawCoefficients raw = tabulate(seq, window);
    for (std::size_t k = 0; k < window.size(); ++k) {
      const Site n = window.n_min + static_cast<Site>(k);
      const bool owned = (!has_lower || n > cuts[j - 1]) && (!has_upper || n <= cuts[j]);
      if (!owned) {
        raw.a[k] = lim.a_inf;
        raw.b[k] = lim.b_inf;
        raw.w[k] = lim.w_inf;
      }
    }
    pieces.push_back(validate_sequence(std::move(raw), std::max(window.size(), kMaxWindowSites)));
  }
  return pieces;
}

Support effective_support(const CoefficientSequence& seq) {
  const Limits& lim = seq.limits();
  const IndexWindow& window = seq.window();
  auto perturbed = [&](Site n) {
    Coefficients c = seq.at(n);
    return c.a != lim.a_inf || c.b != lim.b_inf || c.w != lim.w_inf;
  };
  Site lo = window.n_min;
  while (lo <= window.n_max && !perturbed(lo)) ++lo;
  if (lo > window.n_max) return {{0, 0}, true};
  Site hi = window.n_max;
  while (!perturbed(hi)) --hi;
  return {{lo, hi}, false};
}

std::vector<Site> nonpositive_a_sites(const CoefficientSequence& seq) {
  std::vector<Site> sites;
  const IndexWindow& window = seq.window();
  for (Site n = window.n_min; n <= window.n_max; ++n) {
    if (seq.a(n) <= 0.0) sites.push_back(n);
  }
  return sites;
}

}  // namespace jacobi
