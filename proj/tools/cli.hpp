#ifndef JACOBI_TOOLS_CLI_HPP
#define JACOBI_TOOLS_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "jacobi/lattice.hpp"

namespace jacobi::cli {

enum ExitCode : int { kPass = 0, kToleranceFailure = 1, kInputFailure = 2, kNumericalFailure = 3 };

enum class Format { csv, json };

struct RunConfig {
  std::string input_path;
  std::size_t grid_count = 512;
  double exclusion_delta = 1e-3;
  double tolerance = 1e-9;
  std::optional<std::vector<Site>> breakpoints;
  std::optional<std::string> output_path;
  Format format = Format::csv;
  // Test hook: perturbs the padding of the first fragment before the
  // factorization product is formed.
  bool corrupt_fragment_padding = false;
};

/// Throws InputError on invalid values.
void validate_config(const RunConfig& config);

/// Reads the coefficient file: an object with a_inf, b_inf, w_inf, n_min,
/// n_max and arrays a, b, w. Throws InputError.
CoefficientSequence load_coefficients(const std::string& path);

struct Report {
  std::string check;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = true;
};

/// One JSON object per line, inside a JSON array.
std::string format_reports(const std::vector<Report>& reports);

/// Formats a double with 17 significant digits.
std::string format_number(double value);

int run_scatter(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_factorize(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_identities(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to a subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jacobi::cli

#endif  // JACOBI_TOOLS_CLI_HPP
