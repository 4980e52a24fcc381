#include "cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "jacobi/jost.hpp"
#include "jacobi/scattering.hpp"
#include "jacobi/spectral.hpp"
#include "jacobi/transition.hpp"

namespace jacobi::cli {
namespace {

using nlohmann::json;

double require_number(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number()) throw InputError(fmt::format("field '{}' must be a number", key));
  return doc[key].get<double>();
}

Site require_integer(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer()) {
    throw InputError(fmt::format("field '{}' must be an integer", key));
  }
  return doc[key].get<Site>();
}

std::vector<double> require_array(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) throw InputError(fmt::format("field '{}' must be an array", key));
  std::vector<double> out;
  for (const json& v : doc[key]) {
    if (!v.is_number()) throw InputError(fmt::format("field '{}' must hold numbers", key));
    out.push_back(v.get<double>());
  }
  return out;
}

// Accumulates the largest residual per named check, in first-seen order.
class Summary {
 public:
  void add(const std::string& check, double residual) {
    auto it = std::find(names_.begin(), names_.end(), check);
    if (it == names_.end()) {
      names_.push_back(check);
      values_.push_back(residual);
    } else {
      double& v = values_[static_cast<std::size_t>(it - names_.begin())];
      if (!(residual <= v)) v = residual;
    }
  }

  std::vector<Report> reports(double tolerance) const {
    std::vector<Report> out;
    for (std::size_t k = 0; k < names_.size(); ++k) {
      out.push_back({names_[k], values_[k], tolerance, values_[k] <= tolerance});
    }
    return out;
  }

 private:
  std::vector<std::string> names_;
  std::vector<double> values_;
};

void warn_nonpositive(const CoefficientSequence& seq, std::ostream& err) {
  const std::vector<Site> sites = nonpositive_a_sites(seq);
  if (sites.empty()) return;
  err << "warning: a(n) <= 0 at sites";
  for (Site n : sites) err << ' ' << n;
  err << '\n';
}

void report_fault(std::ostream& err, const SpectralPoint& p, const std::exception& e) {
  err << "fault at theta=" << format_number(p.theta) << ": " << e.what() << '\n';
}

// Writes to --output when given, otherwise to out.
void emit(const RunConfig& config, std::ostream& out, const std::string& text) {
  if (!config.output_path) {
    out << text;
    return;
  }
  std::ofstream file(*config.output_path, std::ios::binary);
  if (!file) throw InputError("cannot write " + *config.output_path);
  file << text;
}

std::string format_table(const std::vector<std::string>& columns, const std::vector<std::vector<double>>& rows,
                         Format format) {
  std::string text;
  if (format == Format::csv) {
    for (std::size_t c = 0; c < columns.size(); ++c) text += (c ? "," : "") + columns[c];
    text += '\n';
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) text += (c ? "," : "") + format_number(row[c]);
      text += '\n';
    }
    return text;
  }
  text += "[";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    text += r ? ",\n{" : "\n{";
    for (std::size_t c = 0; c < columns.size(); ++c) {
      text += fmt::format("{}\"{}\":{}", c ? "," : "", columns[c], format_number(rows[r][c]));
    }
    text += "}";
  }
  text += rows.empty() ? "]\n" : "\n]\n";
  return text;
}

int finish(int faults, const std::vector<Report>& reports) {
  if (faults > 0) return kNumericalFailure;
  const bool pass = std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.pass; });
  return pass ? kPass : kToleranceFailure;
}

// Moves b at the first site past the first breakpoint away from its limit,
// inside the padding of the first fragment.
CoefficientSequence corrupt_padding(const CoefficientSequence& piece, Site breakpoint) {
  const Site target = breakpoint + 1;
  const IndexWindow window{std::min(piece.window().n_min, target), std::max(piece.window().n_max, target)};
  RawCoefficients raw = tabulate(piece, window);
  raw.b[static_cast<std::size_t>(target - window.n_min)] += 0.25;
  return validate_sequence(std::move(raw));
}

}  // namespace

std::string format_number(double value) { return fmt::format("{:.17g}", value); }

std::string format_reports(const std::vector<Report>& reports) {
  std::string text = "[";
  for (std::size_t k = 0; k < reports.size(); ++k) {
    const Report& r = reports[k];
    text += fmt::format("{}\n{{\"check\":\"{}\",\"max_residual\":{},\"tolerance\":{},\"pass\":{}}}", k ? "," : "",
                        r.check, format_number(r.max_residual), format_number(r.tolerance), r.pass);
  }
  text += reports.empty() ? "]\n" : "\n]\n";
  return text;
}

void validate_config(const RunConfig& config) {
  if (config.grid_count < 1) throw InputError("--grid must be at least 1");
  if (!(config.exclusion_delta > 0.0 && config.exclusion_delta < 1.0)) throw InputError("--delta must lie in (0, 1)");
  if (!(config.tolerance > 0.0) || !std::isfinite(config.tolerance)) throw InputError("--tol must be positive");
}

CoefficientSequence load_coefficients(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot read " + path);
  json doc;
  try {
    doc = json::parse(file);
  } catch (const json::exception& e) {
    throw InputError(fmt::format("{}: {}", path, e.what()));
  }
  if (!doc.is_object()) throw InputError(path + ": expected a JSON object");
  RawCoefficients raw;
  raw.limits = {require_number(doc, "a_inf"), require_number(doc, "b_inf"), require_number(doc, "w_inf")};
  raw.window = {require_integer(doc, "n_min"), require_integer(doc, "n_max")};
  raw.a = require_array(doc, "a");
  raw.b = require_array(doc, "b");
  raw.w = require_array(doc, "w");
  return validate_sequence(std::move(raw));
}

int run_scatter(const RunConfig& config, std::ostream& out, std::ostream& err) {
  validate_config(config);
  const CoefficientSequence seq = load_coefficients(config.input_path);
  warn_nonpositive(seq, err);
  const CircleGrid grid = sample_circle(seq.limits(), config.grid_count, config.exclusion_delta);
  SolveOptions options;
  options.exclusion_delta = config.exclusion_delta;

  std::vector<std::vector<double>> rows;
  int faults = 0;
  for (const SpectralPoint& p : grid.points) {
    try {
      const ScatteringData sd = extract_scattering(seq, p.z, options);
      rows.push_back({p.theta, p.lambda, sd.T.real(), sd.T.imag(), sd.R.real(), sd.R.imag(), sd.L.real(),
                      sd.L.imag(), std::norm(sd.T) + std::norm(sd.R)});
    } catch (const NumericalFault& e) {
      report_fault(err, p, e);
      ++faults;
    }
  }
  emit(config, out,
       format_table({"theta", "lambda", "re_T", "im_T", "re_R", "im_R", "re_L", "im_L", "unitarity"}, rows,
                    config.format));
  return faults > 0 ? kNumericalFailure : kPass;
}

int run_factorize(const RunConfig& config, std::ostream& out, std::ostream& err) {
  validate_config(config);
  if (!config.breakpoints) throw InputError("factorize needs --breakpoints");
  const CoefficientSequence seq = load_coefficients(config.input_path);
  warn_nonpositive(seq, err);
  const Fragmentation frag(*config.breakpoints);
  std::vector<CoefficientSequence> pieces = fragment(seq, frag);
  if (config.corrupt_fragment_padding) pieces[0] = corrupt_padding(pieces[0], frag.breakpoints().front());

  const CircleGrid grid = sample_circle(seq.limits(), config.grid_count, config.exclusion_delta);
  SolveOptions options;
  options.exclusion_delta = config.exclusion_delta;

  std::vector<std::vector<double>> rows;
  Summary summary;
  int faults = 0;
  for (const SpectralPoint& p : grid.points) {
    try {
      const FactorizationReport r = factorization_check(seq, pieces, p.z, config.tolerance, options);
      rows.push_back({p.theta, p.lambda, r.residual, r.scaled_residual});
      summary.add("factorization", r.scaled_residual);
    } catch (const NumericalFault& e) {
      report_fault(err, p, e);
      ++faults;
    }
  }
  if (config.output_path) {
    emit(config, out, format_table({"theta", "lambda", "residual", "scaled_residual"}, rows, config.format));
  }
  const std::vector<Report> reports = summary.reports(config.tolerance);
  out << format_reports(reports);
  return finish(faults, reports);
}

int run_identities(const RunConfig& config, std::ostream& out, std::ostream& err) {
  validate_config(config);
  const CoefficientSequence seq = load_coefficients(config.input_path);
  warn_nonpositive(seq, err);
  std::optional<Fragmentation> frag;
  if (config.breakpoints) frag.emplace(*config.breakpoints);

  const CircleGrid grid = sample_circle(seq.limits(), config.grid_count, config.exclusion_delta);
  SolveOptions options;
  options.exclusion_delta = config.exclusion_delta;
  const double a_inf = seq.limits().a_inf;

  Summary summary;
  int faults = 0;
  for (const SpectralPoint& p : grid.points) {
    const Complex z = p.z;
    try {
      const ScatteringData sd = extract_scattering(seq, z, options);
      const ScatteringData inv = extract_scattering(seq, 1.0 / z, options);

      summary.add("conjugation", conjugation_symmetry_check(seq, z, options));
      const SymmetryReport sym = check_symmetries(seq, z, options);
      summary.add("symmetry_T", sym.T);
      summary.add("symmetry_R", sym.R);
      summary.add("symmetry_L", sym.L);

      const IdentityReport ids = check_identities(sd, inv);
      summary.add("left_unitarity", ids.left_unitarity);
      summary.add("right_unitarity", ids.right_unitarity);
      summary.add("left_reflection", ids.left_reflection);
      summary.add("right_reflection", ids.right_reflection);
      summary.add("transmission", ids.transmission);
      summary.add("unitarity", unitarity_defect(sd));

      const LatticeSolution f_l = jost_left(seq, z, options);
      const LatticeSolution f_r = jost_right(seq, z, options);
      const LatticeSolution g_l = conjugate_solution(seq, z, Side::left, options);
      const LatticeSolution g_r = conjugate_solution(seq, z, Side::right, options);
      double constancy = 0.0;
      for (const auto& [phi, zeta] : {std::pair{&f_l, &g_l}, {&f_r, &g_r}, {&f_l, &f_r}, {&f_l, &g_r}, {&f_r, &g_l}}) {
        constancy = std::max(constancy, wronskian_constancy_check(seq, *phi, *zeta));
      }
      summary.add("wronskian_constancy", constancy);
      const Complex gap = a_inf * (1.0 / z - z);
      const double left_value = std::abs(wronskian(seq, f_l, g_l, seq.window().n_max) - gap);
      const double right_value = std::abs(wronskian(seq, f_r, g_r, seq.window().n_min - 2) + gap);
      summary.add("wronskian_value", scaled_residual(std::max(left_value, right_value), std::abs(gap)));

      summary.add("determinant", determinant_defect(transition_matrix(sd, inv)));

      if (frag) {
        summary.add("factorization", factorization_check(seq, *frag, z, config.tolerance, options).scaled_residual);
        for (Site n1 : frag->breakpoints()) {
          const Fragmentation one({n1});
          summary.add("right_expansion", right_expansion_check(seq, one, z, options).max());
          summary.add("left_expansion", left_expansion_check(seq, one, z, options).max());
          summary.add("junction_planewave", junction_planewave_check(seq, one, z, options).max());
          const auto pieces = fragment(seq, one);
          summary.add("proof_algebra",
                      proof_algebra_check(extract_scattering(pieces[0], z, options),
                                          extract_scattering(pieces[0], 1.0 / z, options),
                                          extract_scattering(pieces[1], z, options),
                                          extract_scattering(pieces[1], 1.0 / z, options), sd, inv)
                          .max());
        }
      }
    } catch (const NumericalFault& e) {
      report_fault(err, p, e);
      ++faults;
    }
  }
  const std::vector<Report> reports = summary.reports(config.tolerance);
  emit(config, out, format_reports(reports));
  return finish(faults, reports);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Scattering data and transition-matrix factorization for weighted Jacobi systems",
               "jacobi-scatter"};
  app.require_subcommand(1);

  RunConfig config;
  std::vector<Site> breakpoints;
  std::string format = "csv";
  const std::map<std::string, Format> formats{{"csv", Format::csv}, {"json", Format::json}};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", config.input_path, "Coefficient file (JSON)")->required();
    sub->add_option("--grid", config.grid_count, "Number of points on the unit circle");
    sub->add_option("--delta", config.exclusion_delta, "Exclusion distance from z = +1 and z = -1");
    sub->add_option("--tol", config.tolerance, "Residual tolerance");
    sub->add_option("--output", config.output_path, "Write the table to this file");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  };
  CLI::App* scatter = app.add_subcommand("scatter", "Sweep T, R, L over the circle");
  CLI::App* factorize = app.add_subcommand("factorize", "Check the transition-matrix factorization");
  CLI::App* identities = app.add_subcommand("identities", "Check scattering identities and invariants");
  for (CLI::App* sub : {scatter, factorize, identities}) add_common(sub);
  std::vector<CLI::Option*> breakpoint_options;
  for (CLI::App* sub : {factorize, identities}) {
    breakpoint_options.push_back(
        sub->add_option("--breakpoints", breakpoints, "Fragment breakpoints, comma separated")->delimiter(','));
  }
  factorize->add_flag("--corrupt-padding", config.corrupt_fragment_padding)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputFailure;
  }
  config.format = formats.at(format);
  const CLI::App* chosen = app.get_subcommands().front();
  for (const CLI::Option* option : breakpoint_options) {
    if (option->count() > 0) config.breakpoints = breakpoints;
  }

  try {
    if (chosen == scatter) return run_scatter(config, out, err);
    if (chosen == factorize) return run_factorize(config, out, err);
    return run_identities(config, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputFailure;
  } catch (const NumericalFault& e) {
    err << "fault: " << e.what() << '\n';
    return kNumericalFailure;
  }
}

}  // namespace jacobi::cli
