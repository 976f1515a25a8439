#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sixv/errors.hpp"
#include "sixv/integral.hpp"
#include "sixv/io.hpp"
#include "sixv/model.hpp"
#include "sixv/oracle.hpp"
#include "sixv/parallel.hpp"
#include "sixv/pde.hpp"
#include "sixv/report.hpp"
#include "sixv/suite.hpp"

namespace {

using namespace sixv;
using nlohmann::ordered_json;

enum ExitCode : int {
  kExitPass = 0,
  kExitCheckFailure = 1,
  kExitInputError = 2,
};

// gate for reporting the two computation routes as agreeing
constexpr double kDualRouteTol = 1e-9;
// a pin is only worth freezing when the routes agree much more tightly
constexpr double kGoldenWriteTol = 1e-10;
constexpr double kGoldenCheckFloor = 1e-10;

struct CommonOpts {
  std::string params_path;
  std::string output_path;  // empty writes to stdout
  std::string format = "json";
  std::uint64_t seed = 0;
  unsigned parallelism = default_parallelism();
  double node_radius = 1.0;
  std::size_t max_length = kDefaultGridBudget;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("-p,--params", opts.params_path,
                  "parameter file (json)")
      ->required();
  cmd->add_option("-o,--output", opts.output_path,
                  "output path; stdout when omitted");
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--seed", opts.seed, "base seed for random probes");
  cmd->add_option("--parallelism", opts.parallelism,
                  "worker threads for grid evaluation")
      ->check(CLI::Range(1u, 256u));
}

void emit(const CommonOpts& opts, const std::string& text) {
  if (opts.output_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(opts.output_path, text);
  }
}

std::map<std::string, double> parse_tols(const std::vector<std::string>& specs) {
  std::map<std::string, double> out;
  for (const std::string& spec : specs) {
    const std::size_t eq = spec.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
      throw ParseError("tolerance override must look like name=value: " + spec);
    }
    const std::string name = spec.substr(0, eq);
    try {
      std::size_t used = 0;
      const double value = std::stod(spec.substr(eq + 1), &used);
      if (used != spec.size() - eq - 1 || !(value > 0.0)) {
        throw ParseError("tolerance must be a positive number: " + spec);
      }
      out[name] = value;
    } catch (const std::logic_error&) {
      throw ParseError("tolerance must be a positive number: " + spec);
    }
  }
  return out;
}

// hashing material covers everything that changes the numbers, and nothing
// that only changes how they are delivered
std::string hash_for(const std::string& command, const RunInput& input,
                     const CommonOpts& opts,
                     const std::map<std::string, double>& tols,
                     const std::string& extra) {
  std::string material = command;
  material += "|" + canonical_input_string(input);
  material += "|seed=" + std::to_string(opts.seed);
  material += "|radius=" + format_double(opts.node_radius);
  material += "|budget=" + std::to_string(opts.max_length);
  for (const auto& [name, value] : tols) {
    material += "|tol:" + name + "=" + format_double(value);
  }
  if (!extra.empty()) material += "|" + extra;
  return hash_hex(material);
}

std::string fields_to_csv(
    const std::vector<std::pair<std::string, std::string>>& fields) {
  std::string out = "field,value\n";
  for (const auto& [name, value] : fields) {
    out += name + "," + value + "\n";
  }
  return out;
}

// flattens {name: scalar|string|bool} one level for the csv variant
std::string doc_to_csv(const ordered_json& doc) {
  std::vector<std::pair<std::string, std::string>> fields;
  for (const auto& [key, value] : doc.items()) {
    if (value.is_array() && value.size() == 2 && value[0].is_number()) {
      fields.emplace_back(key + "_re", format_double(value[0].get<double>()));
      fields.emplace_back(key + "_im", format_double(value[1].get<double>()));
    } else if (value.is_number_float()) {
      fields.emplace_back(key, format_double(value.get<double>()));
    } else if (value.is_number()) {
      fields.emplace_back(key, value.dump());
    } else if (value.is_boolean()) {
      fields.emplace_back(key, value.get<bool>() ? "true" : "false");
    } else if (value.is_string()) {
      fields.emplace_back(key, value.get<std::string>());
    } else {
      fields.emplace_back(key, value.dump());
    }
  }
  return fields_to_csv(fields);
}

void emit_doc(const CommonOpts& opts, const ordered_json& doc) {
  if (opts.format == "csv") {
    emit(opts, doc_to_csv(doc));
  } else {
    emit(opts, doc.dump(2) + "\n");
  }
}

int run_verify(const CommonOpts& opts, const std::vector<std::string>& specs) {
  const RunInput input = load_run_input(opts.params_path);
  SuiteConfig cfg;
  cfg.input = input;
  cfg.seed = opts.seed;
  cfg.parallelism = opts.parallelism;
  cfg.node_radius = opts.node_radius;
  cfg.grid_budget = opts.max_length;
  cfg.tol_overrides = parse_tols(specs);
  VerificationReport report = run_verify_suite(cfg);
  report.config_hash =
      hash_for("verify", input, opts, cfg.tol_overrides, "");
  emit(opts,
       opts.format == "csv" ? report_to_csv(report) : report_to_json(report));
  return report.pass() ? kExitPass : kExitCheckFailure;
}

int run_compute_z(const CommonOpts& opts, const std::string& golden_out,
                  const std::string& golden_check) {
  const RunInput input = load_run_input(opts.params_path);
  const Cx z_op = partition_function(input.params, input.point);
  const Cx z_rs = residue_sum(input.params, input.point);
  const double disc = pair_residual(z_op, z_rs);

  ordered_json doc;
  doc["config_hash"] = hash_for("compute-z", input, opts, {}, "");
  doc["L"] = input.params.L;
  doc["z_operator"] = {z_op.real(), z_op.imag()};
  doc["z_residue_sum"] = {z_rs.real(), z_rs.imag()};
  doc["crosscheck_discrepancy"] = disc;
  bool pass = disc < kDualRouteTol;

  if (!golden_check.empty()) {
    const std::vector<GoldenEntry> entries = load_golden(golden_check);
    const std::optional<GoldenEntry> hit = find_golden(entries, input);
    if (!hit) {
      throw ParseError("no golden entry matches the input parameters");
    }
    const double gap = pair_residual(z_op, hit->z);
    const double allow =
        std::max(10.0 * hit->crosscheck_discrepancy, kGoldenCheckFloor);
    doc["golden_reference"] = {hit->z.real(), hit->z.imag()};
    doc["golden_gap"] = gap;
    doc["golden_tolerance"] = allow;
    doc["golden_pass"] = gap <= allow;
    pass = pass && gap <= allow;
  }

  if (!golden_out.empty()) {
    if (disc >= kGoldenWriteTol) {
      std::cerr << "refusing to pin: route discrepancy "
                << format_double(disc) << " is not below "
                << format_double(kGoldenWriteTol) << "\n";
      pass = false;
    } else {
      std::vector<GoldenEntry> entries;
      if (std::filesystem::exists(golden_out)) {
        entries = load_golden(golden_out);
      }
      GoldenEntry entry;
      entry.params = input.params;
      entry.point = input.point;
      entry.z = z_op;
      entry.crosscheck_discrepancy = disc;
      bool replaced = false;
      for (GoldenEntry& existing : entries) {
        RunInput probe;
        probe.params = existing.params;
        probe.point = existing.point;
        if (find_golden({entry}, probe)) {
          existing = entry;
          replaced = true;
          break;
        }
      }
      if (!replaced) entries.push_back(entry);
      save_golden(golden_out, entries);
      doc["golden_written"] = golden_out;
    }
  }

  doc["pass"] = pass;
  emit_doc(opts, doc);
  return pass ? kExitPass : kExitCheckFailure;
}

int run_compute_integral(const CommonOpts& opts) {
  const RunInput input = load_run_input(opts.params_path);
  const Cx z_rs = residue_sum(input.params, input.point);
  ordered_json doc;
  doc["config_hash"] = hash_for("compute-integral", input, opts, {}, "");
  doc["L"] = input.params.L;
  doc["z_residue_sum"] = {z_rs.real(), z_rs.imag()};
  emit_doc(opts, doc);
  return kExitPass;
}

int run_homog_limit(const CommonOpts& opts, double eps_start,
                    double eps_factor, std::size_t eps_count) {
  const RunInput input = load_run_input(opts.params_path);
  std::vector<double> ladder;
  double eps = eps_start;
  for (std::size_t k = 0; k < eps_count; ++k, eps *= eps_factor) {
    ladder.push_back(eps);
  }
  const Cx lambda = input.point.lambda.at(0);
  const Cx mu_hom = input.params.mu.at(0);

  const Extrapolated oracle =
      homogeneous_limit(input.params, lambda, mu_hom, ladder, ZPath::Oracle);
  const Extrapolated residues = homogeneous_limit(input.params, lambda, mu_hom,
                                                  ladder, ZPath::ResidueSum);
  const Extrapolated offsets = homogeneous_limit(input.params, lambda, mu_hom,
                                                 ladder, ZPath::Oracle, 1);

  const double route_gap = pair_residual(oracle.value, residues.value);
  const double variant_gap = pair_residual(oracle.value, offsets.value);
  const bool diverged =
      oracle.diverged || residues.diverged || offsets.diverged;
  const double route_tol = homogeneous_route_tolerance(input.params.L);
  const double variant_tol = homogeneous_variant_tolerance(input.params.L);
  const bool pass =
      !diverged && route_gap < route_tol && variant_gap < variant_tol;

  std::string ladder_tag = "ladder=" + format_double(eps_start) + ":" +
                           format_double(eps_factor) + ":" +
                           std::to_string(eps_count);
  ordered_json doc;
  doc["config_hash"] = hash_for("homog-limit", input, opts, {}, ladder_tag);
  doc["L"] = input.params.L;
  doc["lambda"] = {lambda.real(), lambda.imag()};
  doc["mu"] = {mu_hom.real(), mu_hom.imag()};
  doc["value_operator"] = {oracle.value.real(), oracle.value.imag()};
  doc["value_residue_sum"] = {residues.value.real(), residues.value.imag()};
  doc["value_offset_variant"] = {offsets.value.real(), offsets.value.imag()};
  doc["error_estimate"] = oracle.error_estimate;
  doc["route_gap"] = route_gap;
  doc["route_tolerance"] = route_tol;
  doc["variant_gap"] = variant_gap;
  doc["variant_tolerance"] = variant_tol;
  doc["diverged"] = diverged;
  doc["pass"] = pass;
  emit_doc(opts, doc);
  return pass ? kExitPass : kExitCheckFailure;
}

int run_interpolate(const CommonOpts& opts) {
  if (opts.format == "csv") {
    throw ParseError("interpolate emits json only");
  }
  const RunInput input = load_run_input(opts.params_path);
  const PolyRep poly = interpolate_zbar(input.params, opts.node_radius,
                                        opts.parallelism, opts.max_length);
  emit(opts, polyrep_to_json(poly, hash_for("interpolate", input, opts, {}, ""),
                             opts.node_radius));
  return kExitPass;
}

struct SweepTarget {
  enum class Field { Gamma, H, Mu, Lambda };
  Field field = Field::Gamma;
  std::size_t index = 0;  // zero-based position for mu / lambda
  bool imag = false;

  void apply(RunInput& input, double value) const {
    Cx* slot = nullptr;
    switch (field) {
      case Field::Gamma:
        slot = &input.params.gamma;
        break;
      case Field::H:
        slot = &input.params.h;
        break;
      case Field::Mu:
        slot = &input.params.mu.at(index);
        break;
      case Field::Lambda:
        slot = &input.point.lambda.at(index);
        break;
    }
    if (imag) {
      slot->imag(value);
    } else {
      slot->real(value);
    }
  }
};

SweepTarget parse_sweep_target(const std::string& spec, const RunInput& input) {
  const std::size_t dot = spec.rfind('.');
  if (dot == std::string::npos) {
    throw ParseError("sweep parameter must end in .re or .im: " + spec);
  }
  const std::string part = spec.substr(dot + 1);
  SweepTarget target;
  if (part == "re") {
    target.imag = false;
  } else if (part == "im") {
    target.imag = true;
  } else {
    throw ParseError("sweep parameter must end in .re or .im: " + spec);
  }
  const std::string head = spec.substr(0, dot);
  auto indexed = [&](const std::string& prefix,
                     std::size_t limit) -> std::optional<std::size_t> {
    if (head.size() <= prefix.size() || head.compare(0, prefix.size(), prefix)) {
      return std::nullopt;
    }
    const std::string digits = head.substr(prefix.size());
    if (digits.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("bad sweep parameter index: " + spec);
    }
    const std::size_t k = std::stoul(digits);
    if (k < 1 || k > limit) {
      throw ParseError("sweep parameter index out of range: " + spec);
    }
    return k - 1;
  };
  if (head == "gamma") {
    target.field = SweepTarget::Field::Gamma;
  } else if (head == "h") {
    target.field = SweepTarget::Field::H;
  } else if (auto k = indexed("mu", input.params.mu.size())) {
    target.field = SweepTarget::Field::Mu;
    target.index = *k;
  } else if (auto k = indexed("lambda", input.point.lambda.size())) {
    target.field = SweepTarget::Field::Lambda;
    target.index = *k;
  } else {
    throw ParseError("unknown sweep parameter: " + spec);
  }
  return target;
}

int run_sweep(const CommonOpts& opts, const std::string& param_spec,
              double from, double to, std::size_t steps) {
  const RunInput input = load_run_input(opts.params_path);
  if (steps < 2) throw ParseError("sweep needs at least 2 steps");
  const SweepTarget target = parse_sweep_target(param_spec, input);

  const std::vector<std::string> columns = sweep_check_names();
  std::vector<std::pair<double, std::vector<double>>> rows;
  for (std::size_t s = 0; s < steps; ++s) {
    const double value =
        from + (to - from) * static_cast<double>(s) /
                   static_cast<double>(steps - 1);
    RunInput point_input = input;
    target.apply(point_input, value);
    SuiteConfig cfg;
    cfg.input = point_input;
    cfg.seed = opts.seed;
    cfg.parallelism = opts.parallelism;
    cfg.node_radius = opts.node_radius;
    cfg.grid_budget = opts.max_length;
    std::vector<double> residuals;
    try {
      residuals = sweep_row(cfg);
    } catch (const SingularManifoldError&) {
      // pinned sweep values may land on a guard manifold; report the row as
      // unevaluable instead of aborting the whole sweep
      residuals.assign(columns.size(),
                       std::numeric_limits<double>::quiet_NaN());
    }
    rows.emplace_back(value, std::move(residuals));
  }

  const std::string sweep_tag = "sweep=" + param_spec + ":" +
                                format_double(from) + ":" + format_double(to) +
                                ":" + std::to_string(steps);
  const std::string hash = hash_for("sweep", input, opts, {}, sweep_tag);

  if (opts.format == "json") {
    ordered_json doc;
    doc["config_hash"] = hash;
    doc["param"] = param_spec;
    doc["columns"] = columns;
    doc["rows"] = ordered_json::array();
    for (const auto& [value, residuals] : rows) {
      ordered_json row = ordered_json::array();
      row.push_back(value);
      for (const double r : residuals) {
        if (std::isnan(r)) {
          row.push_back(nullptr);
        } else {
          row.push_back(r);
        }
      }
      doc["rows"].push_back(std::move(row));
    }
    emit(opts, doc.dump(2) + "\n");
  } else {
    std::string out = param_spec;
    for (const std::string& name : columns) out += "," + name;
    out += "\n";
    for (const auto& [value, residuals] : rows) {
      out += format_double(value);
      for (const double r : residuals) out += "," + format_double(r);
      out += "\n";
    }
    emit(opts, out);
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"six-vertex model with a reflecting end: verification toolkit"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::vector<std::string> tol_specs;
  std::string golden_out, golden_check;
  double eps_start = 0.2, eps_factor = 0.5;
  std::size_t eps_count = 7;
  std::string sweep_param;
  double sweep_from = 0.0, sweep_to = 0.0;
  std::size_t sweep_steps = 2;

  CLI::App* verify = app.add_subcommand(
      "verify", "run every invariant check the chain length allows");
  add_common(verify, opts);
  verify->add_option("--node-radius", opts.node_radius,
                     "modulus of the interpolation nodes")
      ->check(CLI::PositiveNumber);
  verify->add_option("--max-L", opts.max_length,
                     "largest chain length the interpolation grid accepts");
  verify->add_option("--tol", tol_specs,
                     "per-check tolerance override, name=value");

  CLI::App* compute_z = app.add_subcommand(
      "compute-z", "partition function through both computation routes");
  add_common(compute_z, opts);
  compute_z->add_option("--golden-out", golden_out,
                        "pin the value into this golden corpus");
  compute_z->add_option("--golden-check", golden_check,
                        "compare against a pinned golden corpus");

  CLI::App* compute_integral = app.add_subcommand(
      "compute-integral", "partition function through the residue sum alone");
  add_common(compute_integral, opts);

  CLI::App* homog = app.add_subcommand(
      "homog-limit", "extrapolate the homogeneous limit along an epsilon ladder");
  add_common(homog, opts);
  homog->add_option("--eps-start", eps_start, "first ladder separation")
      ->check(CLI::PositiveNumber);
  homog->add_option("--eps-factor", eps_factor, "ladder decay factor");
  homog->add_option("--eps-count", eps_count, "ladder length");

  CLI::App* interpolate = app.add_subcommand(
      "interpolate", "full coefficient tensor of the rescaled partition function");
  add_common(interpolate, opts);
  interpolate->add_option("--node-radius", opts.node_radius,
                          "modulus of the interpolation nodes")
      ->check(CLI::PositiveNumber);
  interpolate->add_option("--max-L", opts.max_length,
                          "largest chain length the interpolation grid accepts");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "residuals of the headline checks along one parameter");
  add_common(sweep, opts);
  sweep->add_option("--param", sweep_param,
                    "swept component, e.g. gamma.re, h.im, mu1.re, lambda2.im")
      ->required();
  sweep->add_option("--from", sweep_from, "first swept value")->required();
  sweep->add_option("--to", sweep_to, "last swept value")->required();
  sweep->add_option("--steps", sweep_steps, "number of sweep points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInputError;
  }

  try {
    if (verify->parsed()) return run_verify(opts, tol_specs);
    if (compute_z->parsed()) return run_compute_z(opts, golden_out, golden_check);
    if (compute_integral->parsed()) return run_compute_integral(opts);
    if (homog->parsed()) {
      return run_homog_limit(opts, eps_start, eps_factor, eps_count);
    }
    if (interpolate->parsed()) return run_interpolate(opts);
    if (sweep->parsed()) {
      return run_sweep(opts, sweep_param, sweep_from, sweep_to, sweep_steps);
    }
  } catch (const SingularManifoldError& e) {
    std::cerr << "singular input: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
