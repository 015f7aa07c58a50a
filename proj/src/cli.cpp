// Copyright 2026 The corrmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "corrmat/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "corrmat/bench.hpp"
#include "corrmat/csv_io.hpp"
#include "corrmat/densities.hpp"
#include "corrmat/errors.hpp"
#include "corrmat/reports.hpp"
#include "corrmat/samplers.hpp"
#include "corrmat/special_functions.hpp"
#include "corrmat/validation.hpp"

namespace corrmat {

namespace {

class IoError : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

struct ShapeOptions {
  std::size_t dim = 0;
  std::optional<double> dof;
  std::optional<double> eta;
};

void add_shape_options(CLI::App& cmd, ShapeOptions& shape, bool dim_required) {
  auto* dim = cmd.add_option("-T,--dim", shape.dim, "matrix dimension T");
  if (dim_required) dim->required();
  auto* dof = cmd.add_option("-m,--dof", shape.dof, "degrees of freedom m");
  auto* eta = cmd.add_option("--eta", shape.eta, "LKJ shape eta = (m - T + 1)/2");
  dof->excludes(eta);
  eta->excludes(dof);
}

/// The sampler's native parameter: m for RW/RIW, eta for onion.
double native_param(Method method, const ShapeOptions& shape) {
  if (shape.dof.has_value() == shape.eta.has_value()) {
    throw UsageError("exactly one of --dof and --eta is required");
  }
  if (shape.dim < 1) {
    throw UsageError("--dim must be at least 1");
  }
  if (method == Method::kOnion) {
    return shape.eta ? (validate(LkjParams{shape.dim, *shape.eta}), *shape.eta)
                     : dof_to_eta(shape.dim, *shape.dof);
  }
  return shape.dof ? (validate(RwParams{shape.dim, *shape.dof}), *shape.dof)
                   : eta_to_dof(shape.dim, *shape.eta);
}

Method require_method(const std::string& name) {
  const auto method = parse_method(name);
  if (!method) {
    throw UsageError("unknown method '" + name + "' (expected rw, riw or onion)");
  }
  return *method;
}

/// Writes through `write` to `path`, or to `out` when path is empty or "-".
template <typename Write>
void emit(const std::string& path, std::ostream& out, Write&& write) {
  if (path.empty() || path == "-") {
    write(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  write(file);
  file.flush();
  if (!file) {
    throw IoError("failed writing '" + path + "'");
  }
}

// -- sample -----------------------------------------------------------------

struct SampleOptions {
  std::string method;
  ShapeOptions shape;
  std::size_t n = 1;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
  std::string format = "csv";
};

int cmd_sample(const SampleOptions& opt, std::ostream& out) {
  const Method method = require_method(opt.method);
  const double param = native_param(method, opt.shape);
  if (opt.n < 1) throw UsageError("--n must be at least 1");
  const SampleBatch batch = sample_batch(method, opt.shape.dim, param, opt.n, opt.seed);
  emit(opt.out, out, [&](std::ostream& os) {
    if (opt.format == "json") {
      os << to_json(batch).dump() << '\n';
    } else {
      write_matrices_csv(os, batch.dim, batch.matrices);
    }
  });
  return kExitOk;
}

// -- density ----------------------------------------------------------------

struct DensityOptions {
  std::string method = "rw";
  ShapeOptions shape;
  std::string in;
  std::string out;
  bool check_theorem = false;
};

int cmd_density(const DensityOptions& opt, std::ostream& out, std::ostream& err) {
  const Method method = require_method(opt.method);
  MatrixTable table;
  {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (!opt.in.empty() && opt.in != "-") {
      file.open(opt.in, std::ios::binary);
      if (!file) throw IoError("cannot open '" + opt.in + "'");
      in = &file;
    }
    std::optional<std::size_t> expected;
    if (opt.shape.dim != 0) expected = opt.shape.dim;
    table = read_matrices_csv(*in, expected);
  }
  ShapeOptions shape = opt.shape;
  shape.dim = table.dim;
  const double param = native_param(method, shape);
  const double dof = method == Method::kOnion ? eta_to_dof(table.dim, param) : param;
  const double eta = method == Method::kOnion ? param : dof_to_eta(table.dim, param);

  std::ostringstream body;
  body << "sample_id,log_density" << (opt.check_theorem ? ",abs_rw_minus_lkj" : "")
       << '\n';
  for (std::size_t row = 0; row < table.matrices.size(); ++row) {
    std::optional<CorrelationMatrix> p;
    try {
      p = CorrelationMatrix::from_symmetric(table.matrices[row]);
    } catch (const Error& e) {
      err << "row " << row + 1 << " (sample_id " << table.sample_ids[row]
          << "): invalid correlation matrix: " << e.what() << '\n';
      return kExitUsage;
    }
    LogDensity value{};
    switch (method) {
      case Method::kRw:
        value = rw_log_density(*p, dof);
        break;
      case Method::kRiw:
        value = riw_log_density(*p, dof);
        break;
      case Method::kOnion:
        value = lkj_log_density(*p, eta);
        break;
    }
    body << table.sample_ids[row] << ',' << format_double(value.value);
    if (opt.check_theorem) {
      body << ','
           << format_double(std::abs(rw_log_density(*p, dof).value -
                                     lkj_log_density(*p, eta).value));
    }
    body << '\n';
  }
  emit(opt.out, out, [&](std::ostream& os) { os << body.str(); });
  return kExitOk;
}

// -- validate ---------------------------------------------------------------

struct ValidateOptions {
  std::string suite;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
  std::string format = "text";
  Perturbation perturbation;
};

int cmd_validate(const ValidateOptions& opt, std::ostream& out) {
  ValidationReport report{opt.seed, {}};
  const bool all = opt.suite == "all";
  bool known = all;
  if (all || opt.suite == "constants") {
    known = true;
    report.append(constants_suite(opt.seed, opt.perturbation));
  }
  if (all || opt.suite == "marginals") {
    known = true;
    report.append(marginals_suite(opt.seed));
  }
  if (all || opt.suite == "theorem") {
    known = true;
    report.append(theorem_suite(opt.seed, opt.perturbation));
  }
  if (all || opt.suite == "jacobians") {
    known = true;
    report.append(jacobians_suite(opt.seed));
  }
  if (!known) {
    throw UsageError("unknown suite '" + opt.suite +
                     "' (expected constants, marginals, theorem, jacobians or all)");
  }
  report.sort();
  const auto json = to_json(report, opt.suite);
  if (opt.format == "json") {
    out << json.dump(2) << '\n';
  } else {
    write_validation_text(out, report);
  }
  if (!opt.out.empty()) {
    emit(opt.out, out, [&](std::ostream& os) { os << json.dump(2) << '\n'; });
  }
  return report.passed() ? kExitOk : kExitValidationFailed;
}

// -- bench ------------------------------------------------------------------

struct BenchOptions {
  std::vector<std::size_t> dims{20, 40, 80, 120, 200, 240, 280};
  std::size_t n = 5000;
  std::vector<std::string> methods{"onion", "rw", "riw"};
  std::uint64_t seed = kDefaultSeed;
  std::size_t repetitions = 3;
  double dof_offset = 1.0;
  std::string out;
  std::string format = "text";
};

int cmd_bench(const BenchOptions& opt, std::ostream& out) {
  BenchConfig config;
  config.dims = opt.dims;
  config.n = opt.n;
  config.seed = opt.seed;
  config.repetitions = opt.repetitions;
  config.dof_offset = opt.dof_offset;
  config.methods.clear();
  for (const auto& name : opt.methods) {
    config.methods.push_back(require_method(name));
  }
  if (config.repetitions < 1) throw UsageError("--repetitions must be at least 1");
  if (config.n < 1) throw UsageError("--n must be at least 1");
  const BenchReport report = run_benchmark(config);
  emit(opt.out, out, [&](std::ostream& os) {
    if (opt.format == "json") {
      os << to_json(report).dump(2) << '\n';
    } else if (opt.format == "csv") {
      write_bench_csv(os, report);
    } else {
      write_bench_text(os, report);
    }
  });
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Random correlation matrices: restricted Wishart, restricted "
               "inverse-Wishart and LKJ (onion) sampling, densities, "
               "validation and benchmarks"};
  app.require_subcommand(1);

  SampleOptions sample;
  auto* sample_cmd = app.add_subcommand("sample", "draw correlation matrices");
  sample_cmd->add_option("--method", sample.method, "rw, riw or onion")->required();
  add_shape_options(*sample_cmd, sample.shape, true);
  sample_cmd->add_option("--n", sample.n, "number of matrices");
  sample_cmd->add_option("--seed", sample.seed, "random seed");
  sample_cmd->add_option("--out", sample.out, "output file (default stdout)");
  sample_cmd->add_option("--format", sample.format)
      ->check(CLI::IsMember({"csv", "json"}));

  DensityOptions density;
  auto* density_cmd =
      app.add_subcommand("density", "log density of each matrix in a CSV file");
  density_cmd->add_option("--method", density.method,
                          "rw, riw (kernel only) or onion/lkj");
  add_shape_options(*density_cmd, density.shape, false);
  density_cmd->add_option("--in", density.in, "input CSV (default stdin)");
  density_cmd->add_option("--out", density.out, "output file (default stdout)");
  density_cmd->add_flag("--check-theorem", density.check_theorem,
                        "also print |RW - LKJ| per row");

  ValidateOptions validate_opt;
  auto* validate_cmd = app.add_subcommand("validate", "run a validation suite");
  validate_cmd->add_option("suite", validate_opt.suite,
                           "constants, marginals, theorem, jacobians or all")
      ->required();
  validate_cmd->add_option("--seed", validate_opt.seed, "random seed");
  validate_cmd->add_option("--out", validate_opt.out, "write the JSON report here");
  validate_cmd->add_option("--format", validate_opt.format)
      ->check(CLI::IsMember({"text", "json"}));
  validate_cmd
      ->add_option("--perturb-lkj-constant",
                   validate_opt.perturbation.lkj_log_constant_offset)
      ->group("");
  validate_cmd
      ->add_option("--perturb-onion-eta", validate_opt.perturbation.onion_eta_shift)
      ->group("");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "time the three samplers");
  bench_cmd->add_option("--dims", bench.dims, "comma-separated dimensions")
      ->delimiter(',');
  bench_cmd->add_option("--n", bench.n, "matrices per timing");
  bench_cmd->add_option("--method", bench.methods, "methods to time")->delimiter(',');
  bench_cmd->add_option("--seed", bench.seed, "random seed");
  bench_cmd->add_option("--repetitions", bench.repetitions, "timed runs per cell");
  bench_cmd->add_option("--dof-offset", bench.dof_offset, "m = T + offset");
  bench_cmd->add_option("--out", bench.out, "output file (default stdout)");
  bench_cmd->add_option("--format", bench.format)
      ->check(CLI::IsMember({"text", "csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*sample_cmd) return cmd_sample(sample, out);
    if (*density_cmd) return cmd_density(density, out, err);
    if (*validate_cmd) return cmd_validate(validate_opt, out);
    if (*bench_cmd) return cmd_bench(bench, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace corrmat
