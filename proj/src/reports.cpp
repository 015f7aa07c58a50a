// Copyright 2026 The corrmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "corrmat/reports.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "corrmat/csv_io.hpp"

namespace corrmat {

nlohmann::json to_json(const BenchReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"dim", r.dim},
                    {"method", r.method},
                    {"n", r.n},
                    {"wall_seconds", r.wall_seconds},
                    {"seconds_per_matrix", r.seconds_per_matrix},
                    {"ratio_to_onion", r.ratio_to_onion}});
  }
  return {{"environment", report.environment},
          {"seed", report.seed},
          {"rows", std::move(rows)}};
}

nlohmann::json to_json(const ValidationReport& report, std::string_view suite) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& c : report.checks) {
    nlohmann::json row = {{"suite", c.suite},
                          {"name", c.name},
                          {"dim", c.dim},
                          {"value", c.value},
                          {"threshold", c.threshold},
                          {"passed", c.passed},
                          {"detail", c.detail}};
    row["param"] = std::isnan(c.param) ? nlohmann::json(nullptr)
                                       : nlohmann::json(c.param);
    rows.push_back(std::move(row));
  }
  return {{"environment", environment_descriptor()},
          {"seed", report.seed},
          {"suite", std::string(suite)},
          {"passed", report.passed()},
          {"rows", std::move(rows)}};
}

nlohmann::json to_json(const SampleBatch& batch) {
  nlohmann::json samples = nlohmann::json::array();
  for (const auto& p : batch.matrices) {
    samples.push_back(p.lower_offdiagonal());
  }
  return {{"method", std::string(to_string(batch.method))},
          {"dim", batch.dim},
          {"param", batch.param},
          {"seed", batch.seed},
          {"n", batch.count()},
          {"retries", batch.retries},
          {"header", matrices_csv_header(batch.dim)},
          {"samples", std::move(samples)}};
}

void write_bench_csv(std::ostream& out, const BenchReport& report) {
  out << "dim,method,n,wall_seconds,seconds_per_matrix,ratio_to_onion\n";
  for (const auto& r : report.rows) {
    out << r.dim << ',' << r.method << ',' << r.n << ','
        << format_double(r.wall_seconds) << ','
        << format_double(r.seconds_per_matrix) << ','
        << format_double(r.ratio_to_onion) << '\n';
  }
}

void write_bench_text(std::ostream& out, const BenchReport& report) {
  out << "# " << report.environment << '\n';
  out << "# seed " << report.seed << '\n';
  char line[160];
  std::snprintf(line, sizeof(line), "%6s  %-10s %7s %12s %14s %8s %10s\n", "dim",
                "method", "n", "seconds", "sec/matrix", "ratio", "ref_ratio");
  out << line;
  for (const auto& r : report.rows) {
    std::string ref = "-";
    if (const auto t = reference_timing(r.dim)) {
      double value = 1.0;
      if (r.method == "RW") value = t->rw_seconds / t->onion_seconds;
      if (r.method == "RIW") value = t->riw_seconds / t->onion_seconds;
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.2f", value);
      ref = buf;
    }
    std::snprintf(line, sizeof(line), "%6zu  %-10s %7zu %12.6f %14.3e %8.3f %10s\n",
                  r.dim, r.method.c_str(), r.n, r.wall_seconds,
                  r.seconds_per_matrix, r.ratio_to_onion, ref.c_str());
    out << line;
  }
}

void write_validation_text(std::ostream& out, const ValidationReport& report) {
  for (const auto& c : report.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.suite << '/' << c.name
        << " T=" << c.dim;
    if (!std::isnan(c.param)) out << " param=" << c.param;
    out << " value=" << c.value << " threshold=" << c.threshold;
    if (!c.detail.empty()) out << " (" << c.detail << ')';
    out << '\n';
  }
  std::size_t failed = 0;
  for (const auto& c : report.checks) failed += c.passed ? 0 : 1;
  out << (failed == 0 ? "all " + std::to_string(report.checks.size()) +
                            " checks passed"
                      : std::to_string(failed) + " of " +
                            std::to_string(report.checks.size()) +
                            " checks failed")
      << '\n';
}

}  // namespace corrmat
