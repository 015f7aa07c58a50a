// Copyright 2026 The corrmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "corrmat/bench.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <sstream>
#include <thread>

#include <sys/utsname.h>

#include "corrmat/errors.hpp"
#include "corrmat/special_functions.hpp"

namespace corrmat {

namespace {

constexpr std::array<ReferenceTiming, 7> kReferenceTimings{{
    {20, 1.53, 0.70, 0.80},
    {40, 3.37, 1.46, 1.44},
    {80, 8.44, 5.03, 5.06},
    {120, 16.90, 12.26, 9.85},
    {200, 34.40, 28.78, 29.08},
    {240, 47.39, 44.12, 42.90},
    {280, 66.37, 62.59, 58.85},
}};

// Keeps the optimizer from discarding sampler output.
volatile double g_sink = 0.0;

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t mid = xs.size() / 2;
  return xs.size() % 2 == 1 ? xs[mid] : 0.5 * (xs[mid - 1] + xs[mid]);
}

double time_draws(Method method, std::size_t dim, double param,
                  const RandomStream& root, std::uint64_t first,
                  std::size_t count) {
  double checksum = 0.0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < count; ++i) {
    RandomStream rng = root.split(first + i);
    const CorrelationMatrix p = sample_correlation(method, dim, param, rng);
    checksum += p(dim - 1, 0);
  }
  const auto stop = std::chrono::steady_clock::now();
  g_sink = g_sink + checksum;
  return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

std::string_view bench_label(Method method) noexcept {
  switch (method) {
    case Method::kOnion:
      return "LKJ-onion";
    case Method::kRw:
      return "RW";
    case Method::kRiw:
      return "RIW";
  }
  return "unknown";
}

BenchReport run_benchmark(const BenchConfig& config) {
  if (config.dims.empty()) {
    throw DomainError("benchmark needs at least one dimension");
  }
  if (config.n < 1 || config.repetitions < 1) {
    throw DomainError("benchmark needs n >= 1 and repetitions >= 1");
  }
  std::vector<Method> methods{Method::kOnion};
  for (Method m : config.methods) {
    if (std::find(methods.begin(), methods.end(), m) == methods.end()) {
      methods.push_back(m);
    }
  }
  BenchReport report{environment_descriptor(), config.seed, {}};
  const std::size_t warmup = std::min<std::size_t>(50, config.n / 10);
  const RandomStream root(config.seed);
  for (std::size_t dim : config.dims) {
    const double dof = static_cast<double>(dim) + config.dof_offset;
    validate(RwParams{dim, dof});
    std::vector<double> params;
    for (Method method : methods) {
      params.push_back(method == Method::kOnion ? dof_to_eta(dim, dof) : dof);
      time_draws(method, dim, params.back(), root, 0, warmup);
    }
    // Repetitions are interleaved across methods so slow drift in machine
    // load affects every method alike.
    std::vector<std::vector<double>> times(methods.size());
    for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
      for (std::size_t k = 0; k < methods.size(); ++k) {
        times[k].push_back(time_draws(methods[k], dim, params[k], root,
                                      warmup + rep * config.n, config.n));
      }
    }
    const double onion_seconds = std::max(median(times[0]), 1e-12);
    for (std::size_t k = 0; k < methods.size(); ++k) {
      const bool requested =
          std::find(config.methods.begin(), config.methods.end(), methods[k]) !=
          config.methods.end();
      if (!requested) continue;
      const double seconds = std::max(median(times[k]), 1e-12);
      report.rows.push_back({dim, std::string(bench_label(methods[k])), config.n,
                             seconds, seconds / static_cast<double>(config.n),
                             seconds / onion_seconds});
    }
  }
  return report;
}

std::string environment_descriptor() {
  std::ostringstream out;
  utsname info{};
  if (uname(&info) == 0) {
    out << info.sysname << ' ' << info.release << ' ' << info.machine << "; ";
  }
#if defined(__clang__)
  out << "clang " << __clang_major__ << '.' << __clang_minor__;
#elif defined(__GNUC__)
  out << "gcc " << __GNUC__ << '.' << __GNUC_MINOR__;
#endif
#ifdef NDEBUG
  out << " optimized";
#else
  out << " debug";
#endif
  out << "; hardware threads " << std::thread::hardware_concurrency()
      << "; single-threaded timing; absolute seconds are not comparable "
         "across machines";
  return out.str();
}

std::span<const ReferenceTiming> reference_timings() noexcept {
  return kReferenceTimings;
}

std::optional<ReferenceTiming> reference_timing(std::size_t dim) noexcept {
  for (const auto& r : kReferenceTimings) {
    if (r.dim == dim) return r;
  }
  return std::nullopt;
}

}  // namespace corrmat
