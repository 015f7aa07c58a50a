// Copyright 2026 The corrmat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "corrmat/samplers.hpp"

namespace corrmat {

/// Seed used by every subcommand when --seed is not given.
inline constexpr std::uint64_t kDefaultSeed = 20260416;

/// Row label used in reports: "LKJ-onion", "RW" or "RIW".
std::string_view bench_label(Method method) noexcept;

struct BenchRecord {
  std::size_t dim;
  std::string method;
  std::size_t n;
  /// Median over repetitions of the time to draw n matrices.
  double wall_seconds;
  double seconds_per_matrix;
  /// wall_seconds / onion wall_seconds at the same dimension.
  double ratio_to_onion;
};

struct BenchReport {
  /// Machine and build description. Absolute seconds are only comparable
  /// within one environment.
  std::string environment;
  std::uint64_t seed;
  std::vector<BenchRecord> rows;
};

struct BenchConfig {
  std::vector<std::size_t> dims{20, 40, 80, 120, 200, 240, 280};
  std::size_t n = 5000;
  std::vector<Method> methods{Method::kOnion, Method::kRw, Method::kRiw};
  std::uint64_t seed = kDefaultSeed;
  std::size_t repetitions = 3;
  /// m = T + dof_offset; the onion sampler runs at eta = (dof_offset + 1)/2.
  double dof_offset = 1.0;
};

/// Times each (dim, method) cell single-threaded. Each cell first discards
/// min(50, n/10) warm-up draws; only sampler calls are inside the timed
/// region. The onion sampler is always timed since it is the reference.
BenchReport run_benchmark(const BenchConfig& config);

std::string environment_descriptor();

/// Published reference timings (seconds for 5000 matrices, m = T + 1).
struct ReferenceTiming {
  std::size_t dim;
  double onion_seconds;
  double rw_seconds;
  double riw_seconds;
};

std::span<const ReferenceTiming> reference_timings() noexcept;
std::optional<ReferenceTiming> reference_timing(std::size_t dim) noexcept;

}  // namespace corrmat
