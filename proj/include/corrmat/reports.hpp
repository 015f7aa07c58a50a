// Copyright 2026 The corrmat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string_view>

#include <json.hpp>

#include "corrmat/bench.hpp"
#include "corrmat/samplers.hpp"
#include "corrmat/validation.hpp"

namespace corrmat {

/// {environment, seed, rows: [{dim, method, n, wall_seconds,
/// seconds_per_matrix, ratio_to_onion}]}
nlohmann::json to_json(const BenchReport& report);

/// {environment, seed, suite, passed, rows: [{suite, name, dim, param, value,
/// threshold, passed, detail}]}
nlohmann::json to_json(const ValidationReport& report, std::string_view suite);

/// {method, dim, param, seed, n, retries, header, samples: [[...], ...]}
nlohmann::json to_json(const SampleBatch& batch);

void write_bench_csv(std::ostream& out, const BenchReport& report);
/// Aligned table with the published reference ratios beside each row.
void write_bench_text(std::ostream& out, const BenchReport& report);
void write_validation_text(std::ostream& out, const ValidationReport& report);

}  // namespace corrmat
