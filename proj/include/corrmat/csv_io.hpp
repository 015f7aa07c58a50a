// Copyright 2026 The corrmat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "corrmat/matrix.hpp"

namespace corrmat {

/// Shortest decimal representation that reads back to the same double.
std::string format_double(double value);

/// Header "sample_id,rho_2_1,rho_3_1,rho_3_2,...": the strictly-lower
/// entries in row-major order, 1-based indices.
std::string matrices_csv_header(std::size_t dim);

/// One line per matrix; sample ids run from 0.
void write_matrices_csv(std::ostream& out, std::size_t dim,
                        std::span<const CorrelationMatrix> matrices);

/// Rows as read, with unit diagonal. The matrices are not yet validated as
/// correlation matrices, so callers can report per-row failures.
struct MatrixTable {
  std::size_t dim = 1;
  std::vector<std::uint64_t> sample_ids;
  std::vector<SymmetricMatrix> matrices;
};

/// Throws ParseError (1-based line and column) on malformed input or when the
/// header's dimension differs from `expected_dim`.
MatrixTable read_matrices_csv(std::istream& in,
                              std::optional<std::size_t> expected_dim = {});

}  // namespace corrmat
