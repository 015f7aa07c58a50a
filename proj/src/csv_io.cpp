// Copyright 2026 The corrmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "corrmat/csv_io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <string_view>

#include "corrmat/errors.hpp"

namespace corrmat {

namespace {

struct Field {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Field> split_fields(std::string_view line) {
  std::vector<Field> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? line.size() : comma;
    out.push_back({line.substr(start, end - start), start + 1});
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::optional<std::size_t> dim_from_offdiagonal_count(std::size_t k) {
  std::size_t dim = 1;
  while (dim * (dim - 1) / 2 < k) ++dim;
  if (dim * (dim - 1) / 2 != k) return std::nullopt;
  return dim;
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

std::string matrices_csv_header(std::size_t dim) {
  std::string out = "sample_id";
  for (std::size_t i = 1; i < dim; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      out += ",rho_" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
    }
  }
  return out;
}

void write_matrices_csv(std::ostream& out, std::size_t dim,
                        std::span<const CorrelationMatrix> matrices) {
  out << matrices_csv_header(dim) << '\n';
  std::size_t id = 0;
  for (const auto& p : matrices) {
    if (p.dim() != dim) {
      throw DomainError("matrix dimension does not match the table");
    }
    out << id++;
    for (std::size_t i = 1; i < dim; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        out << ',' << format_double(p(i, j));
      }
    }
    out << '\n';
  }
}

MatrixTable read_matrices_csv(std::istream& in,
                              std::optional<std::size_t> expected_dim) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError(1, 1, "missing header");
  }
  strip_cr(line);
  const auto header = split_fields(line);
  if (header.front().text != "sample_id") {
    throw ParseError(1, 1, "header must start with sample_id");
  }
  const auto dim = dim_from_offdiagonal_count(header.size() - 1);
  if (!dim) {
    throw ParseError(1, line.size(),
                     "column count does not match any matrix dimension");
  }
  const std::string expected_header = matrices_csv_header(*dim);
  if (line != expected_header) {
    std::size_t col = 0;
    while (col < line.size() && col < expected_header.size() &&
           line[col] == expected_header[col]) {
      ++col;
    }
    throw ParseError(1, col + 1, "expected header '" + expected_header + "'");
  }
  if (expected_dim && *expected_dim != *dim) {
    throw ParseError(1, 1, "file holds dimension " + std::to_string(*dim) +
                               ", expected " + std::to_string(*expected_dim));
  }

  MatrixTable table;
  table.dim = *dim;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != header.size()) {
      throw ParseError(line_no, line.size() + 1,
                       "expected " + std::to_string(header.size()) +
                           " fields, got " + std::to_string(fields.size()));
    }
    std::uint64_t id = 0;
    {
      const auto& f = fields.front();
      const auto r = std::from_chars(f.text.data(), f.text.data() + f.text.size(), id);
      if (r.ec != std::errc() || r.ptr != f.text.data() + f.text.size()) {
        throw ParseError(line_no, f.column, "invalid sample_id");
      }
    }
    SymmetricMatrix m = SymmetricMatrix::identity(*dim);
    std::size_t k = 1;
    for (std::size_t i = 1; i < *dim; ++i) {
      for (std::size_t j = 0; j < i; ++j, ++k) {
        const auto& f = fields[k];
        double v = 0.0;
        const auto r = std::from_chars(f.text.data(), f.text.data() + f.text.size(), v);
        if (r.ec != std::errc() || r.ptr != f.text.data() + f.text.size() ||
            !std::isfinite(v)) {
          throw ParseError(line_no, f.column,
                           "invalid number '" + std::string(f.text) + "'");
        }
        m.set(i, j, v);
      }
    }
    table.sample_ids.push_back(id);
    table.matrices.push_back(std::move(m));
  }
  return table;
}

}  // namespace corrmat
