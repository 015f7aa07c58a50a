// Copyright 2026 The corrmat Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "corrmat/csv_io.hpp"
#include "corrmat/errors.hpp"
#include "corrmat/samplers.hpp"

using namespace corrmat;

namespace {

void expect_parse_error(const std::string& text, std::size_t line, std::size_t column,
                        std::optional<std::size_t> dim = {}) {
  std::istringstream in(text);
  try {
    read_matrices_csv(in, dim);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CAPTURE(e.what());
    CHECK(e.line() == line);
    CHECK(e.column() == column);
  }
}

}  // namespace

TEST_CASE("header layout") {
  CHECK(matrices_csv_header(1) == "sample_id");
  CHECK(matrices_csv_header(2) == "sample_id,rho_2_1");
  CHECK(matrices_csv_header(3) == "sample_id,rho_2_1,rho_3_1,rho_3_2");
}

TEST_CASE("numbers round-trip bit-exactly") {
  for (double x : {0.1, -1.0 / 3.0, 5e-324, 0.9999999999999999, -0.0, 1e300}) {
    const std::string s = format_double(x);
    CHECK(std::strtod(s.c_str(), nullptr) == x);
  }
}

TEST_CASE("write then read returns the same matrices") {
  const auto batch = sample_batch(Method::kOnion, 6, 0.8, 50, 3);
  std::ostringstream out;
  write_matrices_csv(out, 6, batch.matrices);
  std::istringstream in(out.str());
  const auto table = read_matrices_csv(in, 6);
  CHECK(table.dim == 6);
  REQUIRE(table.matrices.size() == 50);
  for (std::size_t k = 0; k < 50; ++k) {
    CHECK(table.sample_ids[k] == k);
    CHECK(table.matrices[k] == batch.matrices[k].matrix());
  }
}

TEST_CASE("empty batch writes a header-only file") {
  std::ostringstream out;
  write_matrices_csv(out, 3, {});
  CHECK(out.str() == "sample_id,rho_2_1,rho_3_1,rho_3_2\n");
  std::istringstream in(out.str());
  const auto table = read_matrices_csv(in);
  CHECK(table.dim == 3);
  CHECK(table.matrices.empty());
}

TEST_CASE("dimension is inferred and mismatches are rejected") {
  const std::string two = "sample_id,rho_2_1\n0,0.25\n";
  std::istringstream in(two);
  CHECK(read_matrices_csv(in).dim == 2);
  expect_parse_error(two, 1, 1, 3);
  const auto batch = sample_batch(Method::kRw, 3, 4.0, 2, 1);
  std::ostringstream out;
  CHECK_THROWS_AS(write_matrices_csv(out, 4, batch.matrices), DomainError);
}

TEST_CASE("parse errors carry line and column") {
  expect_parse_error("", 1, 1);
  expect_parse_error("id,rho_2_1\n", 1, 1);
  expect_parse_error("sample_id,rho_2_2\n", 1, 17);
  expect_parse_error("sample_id,rho_2_1\n0,0.5\n1,abc\n", 3, 3);
  expect_parse_error("sample_id,rho_2_1\nx,0.5\n", 2, 1);
  expect_parse_error("sample_id,rho_2_1,rho_3_1,rho_3_2\n0,0.1,0.2\n", 2, 10);
}
