// Copyright 2026 The corrmat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace corrmat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Cholesky pivot was not positive; `index()` is the failing row.
class NotPositiveDefinite : public Error {
 public:
  explicit NotPositiveDefinite(std::size_t index)
      : Error("matrix is not positive definite (pivot " + std::to_string(index) +
              ")"),
        index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class SingularFactor : public Error {
 public:
  explicit SingularFactor(std::size_t index)
      : Error("triangular factor has a zero diagonal entry at " +
              std::to_string(index)),
        index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class NonPositiveDiagonal : public Error {
 public:
  explicit NonPositiveDiagonal(std::size_t index)
      : Error("diagonal entry " + std::to_string(index) + " is not positive"),
        index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Parameter outside the domain of a function or distribution.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A correlation matrix failed one of its invariants.
class InvalidCorrelation : public Error {
 public:
  using Error::Error;
};

class TooFewSamples : public Error {
 public:
  TooFewSamples(std::size_t got, std::size_t needed)
      : Error("need at least " + std::to_string(needed) + " samples, got " +
              std::to_string(got)) {}
};

/// Malformed CSV input. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace corrmat
