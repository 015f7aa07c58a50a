// Copyright 2026 The corrmat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace corrmat {

/// Offset of entry (i, j), i >= j, in packed lower-triangle row-major storage.
constexpr std::size_t packed_index(std::size_t i, std::size_t j) noexcept {
  return i * (i + 1) / 2 + j;
}

constexpr std::size_t packed_size(std::size_t dim) noexcept {
  return dim * (dim + 1) / 2;
}

/// Dense symmetric matrix. Only the lower triangle is stored, so symmetry
/// holds by construction.
class SymmetricMatrix {
 public:
  /// Zero matrix of the given dimension (dim >= 1).
  explicit SymmetricMatrix(std::size_t dim);

  static SymmetricMatrix identity(std::size_t dim);
  static SymmetricMatrix diagonal(std::span<const double> values);
  /// Builds from full square rows; the rows must be exactly symmetric.
  static SymmetricMatrix from_rows(
      std::initializer_list<std::initializer_list<double>> rows);

  std::size_t dim() const noexcept { return dim_; }

  double operator()(std::size_t i, std::size_t j) const noexcept {
    return i >= j ? data_[packed_index(i, j)] : data_[packed_index(j, i)];
  }
  void set(std::size_t i, std::size_t j, double value) noexcept {
    if (i >= j) {
      data_[packed_index(i, j)] = value;
    } else {
      data_[packed_index(j, i)] = value;
    }
  }

  std::span<const double> packed() const noexcept { return data_; }
  std::span<double> packed() noexcept { return data_; }

  double max_abs() const noexcept;
  double max_diagonal() const noexcept;

  friend bool operator==(const SymmetricMatrix&,
                         const SymmetricMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<double> data_;
};

/// Lower-triangular matrix; entries above the diagonal are implicitly zero.
class LowerTriangularFactor {
 public:
  explicit LowerTriangularFactor(std::size_t dim);

  static LowerTriangularFactor identity(std::size_t dim);
  /// Builds from full square rows; entries above the diagonal must be zero.
  static LowerTriangularFactor from_rows(
      std::initializer_list<std::initializer_list<double>> rows);

  std::size_t dim() const noexcept { return dim_; }

  double operator()(std::size_t i, std::size_t j) const noexcept {
    return j <= i ? data_[packed_index(i, j)] : 0.0;
  }
  /// Mutable access; requires j <= i.
  double& at_lower(std::size_t i, std::size_t j) noexcept {
    return data_[packed_index(i, j)];
  }

  std::span<const double> packed() const noexcept { return data_; }

  /// L * L'
  SymmetricMatrix times_transpose() const;
  /// L' * L
  SymmetricMatrix transpose_times() const;

  friend bool operator==(const LowerTriangularFactor&,
                         const LowerTriangularFactor&) = default;

 private:
  std::size_t dim_;
  std::vector<double> data_;
};

/// Symmetric positive-definite matrix with an exact unit diagonal.
class CorrelationMatrix {
 public:
  static CorrelationMatrix identity(std::size_t dim);

  /// Validates every invariant. Throws InvalidCorrelation when the diagonal is
  /// not exactly one or an off-diagonal entry lies outside (-1, 1), and
  /// NotPositiveDefinite when the Cholesky factorization fails.
  static CorrelationMatrix from_symmetric(SymmetricMatrix matrix);

  /// Validated construction from the strictly-lower entries in row-major
  /// order: rho(1,0), rho(2,0), rho(2,1), ...
  static CorrelationMatrix from_lower_offdiagonal(
      std::size_t dim, std::span<const double> values);

  /// Wraps a matrix the caller guarantees is a valid correlation matrix.
  static CorrelationMatrix assume_valid(SymmetricMatrix matrix) noexcept {
    return CorrelationMatrix(std::move(matrix));
  }

  std::size_t dim() const noexcept { return matrix_.dim(); }
  double operator()(std::size_t i, std::size_t j) const noexcept {
    return matrix_(i, j);
  }
  const SymmetricMatrix& matrix() const noexcept { return matrix_; }

  /// Strictly-lower entries in row-major order.
  std::vector<double> lower_offdiagonal() const;

  friend bool operator==(const CorrelationMatrix&,
                         const CorrelationMatrix&) = default;

 private:
  explicit CorrelationMatrix(SymmetricMatrix matrix) noexcept
      : matrix_(std::move(matrix)) {}

  SymmetricMatrix matrix_;
};

/// Strictly positive variances sigma_ii and the derived standard deviations.
class VarianceVector {
 public:
  /// Throws NonPositiveDiagonal when an entry is not strictly positive.
  explicit VarianceVector(std::vector<double> variances);

  std::size_t dim() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }
  std::vector<double> std_devs() const;

  friend bool operator==(const VarianceVector&,
                         const VarianceVector&) = default;

 private:
  std::vector<double> values_;
};

struct CovarianceSplit {
  CorrelationMatrix correlation;
  VarianceVector variances;
};

/// Cholesky factor L with L * L' = S. A pivot not exceeding
/// 1e-13 * max diagonal raises NotPositiveDefinite with its row index.
LowerTriangularFactor cholesky(const SymmetricMatrix& s);

/// Inverse of a lower-triangular matrix by forward substitution.
LowerTriangularFactor invert_lower_triangular(const LowerTriangularFactor& l);

/// log|S| for positive-definite S via its Cholesky factor.
double log_det_spd(const SymmetricMatrix& s);

/// Splits a covariance matrix into correlation matrix and variances.
/// The diagonal of the correlation is exactly 1. Throws NonPositiveDiagonal,
/// or NotPositiveDefinite when a 2x2 principal minor is not positive.
CovarianceSplit cov_to_corr(const SymmetricMatrix& s);

/// Delta * P * Delta with Delta = diag(sqrt(variances)).
SymmetricMatrix corr_to_cov(const CorrelationMatrix& p,
                            const VarianceVector& variances);

/// result(a, b) = s(indices[a], indices[b]).
SymmetricMatrix principal_submatrix(const SymmetricMatrix& s,
                                    std::span<const std::size_t> indices);

/// Principal submatrix with row and column `index` removed (dim >= 2).
SymmetricMatrix delete_index(const SymmetricMatrix& s, std::size_t index);

}  // namespace corrmat
