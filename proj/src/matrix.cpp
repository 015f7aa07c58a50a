// Copyright 2026 The corrmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "corrmat/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "corrmat/errors.hpp"

namespace corrmat {

namespace {

void require_dim(std::size_t dim) {
  if (dim == 0) {
    throw DomainError("matrix dimension must be at least 1");
  }
}

constexpr double kPivotTolerance = 1e-13;

}  // namespace

SymmetricMatrix::SymmetricMatrix(std::size_t dim)
    : dim_(dim), data_((require_dim(dim), packed_size(dim)), 0.0) {}

SymmetricMatrix SymmetricMatrix::identity(std::size_t dim) {
  SymmetricMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    m.set(i, i, 1.0);
  }
  return m;
}

SymmetricMatrix SymmetricMatrix::diagonal(std::span<const double> values) {
  SymmetricMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    m.set(i, i, values[i]);
  }
  return m;
}

SymmetricMatrix SymmetricMatrix::from_rows(
    std::initializer_list<std::initializer_list<double>> rows) {
  const std::vector<std::vector<double>> dense(rows.begin(), rows.end());
  SymmetricMatrix m(dense.size());
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i].size() != dense.size()) {
      throw DomainError("rows must form a square matrix");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (dense[i][j] != dense[j][i]) {
        throw DomainError("rows are not symmetric");
      }
    }
  }
  for (std::size_t i = 0; i < dense.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      m.set(i, j, dense[i][j]);
    }
  }
  return m;
}

double SymmetricMatrix::max_abs() const noexcept {
  double out = 0.0;
  for (double v : data_) {
    out = std::max(out, std::abs(v));
  }
  return out;
}

double SymmetricMatrix::max_diagonal() const noexcept {
  double out = data_[0];
  for (std::size_t i = 1; i < dim_; ++i) {
    out = std::max(out, data_[packed_index(i, i)]);
  }
  return out;
}

LowerTriangularFactor::LowerTriangularFactor(std::size_t dim)
    : dim_(dim), data_((require_dim(dim), packed_size(dim)), 0.0) {}

LowerTriangularFactor LowerTriangularFactor::identity(std::size_t dim) {
  LowerTriangularFactor l(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    l.at_lower(i, i) = 1.0;
  }
  return l;
}

LowerTriangularFactor LowerTriangularFactor::from_rows(
    std::initializer_list<std::initializer_list<double>> rows) {
  LowerTriangularFactor l(rows.size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) {
      throw DomainError("rows must form a square matrix");
    }
    std::size_t j = 0;
    for (double v : row) {
      if (j <= i) {
        l.at_lower(i, j) = v;
      } else if (v != 0.0) {
        throw DomainError("entry above the diagonal is not zero");
      }
      ++j;
    }
    ++i;
  }
  return l;
}

SymmetricMatrix LowerTriangularFactor::times_transpose() const {
  SymmetricMatrix out(dim_);
  auto dst = out.packed();
  for (std::size_t i = 0; i < dim_; ++i) {
    const double* row_i = data_.data() + packed_index(i, 0);
    for (std::size_t j = 0; j <= i; ++j) {
      const double* row_j = data_.data() + packed_index(j, 0);
      double sum = 0.0;
      for (std::size_t k = 0; k <= j; ++k) {
        sum += row_i[k] * row_j[k];
      }
      dst[packed_index(i, j)] = sum;
    }
  }
  return out;
}

SymmetricMatrix LowerTriangularFactor::transpose_times() const {
  // (L'L)_ij = sum_k L_ki L_kj, accumulated one row of L at a time.
  SymmetricMatrix out(dim_);
  auto dst = out.packed();
  for (std::size_t k = 0; k < dim_; ++k) {
    const double* row_k = data_.data() + packed_index(k, 0);
    for (std::size_t i = 0; i <= k; ++i) {
      const double a = row_k[i];
      double* dst_row = dst.data() + packed_index(i, 0);
      for (std::size_t j = 0; j <= i; ++j) {
        dst_row[j] += a * row_k[j];
      }
    }
  }
  return out;
}

CorrelationMatrix CorrelationMatrix::identity(std::size_t dim) {
  return CorrelationMatrix(SymmetricMatrix::identity(dim));
}

CorrelationMatrix CorrelationMatrix::from_symmetric(SymmetricMatrix matrix) {
  const std::size_t n = matrix.dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix(i, i) != 1.0) {
      throw InvalidCorrelation("diagonal entry (" + std::to_string(i + 1) +
                               "," + std::to_string(i + 1) +
                               ") is not exactly 1");
    }
    for (std::size_t j = 0; j < i; ++j) {
      const double v = matrix(i, j);
      if (!(std::abs(v) < 1.0)) {
        throw InvalidCorrelation("entry (" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) +
                                 ") is outside (-1, 1)");
      }
    }
  }
  cholesky(matrix);
  return CorrelationMatrix(std::move(matrix));
}

CorrelationMatrix CorrelationMatrix::from_lower_offdiagonal(
    std::size_t dim, std::span<const double> values) {
  if (values.size() != dim * (dim - 1) / 2) {
    throw DomainError("expected " + std::to_string(dim * (dim - 1) / 2) +
                      " off-diagonal values, got " +
                      std::to_string(values.size()));
  }
  SymmetricMatrix m = SymmetricMatrix::identity(dim);
  std::size_t k = 0;
  for (std::size_t i = 1; i < dim; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      m.set(i, j, values[k++]);
    }
  }
  return from_symmetric(std::move(m));
}

std::vector<double> CorrelationMatrix::lower_offdiagonal() const {
  std::vector<double> out;
  out.reserve(dim() * (dim() - 1) / 2);
  for (std::size_t i = 1; i < dim(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      out.push_back(matrix_(i, j));
    }
  }
  return out;
}

VarianceVector::VarianceVector(std::vector<double> variances)
    : values_(std::move(variances)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!(values_[i] > 0.0)) {
      throw NonPositiveDiagonal(i);
    }
  }
}

std::vector<double> VarianceVector::std_devs() const {
  std::vector<double> out(values_.size());
  std::transform(values_.begin(), values_.end(), out.begin(),
                 [](double v) { return std::sqrt(v); });
  return out;
}

LowerTriangularFactor cholesky(const SymmetricMatrix& s) {
  const std::size_t n = s.dim();
  const double threshold = kPivotTolerance * std::max(s.max_diagonal(), 0.0);
  LowerTriangularFactor l(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double sum = s(i, j);
      for (std::size_t k = 0; k < j; ++k) {
        sum -= l(i, k) * l(j, k);
      }
      if (i == j) {
        if (!(sum > threshold)) {
          throw NotPositiveDefinite(i);
        }
        l.at_lower(i, i) = std::sqrt(sum);
      } else {
        l.at_lower(i, j) = sum / l(j, j);
      }
    }
  }
  return l;
}

LowerTriangularFactor invert_lower_triangular(const LowerTriangularFactor& l) {
  const std::size_t n = l.dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (l(i, i) == 0.0) {
      throw SingularFactor(i);
    }
  }
  LowerTriangularFactor b(n);
  std::vector<double> acc(n);
  const auto lp = l.packed();
  for (std::size_t i = 0; i < n; ++i) {
    // Row i of B: b_ij = -(sum_{k=j}^{i-1} l_ik b_kj) / l_ii, accumulated
    // over rows k of B.
    const double* l_row = lp.data() + packed_index(i, 0);
    std::fill(acc.begin(), acc.begin() + static_cast<std::ptrdiff_t>(i), 0.0);
    for (std::size_t k = 0; k < i; ++k) {
      const double lik = l_row[k];
      const double* b_row = b.packed().data() + packed_index(k, 0);
      for (std::size_t j = 0; j <= k; ++j) {
        acc[j] += lik * b_row[j];
      }
    }
    const double inv_diag = 1.0 / l_row[i];
    for (std::size_t j = 0; j < i; ++j) {
      b.at_lower(i, j) = -acc[j] * inv_diag;
    }
    b.at_lower(i, i) = inv_diag;
  }
  return b;
}

double log_det_spd(const SymmetricMatrix& s) {
  const LowerTriangularFactor l = cholesky(s);
  double out = 0.0;
  for (std::size_t i = 0; i < l.dim(); ++i) {
    out += std::log(l(i, i));
  }
  return 2.0 * out;
}

CovarianceSplit cov_to_corr(const SymmetricMatrix& s) {
  const std::size_t n = s.dim();
  std::vector<double> variances(n);
  std::vector<double> inv_sd(n);
  for (std::size_t i = 0; i < n; ++i) {
    variances[i] = s(i, i);
    if (!(variances[i] > 0.0)) {
      throw NonPositiveDiagonal(i);
    }
    inv_sd[i] = 1.0 / std::sqrt(variances[i]);
  }
  SymmetricMatrix p(n);
  auto dst = p.packed();
  auto src = s.packed();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t row = packed_index(i, 0);
    for (std::size_t j = 0; j < i; ++j) {
      const double rho = src[row + j] * inv_sd[i] * inv_sd[j];
      if (!(std::abs(rho) < 1.0)) {
        throw NotPositiveDefinite(i);
      }
      dst[row + j] = rho;
    }
    dst[row + i] = 1.0;
  }
  return {CorrelationMatrix::assume_valid(std::move(p)),
          VarianceVector(std::move(variances))};
}

SymmetricMatrix corr_to_cov(const CorrelationMatrix& p,
                            const VarianceVector& variances) {
  if (p.dim() != variances.dim()) {
    throw DomainError("dimension mismatch between correlation and variances");
  }
  const auto sd = variances.std_devs();
  SymmetricMatrix out(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      out.set(i, j, sd[i] * p(i, j) * sd[j]);
    }
    out.set(i, i, variances[i]);
  }
  return out;
}

SymmetricMatrix principal_submatrix(const SymmetricMatrix& s,
                                    std::span<const std::size_t> indices) {
  if (indices.empty()) {
    throw IndexOutOfRange("index set is empty");
  }
  std::vector<bool> seen(s.dim(), false);
  for (std::size_t idx : indices) {
    if (idx >= s.dim()) {
      throw IndexOutOfRange("index " + std::to_string(idx) +
                            " out of range for dimension " +
                            std::to_string(s.dim()));
    }
    if (seen[idx]) {
      throw IndexOutOfRange("index " + std::to_string(idx) + " repeated");
    }
    seen[idx] = true;
  }
  SymmetricMatrix out(indices.size());
  for (std::size_t a = 0; a < indices.size(); ++a) {
    for (std::size_t b = 0; b <= a; ++b) {
      out.set(a, b, s(indices[a], indices[b]));
    }
  }
  return out;
}

SymmetricMatrix delete_index(const SymmetricMatrix& s, std::size_t index) {
  if (index >= s.dim() || s.dim() < 2) {
    throw IndexOutOfRange("cannot delete index " + std::to_string(index) +
                          " from dimension " + std::to_string(s.dim()));
  }
  std::vector<std::size_t> keep;
  keep.reserve(s.dim() - 1);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (i != index) {
      keep.push_back(i);
    }
  }
  return principal_submatrix(s, keep);
}

}  // namespace corrmat
