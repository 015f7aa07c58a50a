// Copyright 2026 The corrmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "corrmat/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "corrmat/errors.hpp"
#include "corrmat/special_functions.hpp"

namespace corrmat {

namespace {

// Draws with |rho| = 1 in floating point are discarded; this bounds the
// number of attempts for pathological parameters.
constexpr std::size_t kMaxAttempts = 1000;

template <typename Draw>
CorrelationMatrix with_retries(Draw&& draw, SamplerStats* stats) {
  for (std::size_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
    try {
      return draw();
    } catch (const NotPositiveDefinite&) {
      if (stats != nullptr) {
        ++stats->retries;
      }
    }
  }
  throw DomainError("sampler produced only degenerate matrices after " +
                    std::to_string(kMaxAttempts) + " attempts");
}

// Rescales a covariance matrix to a correlation matrix in place. Draws whose
// Cholesky factorization fails numerically are rejected.
CorrelationMatrix normalize_covariance(SymmetricMatrix s) {
  const std::size_t n = s.dim();
  auto data = s.packed();
  std::vector<double> inv_sd(n);
  for (std::size_t i = 0; i < n; ++i) {
    inv_sd[i] = 1.0 / std::sqrt(data[packed_index(i, i)]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    double* row = data.data() + packed_index(i, 0);
    for (std::size_t j = 0; j < i; ++j) {
      row[j] *= inv_sd[i] * inv_sd[j];
      if (!(std::abs(row[j]) < 1.0)) {
        throw NotPositiveDefinite(i);
      }
    }
    row[i] = 1.0;
  }
  return CorrelationMatrix::from_symmetric(std::move(s));
}

}  // namespace

std::string_view to_string(Method method) noexcept {
  switch (method) {
    case Method::kRw:
      return "rw";
    case Method::kRiw:
      return "riw";
    case Method::kOnion:
      return "onion";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) noexcept {
  if (name == "rw") return Method::kRw;
  if (name == "riw") return Method::kRiw;
  if (name == "onion" || name == "lkj") return Method::kOnion;
  return std::nullopt;
}

LowerTriangularFactor sample_bartlett_factor(std::size_t dim, double dof,
                                             RandomStream& rng) {
  validate(RwParams{dim, dof});
  LowerTriangularFactor a(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      a.at_lower(i, j) = rng.normal();
    }
    a.at_lower(i, i) = std::sqrt(rng.chi_square(dof - static_cast<double>(i)));
  }
  return a;
}

CorrelationMatrix sample_rw_correlation(std::size_t dim, double dof,
                                        RandomStream& rng,
                                        SamplerStats* stats) {
  validate(RwParams{dim, dof});
  return with_retries(
      [&] {
        return normalize_covariance(
            sample_bartlett_factor(dim, dof, rng).times_transpose());
      },
      stats);
}

CorrelationMatrix sample_riw_correlation(std::size_t dim, double dof,
                                         RandomStream& rng,
                                         SamplerStats* stats) {
  validate(RwParams{dim, dof});
  return with_retries(
      [&] {
        const auto b = invert_lower_triangular(sample_bartlett_factor(dim, dof, rng));
        return normalize_covariance(b.transpose_times());
      },
      stats);
}

CorrelationMatrix sample_onion_correlation(std::size_t dim, double eta,
                                           RandomStream& rng,
                                           SamplerStats* stats) {
  validate(LkjParams{dim, eta});
  return with_retries(
      [&] {
        // Row k of the Cholesky factor is (sqrt(y) w, sqrt(1 - y)) with
        // y ~ Beta(k/2, b_k) and w uniform on the unit sphere in R^k.
        LowerTriangularFactor l(dim);
        l.at_lower(0, 0) = 1.0;
        double b = eta + (static_cast<double>(dim) - 2.0) / 2.0;
        if (dim > 1) {
          const double r = 2.0 * rng.beta(b, b) - 1.0;
          l.at_lower(1, 0) = r;
          l.at_lower(1, 1) = std::sqrt(1.0 - r * r);
        }
        for (std::size_t k = 2; k < dim; ++k) {
          b -= 0.5;
          const double y = rng.beta(static_cast<double>(k) / 2.0, b);
          double norm2 = 0.0;
          for (std::size_t j = 0; j < k; ++j) {
            const double z = rng.normal();
            l.at_lower(k, j) = z;
            norm2 += z * z;
          }
          const double scale = std::sqrt(y / norm2);
          for (std::size_t j = 0; j < k; ++j) {
            l.at_lower(k, j) *= scale;
          }
          l.at_lower(k, k) = std::sqrt(1.0 - y);
        }
        SymmetricMatrix p = l.times_transpose();
        for (std::size_t i = 0; i < dim; ++i) {
          for (std::size_t j = 0; j < i; ++j) {
            if (!(std::abs(p(i, j)) < 1.0)) {
              throw NotPositiveDefinite(i);
            }
          }
          p.set(i, i, 1.0);
        }
        return CorrelationMatrix::from_symmetric(std::move(p));
      },
      stats);
}

SymmetricMatrix sample_wishart(std::size_t dim, double dof,
                               const SymmetricMatrix& psi, RandomStream& rng) {
  if (psi.dim() != dim) {
    throw DomainError("scale matrix dimension does not match T");
  }
  const LowerTriangularFactor l = cholesky(psi);
  const LowerTriangularFactor a = sample_bartlett_factor(dim, dof, rng);
  // L * A is lower triangular.
  LowerTriangularFactor la(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double sum = 0.0;
      for (std::size_t k = j; k <= i; ++k) {
        sum += l(i, k) * a(k, j);
      }
      la.at_lower(i, j) = sum;
    }
  }
  return la.times_transpose();
}

SymmetricMatrix sample_inverse_wishart(std::size_t dim, double dof,
                                       const SymmetricMatrix& psi,
                                       RandomStream& rng) {
  if (psi.dim() != dim) {
    throw DomainError("scale matrix dimension does not match T");
  }
  // With Psi = L L', W = L'^-1 A A' L^-1 ~ W_T(m, Psi^-1), so
  // W^-1 = (L B')(L B')' where B = A^-1.
  const LowerTriangularFactor l = cholesky(psi);
  const LowerTriangularFactor b =
      invert_lower_triangular(sample_bartlett_factor(dim, dof, rng));
  std::vector<double> c(dim * dim, 0.0);  // C = L B', row-major dense
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      double sum = 0.0;
      const std::size_t upper = std::min(i, j);
      for (std::size_t k = 0; k <= upper; ++k) {
        sum += l(i, k) * b(j, k);
      }
      c[i * dim + j] = sum;
    }
  }
  SymmetricMatrix out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double sum = 0.0;
      for (std::size_t k = 0; k < dim; ++k) {
        sum += c[i * dim + k] * c[j * dim + k];
      }
      out.set(i, j, sum);
    }
  }
  return out;
}

CorrelationMatrix sample_correlation(Method method, std::size_t dim,
                                     double param, RandomStream& rng,
                                     SamplerStats* stats) {
  switch (method) {
    case Method::kRw:
      return sample_rw_correlation(dim, param, rng, stats);
    case Method::kRiw:
      return sample_riw_correlation(dim, param, rng, stats);
    case Method::kOnion:
      return sample_onion_correlation(dim, param, rng, stats);
  }
  throw DomainError("unknown sampling method");
}

SampleBatch sample_batch(Method method, std::size_t dim, double param,
                         std::size_t n, std::uint64_t seed) {
  if (n < 1) {
    throw DomainError("batch size must be at least 1");
  }
  SampleBatch batch{dim, method, param, seed, 0, {}};
  batch.matrices.reserve(n);
  const RandomStream root(seed);
  SamplerStats stats;
  for (std::size_t i = 0; i < n; ++i) {
    RandomStream rng = root.split(i);
    batch.matrices.push_back(sample_correlation(method, dim, param, rng, &stats));
  }
  batch.retries = stats.retries;
  return batch;
}

}  // namespace corrmat
