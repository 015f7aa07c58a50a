// Copyright 2026 The corrmat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "corrmat/matrix.hpp"
#include "corrmat/random_stream.hpp"

namespace corrmat {

enum class Method { kRw, kRiw, kOnion };

std::string_view to_string(Method method) noexcept;
/// Accepts "rw", "riw", "onion" (and "lkj" as an alias for onion).
std::optional<Method> parse_method(std::string_view name) noexcept;

/// Counts draws discarded because an off-diagonal reached |rho| = 1 in
/// floating point.
struct SamplerStats {
  std::size_t retries = 0;
};

/// Bartlett factor A of a W_T(m, I) draw: diagonal i (1-based) is the root
/// of a chi-square with m - i + 1 degrees of freedom, strict lower entries
/// are standard normals. Row by row, the normals of a row are drawn before
/// its diagonal.
LowerTriangularFactor sample_bartlett_factor(std::size_t dim, double dof,
                                             RandomStream& rng);

/// Restricted Wishart draw: correlation matrix of A * A'.
CorrelationMatrix sample_rw_correlation(std::size_t dim, double dof,
                                        RandomStream& rng,
                                        SamplerStats* stats = nullptr);

/// Restricted inverse-Wishart draw: correlation matrix of B' * B, B = A^-1.
CorrelationMatrix sample_riw_correlation(std::size_t dim, double dof,
                                         RandomStream& rng,
                                         SamplerStats* stats = nullptr);

/// LKJ(eta) draw by the onion method, grown one dimension at a time in
/// Cholesky form.
CorrelationMatrix sample_onion_correlation(std::size_t dim, double eta,
                                           RandomStream& rng,
                                           SamplerStats* stats = nullptr);

/// W_T(m, Psi) draw as (L A)(L A)' with L the Cholesky factor of Psi.
SymmetricMatrix sample_wishart(std::size_t dim, double dof,
                               const SymmetricMatrix& psi, RandomStream& rng);

/// IW_T(m, Psi) draw: the inverse of a W_T(m, Psi^-1) draw.
SymmetricMatrix sample_inverse_wishart(std::size_t dim, double dof,
                                       const SymmetricMatrix& psi,
                                       RandomStream& rng);

/// Draws from `method` with its native parameter: m for RW/RIW, eta for onion.
CorrelationMatrix sample_correlation(Method method, std::size_t dim,
                                     double param, RandomStream& rng,
                                     SamplerStats* stats = nullptr);

struct SampleBatch {
  std::size_t dim;
  Method method;
  /// m for RW/RIW, eta for onion.
  double param;
  std::uint64_t seed;
  std::size_t retries = 0;
  std::vector<CorrelationMatrix> matrices;

  std::size_t count() const noexcept { return matrices.size(); }
};

/// n draws; draw i uses RandomStream(seed).split(i), so every matrix is
/// independent of the order in which the batch is produced.
SampleBatch sample_batch(Method method, std::size_t dim, double param,
                         std::size_t n, std::uint64_t seed);

}  // namespace corrmat
