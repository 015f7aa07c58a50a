// Copyright 2026 The corrmat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>

namespace corrmat {

/// LKJ parameters: dimension d and shape eta > 0.
struct LkjParams {
  std::size_t d;
  double eta;
};

/// Restricted Wishart parameters: dimension T and degrees of freedom m > T-1.
struct RwParams {
  std::size_t dim;
  double dof;
};

/// Throws DomainError unless d >= 1 and eta > 0.
void validate(const LkjParams& p);
/// Throws DomainError unless T >= 1 and m > T - 1.
void validate(const RwParams& p);

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// ln Gamma_T(x) = T(T-1)/4 ln(pi) + sum_{k=1}^T ln Gamma(x + (1-k)/2).
/// Requires x > (T-1)/2.
double log_multivariate_gamma(std::size_t dim, double x);

/// ln B(a, b).
double log_beta_function(double a, double b);

/// ln c_d, the LKJ normalizing constant, evaluated entirely in log space.
double log_lkj_constant(const LkjParams& p);

/// ln f(T, m) in the simplified product form; the equivalence of the
/// restricted Wishart and LKJ laws makes this identically zero.
double log_f_constant(std::size_t dim, double dof);

/// Residual of the gamma duplication formula written as the T = 2 case:
/// (m-2) ln 2 - ln(pi)/2 + ln G(m/2) + ln G((m-1)/2) - ln G(m-1). Requires m > 1.
double duplication_residual(double m);

/// Absolute tolerance for |log_f_constant(T, m)|: 1e-12 per log-gamma term
/// in the product, floored at 1e-10.
double log_f_tolerance(std::size_t dim);

/// eta = (m - T + 1) / 2
double dof_to_eta(std::size_t dim, double dof);
/// m = 2 eta + d - 1
double eta_to_dof(std::size_t dim, double eta);

}  // namespace corrmat
