// Copyright 2026 The corrmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "corrmat/densities.hpp"

#include <cmath>
#include <numbers>

#include "corrmat/errors.hpp"
#include "corrmat/special_functions.hpp"

namespace corrmat {

namespace {

double log_det_from_factor(const LowerTriangularFactor& l) {
  double out = 0.0;
  for (std::size_t i = 0; i < l.dim(); ++i) {
    out += std::log(l(i, i));
  }
  return 2.0 * out;
}

// tr((L L')^-1 R R') = ||L^-1 R||_F^2, by forward substitution per column.
double trace_of_solve(const LowerTriangularFactor& l,
                      const LowerTriangularFactor& r) {
  const std::size_t n = l.dim();
  std::vector<double> z(n);
  double out = 0.0;
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i < col) {
        z[i] = 0.0;
        continue;
      }
      double sum = r(i, col);
      for (std::size_t k = col; k < i; ++k) {
        sum -= l(i, k) * z[k];
      }
      z[i] = sum / l(i, i);
      out += z[i] * z[i];
    }
  }
  return out;
}

void require_same_dim(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DomainError("matrix dimensions do not match");
  }
}

}  // namespace

LogDensity wishart_log_density(const SymmetricMatrix& s, double dof,
                               const SymmetricMatrix& sigma) {
  require_same_dim(s, sigma);
  const std::size_t dim = s.dim();
  validate(RwParams{dim, dof});
  const double t = static_cast<double>(dim);
  const auto ls = cholesky(s);
  const auto lsigma = cholesky(sigma);
  const double value = -0.5 * dof * t * std::numbers::ln2 -
                       log_multivariate_gamma(dim, dof / 2.0) -
                       0.5 * dof * log_det_from_factor(lsigma) +
                       0.5 * (dof - t - 1.0) * log_det_from_factor(ls) -
                       0.5 * trace_of_solve(lsigma, ls);
  return {value, true};
}

LogDensity inverse_wishart_log_density(const SymmetricMatrix& sigma,
                                       double dof, const SymmetricMatrix& psi) {
  require_same_dim(sigma, psi);
  const std::size_t dim = sigma.dim();
  validate(RwParams{dim, dof});
  const double t = static_cast<double>(dim);
  const auto lsigma = cholesky(sigma);
  const auto lpsi = cholesky(psi);
  const double value = 0.5 * dof * log_det_from_factor(lpsi) -
                       0.5 * dof * t * std::numbers::ln2 -
                       log_multivariate_gamma(dim, dof / 2.0) -
                       0.5 * (dof + t + 1.0) * log_det_from_factor(lsigma) -
                       0.5 * trace_of_solve(lsigma, lpsi);
  return {value, true};
}

LogDensity rw_log_density(const CorrelationMatrix& p, double dof) {
  const std::size_t dim = p.dim();
  validate(RwParams{dim, dof});
  const double t = static_cast<double>(dim);
  const double value = t * log_gamma(dof / 2.0) -
                       log_multivariate_gamma(dim, dof / 2.0) +
                       0.5 * (dof - t - 1.0) * log_det_spd(p.matrix());
  return {value, true};
}

LogDensity lkj_log_density(const CorrelationMatrix& p, double eta) {
  const std::size_t dim = p.dim();
  const double value = -log_lkj_constant(LkjParams{dim, eta}) +
                       (eta - 1.0) * log_det_spd(p.matrix());
  return {value, true};
}

LogDensity riw_log_density(const CorrelationMatrix& p, double dof) {
  const std::size_t dim = p.dim();
  validate(RwParams{dim, dof});
  if (dim == 1) {
    return {0.0, false};
  }
  const double t = static_cast<double>(dim);
  double minors = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    minors += log_det_spd(delete_index(p.matrix(), i));
  }
  const double value = (0.5 * (dof - 1.0) * (t - 1.0) - 1.0) *
                           log_det_spd(p.matrix()) -
                       0.5 * dof * minors;
  return {value, false};
}

double marginal_rho_log_density(double rho, double a) {
  if (!(std::abs(rho) < 1.0)) {
    throw DomainError("marginal density requires |rho| < 1");
  }
  if (!(a > 0.0)) {
    throw DomainError("marginal density requires a > 0");
  }
  return (a - 1.0) * std::log1p(-rho * rho) - log_beta_function(a, a) -
         (2.0 * a - 1.0) * std::numbers::ln2;
}

}  // namespace corrmat
