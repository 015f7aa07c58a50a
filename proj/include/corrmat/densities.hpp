// Copyright 2026 The corrmat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "corrmat/matrix.hpp"

namespace corrmat {

/// Natural-log density value. `normalized` is false when only the kernel
/// (density up to a constant) is available.
struct LogDensity {
  double value;
  bool normalized;
};

/// W_T(K, Sigma) at S, fully normalized.
LogDensity wishart_log_density(const SymmetricMatrix& s, double dof,
                               const SymmetricMatrix& sigma);

/// IW_T(m, Psi) at Sigma, normalized with the Wishart constant carried
/// through the Sigma -> Sigma^-1 change of variables:
/// (m/2) ln|Psi| - (mT/2) ln 2 - ln Gamma_T(m/2) - ((m+T+1)/2) ln|Sigma|
///   - tr(Psi Sigma^-1) / 2.
LogDensity inverse_wishart_log_density(const SymmetricMatrix& sigma,
                                       double dof, const SymmetricMatrix& psi);

/// Restricted Wishart RW_T(m) density of P.
LogDensity rw_log_density(const CorrelationMatrix& p, double dof);

/// LKJ(eta) density of P.
LogDensity lkj_log_density(const CorrelationMatrix& p, double eta);

/// Restricted inverse-Wishart RIW_T(m) kernel (unnormalized):
/// (((m-1)(T-1))/2 - 1) ln|P| - (m/2) sum_i ln|P_(-i)|, where P_(-i) deletes
/// row and column i.
LogDensity riw_log_density(const CorrelationMatrix& p, double dof);

/// Density of one off-diagonal entry rho when (rho + 1)/2 ~ Beta(a, a).
double marginal_rho_log_density(double rho, double a);

}  // namespace corrmat
