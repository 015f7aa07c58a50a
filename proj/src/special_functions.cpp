// Copyright 2026 The corrmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "corrmat/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "corrmat/errors.hpp"

namespace corrmat {

namespace {

const double kLn2 = std::numbers::ln2;
const double kLnPi = std::log(std::numbers::pi);

}  // namespace

void validate(const LkjParams& p) {
  if (p.d < 1) {
    throw DomainError("LKJ dimension must be at least 1");
  }
  if (!(p.eta > 0.0) || !std::isfinite(p.eta)) {
    throw DomainError("LKJ shape eta must be positive, got " +
                      std::to_string(p.eta));
  }
}

void validate(const RwParams& p) {
  if (p.dim < 1) {
    throw DomainError("dimension must be at least 1");
  }
  if (!(p.dof > static_cast<double>(p.dim) - 1.0) || !std::isfinite(p.dof)) {
    throw DomainError("degrees of freedom must exceed T-1 = " +
                      std::to_string(p.dim - 1) + ", got " +
                      std::to_string(p.dof));
  }
}

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("log_gamma requires x > 0, got " + std::to_string(x));
  }
  return boost::math::lgamma(x);
}

double log_multivariate_gamma(std::size_t dim, double x) {
  if (dim < 1) {
    throw DomainError("log_multivariate_gamma requires T >= 1");
  }
  if (!(x > (static_cast<double>(dim) - 1.0) / 2.0)) {
    throw DomainError("log_multivariate_gamma requires x > (T-1)/2");
  }
  const double t = static_cast<double>(dim);
  double out = t * (t - 1.0) / 4.0 * kLnPi;
  for (std::size_t k = 1; k <= dim; ++k) {
    out += log_gamma(x + (1.0 - static_cast<double>(k)) / 2.0);
  }
  return out;
}

double log_beta_function(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw DomainError("log_beta_function requires a, b > 0");
  }
  return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

double log_lkj_constant(const LkjParams& p) {
  validate(p);
  const double d = static_cast<double>(p.d);
  double power_of_two = 0.0;
  double beta_terms = 0.0;
  for (std::size_t k = 1; k < p.d; ++k) {
    const double dk = d - static_cast<double>(k);
    power_of_two += (2.0 * p.eta - 2.0 + dk) * dk;
    const double arg = p.eta + (dk - 1.0) / 2.0;
    beta_terms += dk * log_beta_function(arg, arg);
  }
  return kLn2 * power_of_two + beta_terms;
}

double log_f_constant(std::size_t dim, double dof) {
  validate(RwParams{dim, dof});
  const double t = static_cast<double>(dim);
  const double lg_half_m = log_gamma(dof / 2.0);
  double out = 0.0;
  for (std::size_t k = 1; k < dim; ++k) {
    const double kd = static_cast<double>(k);
    out += (dof - kd - 1.0) * (t - kd) * kLn2 + lg_half_m - t / 4.0 * kLnPi +
           (2.0 * t - 2.0 * kd - 1.0) * log_gamma((dof - kd) / 2.0) -
           (t - kd) * log_gamma(dof - kd);
  }
  return out;
}

double duplication_residual(double m) {
  if (!(m > 1.0)) {
    throw DomainError("duplication_residual requires m > 1");
  }
  return (m - 2.0) * kLn2 - 0.5 * kLnPi + log_gamma(m / 2.0) +
         log_gamma((m - 1.0) / 2.0) - log_gamma(m - 1.0);
}

double log_f_tolerance(std::size_t dim) {
  // Each factor of the product contributes three log-gamma evaluations.
  const double terms = 3.0 * static_cast<double>(dim > 0 ? dim - 1 : 0);
  return std::max(1e-10, 1e-12 * terms);
}

double dof_to_eta(std::size_t dim, double dof) {
  validate(RwParams{dim, dof});
  return (dof - static_cast<double>(dim) + 1.0) / 2.0;
}

double eta_to_dof(std::size_t dim, double eta) {
  validate(LkjParams{dim, eta});
  return 2.0 * eta + static_cast<double>(dim) - 1.0;
}

}  // namespace corrmat
