// Copyright 2026 The corrmat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "corrmat/matrix.hpp"
#include "corrmat/samplers.hpp"

namespace corrmat {

// ---------------------------------------------------------------------------
// Kolmogorov-Smirnov tests
// ---------------------------------------------------------------------------

struct KsResult {
  double statistic;
  double p_value;
  std::size_t n;
  /// Second sample size; zero for the one-sample test.
  std::size_t n2 = 0;
};

/// P(K > lambda) for the limiting Kolmogorov distribution.
double kolmogorov_survival(double lambda);

/// One-sample test against a continuous reference CDF. Requires n >= 10.
KsResult ks_one_sample(std::span<const double> xs,
                       const std::function<double(double)>& cdf);

/// Two-sample test; the p-value uses the effective size n*n2/(n+n2).
KsResult ks_two_sample(std::span<const double> xs, std::span<const double> ys);

/// Significance level every statistical acceptance check is held to.
inline constexpr double kKsAlpha = 1e-3;

/// Runs `test` with `seed`; if it fails at kKsAlpha, runs it once more with
/// repeat_seed(seed). Returns the result that decided the outcome.
KsResult ks_with_repeat(const std::function<KsResult(std::uint64_t)>& test,
                        std::uint64_t seed);
std::uint64_t repeat_seed(std::uint64_t seed) noexcept;

// ---------------------------------------------------------------------------
// Reference distributions
// ---------------------------------------------------------------------------

/// CDF at rho of the law of 2X - 1 with X ~ Beta(a, a).
double beta_cdf_on_interval(double rho, double a);
double beta_cdf(double x, double a, double b);
/// Chi-square CDF with k degrees of freedom.
double chi_square_cdf(double x, double k);
/// InverseGamma(shape, scale) CDF, density proportional to
/// x^(-shape-1) exp(-scale/x).
double inverse_gamma_cdf(double x, double shape, double scale);

// ---------------------------------------------------------------------------
// Jacobian determinants
// ---------------------------------------------------------------------------

struct JacobianCheck {
  double closed_form_log;
  double numeric_log;
  /// |closed - numeric| / max(1, |closed|)
  double rel_error;
};

/// log|J| of Sigma -> (sigma_11..sigma_TT, rho_ij): closed form
/// -((T-1)/2) sum ln sigma_ii against a central-difference Jacobian.
/// Requires 2 <= T <= 4.
JacobianCheck jacobian_check_sigma_to_corr(const SymmetricMatrix& sigma);

/// log|J| of (sigma_ii) -> (delta_i = sqrt(sigma_ii)): closed form
/// -T ln 2 - (1/2) sum ln sigma_ii against central differences.
JacobianCheck jacobian_check_var_to_sd(const VarianceVector& sigmas);

/// log|det A| of a dense row-major n x n matrix by partially pivoted LU.
double log_abs_det(std::vector<double> a, std::size_t n);

// ---------------------------------------------------------------------------
// Moments
// ---------------------------------------------------------------------------

struct PairMoments {
  std::size_t i;
  std::size_t j;
  double mean;
  double mean_se;
  double variance;
  double variance_se;
};

struct MomentReport {
  std::size_t n;
  /// One entry per (i, j), i > j, row-major.
  std::vector<PairMoments> pairs;
  double mean_log_det;
  double mean_log_det_se;
  /// Present only when variances were supplied: entry [v][p] is the sample
  /// correlation between sigma_vv and the p-th pair's rho.
  std::vector<std::vector<double>> sigma_rho_correlation;
};

/// Requires at least 100 matrices.
MomentReport moment_report(std::span<const CorrelationMatrix> matrices,
                           std::span<const VarianceVector> variances = {});
MomentReport moment_report(const SampleBatch& batch);

/// Pearson correlation of two equally sized samples.
double pearson_correlation(std::span<const double> xs,
                           std::span<const double> ys);

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

/// Deliberate corruptions used to prove that the suites can fail.
struct Perturbation {
  /// Added to ln c_d wherever the suites evaluate the LKJ constant.
  double lkj_log_constant_offset = 0.0;
  /// Added to eta when the suites draw from the onion sampler.
  double onion_eta_shift = 0.0;
};

struct CheckResult {
  std::string suite;
  std::string name;
  std::size_t dim = 0;
  /// eta, m, or another grid coordinate; NaN when not applicable.
  double param = 0.0;
  double value = 0.0;
  double threshold = 0.0;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool passed() const noexcept;
  void append(const ValidationReport& other);
  /// Canonical order: suite, then (dim, param), then name.
  void sort();
};

struct TheoremSuiteConfig {
  /// Dimensions of the constant identity check.
  std::size_t constant_max_dim = 50;
  std::vector<double> dof_offsets{0.5, 1.0, 2.0, 10.0};
  std::vector<std::size_t> density_dims{2, 3, 5, 10, 25};
  std::vector<double> density_etas{0.5, 1.0, 2.0, 7.0};
  std::size_t density_samples = 200;
  std::vector<std::size_t> ks_dims{2, 5, 8};
  std::vector<double> ks_etas{0.5, 1.0, 2.5};
  std::size_t ks_samples = 10000;
};

/// |log f(T, m)| and the constant identity through ln c_d, plus the
/// duplication formula on a 1000-point grid over (1, 200].
ValidationReport constants_suite(std::uint64_t seed,
                                 const Perturbation& perturbation = {},
                                 const TheoremSuiteConfig& config = {});

/// (a) constant identity, (b) pointwise RW/LKJ density equality on sampled
/// matrices, (c) two-sample KS between RW and onion draws.
ValidationReport theorem_suite(std::uint64_t seed,
                               const Perturbation& perturbation = {},
                               const TheoremSuiteConfig& config = {});

/// Marginal laws: RW and RIW rho marginals, inverse-gamma variances of the
/// IW path, and the variance/correlation factorization of the Wishart path.
ValidationReport marginals_suite(std::uint64_t seed);

/// Jacobian determinants on 100 random inputs at T in {2, 3}.
ValidationReport jacobians_suite(std::uint64_t seed);

}  // namespace corrmat
