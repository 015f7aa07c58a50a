// Copyright 2026 The corrmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "corrmat/validation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <tuple>

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "corrmat/densities.hpp"
#include "corrmat/errors.hpp"
#include "corrmat/special_functions.hpp"

namespace corrmat {

// ---------------------------------------------------------------------------
// Kolmogorov-Smirnov
// ---------------------------------------------------------------------------

double kolmogorov_survival(double lambda) {
  if (!(lambda > 0.0)) {
    return 1.0;
  }
  constexpr int kTerms = 100;
  double out;
  if (lambda < 1.18) {
    // Small-lambda form: 1 - sqrt(2 pi)/lambda sum exp(-(2k-1)^2 pi^2/(8 lambda^2)).
    const double w = std::numbers::pi * std::numbers::pi / (8.0 * lambda * lambda);
    double sum = 0.0;
    for (int k = 1; k <= kTerms; ++k) {
      const double term = std::exp(-static_cast<double>((2 * k - 1) * (2 * k - 1)) * w);
      sum += term;
      if (term < 1e-300) break;
    }
    out = 1.0 - std::sqrt(2.0 * std::numbers::pi) / lambda * sum;
  } else {
    // 2 sum (-1)^(k-1) exp(-2 k^2 lambda^2)
    double sum = 0.0;
    double sign = 1.0;
    for (int k = 1; k <= kTerms; ++k) {
      const double term = std::exp(-2.0 * k * k * lambda * lambda);
      sum += sign * term;
      sign = -sign;
      if (term < 1e-300) break;
    }
    out = 2.0 * sum;
  }
  return std::clamp(out, 0.0, 1.0);
}

KsResult ks_one_sample(std::span<const double> xs,
                       const std::function<double(double)>& cdf) {
  constexpr std::size_t kMinSamples = 10;
  if (xs.size() < kMinSamples) {
    throw TooFewSamples(xs.size(), kMinSamples);
  }
  std::vector<double> sorted(xs.begin(), xs.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    const double di = static_cast<double>(i);
    d = std::max({d, (di + 1.0) / n - f, f - di / n});
  }
  return {d, kolmogorov_survival(std::sqrt(n) * d), sorted.size(), 0};
}

KsResult ks_two_sample(std::span<const double> xs, std::span<const double> ys) {
  constexpr std::size_t kMinSamples = 10;
  if (xs.size() < kMinSamples) {
    throw TooFewSamples(xs.size(), kMinSamples);
  }
  if (ys.size() < kMinSamples) {
    throw TooFewSamples(ys.size(), kMinSamples);
  }
  std::vector<double> a(xs.begin(), xs.end());
  std::vector<double> b(ys.begin(), ys.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == x) ++i;
    while (j < b.size() && b[j] == x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na -
                             static_cast<double>(j) / nb));
  }
  const double ne = na * nb / (na + nb);
  return {d, kolmogorov_survival(std::sqrt(ne) * d), a.size(), b.size()};
}

std::uint64_t repeat_seed(std::uint64_t seed) noexcept {
  return RandomStream(seed, 0x5245504541543031ULL).next_u64();
}

KsResult ks_with_repeat(const std::function<KsResult(std::uint64_t)>& test,
                        std::uint64_t seed) {
  const KsResult first = test(seed);
  if (first.p_value > kKsAlpha) {
    return first;
  }
  return test(repeat_seed(seed));
}

// ---------------------------------------------------------------------------
// Reference distributions
// ---------------------------------------------------------------------------

double beta_cdf(double x, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw DomainError("beta_cdf requires a, b > 0");
  }
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return boost::math::ibeta(a, b, x);
}

double beta_cdf_on_interval(double rho, double a) {
  if (!(a > 0.0)) {
    throw DomainError("beta_cdf_on_interval requires a > 0");
  }
  return beta_cdf((rho + 1.0) / 2.0, a, a);
}

double chi_square_cdf(double x, double k) {
  if (!(k > 0.0) || !(x >= 0.0)) {
    throw DomainError("chi_square_cdf requires x >= 0 and k > 0");
  }
  if (x == 0.0) return 0.0;
  return boost::math::gamma_p(k / 2.0, x / 2.0);
}

double inverse_gamma_cdf(double x, double shape, double scale) {
  if (!(shape > 0.0) || !(scale > 0.0)) {
    throw DomainError("inverse_gamma_cdf requires shape, scale > 0");
  }
  if (x <= 0.0) return 0.0;
  return boost::math::gamma_q(shape, scale / x);
}

// ---------------------------------------------------------------------------
// Jacobians
// ---------------------------------------------------------------------------

double log_abs_det(std::vector<double> a, std::size_t n) {
  double out = 0.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) {
        pivot = r;
      }
    }
    if (a[pivot * n + col] == 0.0) {
      return -std::numeric_limits<double>::infinity();
    }
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a[pivot * n + c], a[col * n + c]);
      }
    }
    const double diag = a[col * n + col];
    out += std::log(std::abs(diag));
    for (std::size_t r = col + 1; r < n; ++r) {
      const double factor = a[r * n + col] / diag;
      for (std::size_t c = col; c < n; ++c) {
        a[r * n + c] -= factor * a[col * n + c];
      }
    }
  }
  return out;
}

namespace {

double relative_error(double closed, double numeric) {
  return std::abs(closed - numeric) / std::max(1.0, std::abs(closed));
}

// Coordinates: variances first, then strictly-lower entries row-major.
std::vector<double> to_coordinates(const SymmetricMatrix& s) {
  std::vector<double> out;
  for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(s(i, i));
  for (std::size_t i = 1; i < s.dim(); ++i) {
    for (std::size_t j = 0; j < i; ++j) out.push_back(s(i, j));
  }
  return out;
}

SymmetricMatrix from_coordinates(std::span<const double> x, std::size_t dim) {
  SymmetricMatrix s(dim);
  std::size_t k = 0;
  for (std::size_t i = 0; i < dim; ++i) s.set(i, i, x[k++]);
  for (std::size_t i = 1; i < dim; ++i) {
    for (std::size_t j = 0; j < i; ++j) s.set(i, j, x[k++]);
  }
  return s;
}

std::vector<double> variance_correlation_map(const SymmetricMatrix& s) {
  std::vector<double> out;
  for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(s(i, i));
  for (std::size_t i = 1; i < s.dim(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      out.push_back(s(i, j) / std::sqrt(s(i, i) * s(j, j)));
    }
  }
  return out;
}

}  // namespace

JacobianCheck jacobian_check_sigma_to_corr(const SymmetricMatrix& sigma) {
  const std::size_t dim = sigma.dim();
  if (dim < 2 || dim > 4) {
    throw DomainError("jacobian_check_sigma_to_corr supports 2 <= T <= 4");
  }
  cholesky(sigma);
  const std::vector<double> x0 = to_coordinates(sigma);
  const std::size_t n = x0.size();
  std::vector<double> jac(n * n);
  for (std::size_t col = 0; col < n; ++col) {
    const double h = 1e-5 * (1.0 + std::abs(x0[col]));
    std::vector<double> plus = x0;
    std::vector<double> minus = x0;
    plus[col] += h;
    minus[col] -= h;
    const auto gp = variance_correlation_map(from_coordinates(plus, dim));
    const auto gm = variance_correlation_map(from_coordinates(minus, dim));
    for (std::size_t row = 0; row < n; ++row) {
      jac[row * n + col] = (gp[row] - gm[row]) / (2.0 * h);
    }
  }
  double closed = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    closed += std::log(sigma(i, i));
  }
  closed *= -0.5 * (static_cast<double>(dim) - 1.0);
  const double numeric = log_abs_det(std::move(jac), n);
  return {closed, numeric, relative_error(closed, numeric)};
}

JacobianCheck jacobian_check_var_to_sd(const VarianceVector& sigmas) {
  double closed = -static_cast<double>(sigmas.dim()) * std::numbers::ln2;
  double numeric = 0.0;
  for (double s : sigmas.values()) {
    closed -= 0.5 * std::log(s);
    const double h = 1e-5 * s;
    numeric += std::log((std::sqrt(s + h) - std::sqrt(s - h)) / (2.0 * h));
  }
  return {closed, numeric, relative_error(closed, numeric)};
}

// ---------------------------------------------------------------------------
// Moments
// ---------------------------------------------------------------------------

namespace {

struct Summary {
  double mean;
  double mean_se;
  double variance;
  double variance_se;
};

Summary summarize(std::span<const double> xs) {
  const double n = static_cast<double>(xs.size());
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= n;
  double m2 = 0.0;
  double m4 = 0.0;
  for (double x : xs) {
    const double d2 = (x - mean) * (x - mean);
    m2 += d2;
    m4 += d2 * d2;
  }
  const double variance = m2 / (n - 1.0);
  m4 /= n;
  const double pop_var = m2 / n;
  return {mean, std::sqrt(variance / n), variance,
          std::sqrt(std::max(0.0, m4 - pop_var * pop_var) / n)};
}

}  // namespace

double pearson_correlation(std::span<const double> xs,
                           std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw DomainError("pearson_correlation needs two equal samples of size >= 2");
  }
  const double n = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

MomentReport moment_report(std::span<const CorrelationMatrix> matrices,
                           std::span<const VarianceVector> variances) {
  constexpr std::size_t kMinSamples = 100;
  if (matrices.size() < kMinSamples) {
    throw TooFewSamples(matrices.size(), kMinSamples);
  }
  if (!variances.empty() && variances.size() != matrices.size()) {
    throw DomainError("variances must pair one-to-one with matrices");
  }
  const std::size_t dim = matrices.front().dim();
  MomentReport report{matrices.size(), {}, 0.0, 0.0, {}};
  std::vector<std::vector<double>> rho_columns;
  std::vector<double> column(matrices.size());
  for (std::size_t i = 1; i < dim; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      for (std::size_t s = 0; s < matrices.size(); ++s) {
        column[s] = matrices[s](i, j);
      }
      const Summary sum = summarize(column);
      report.pairs.push_back(
          {i, j, sum.mean, sum.mean_se, sum.variance, sum.variance_se});
      if (!variances.empty()) {
        rho_columns.push_back(column);
      }
    }
  }
  for (std::size_t s = 0; s < matrices.size(); ++s) {
    column[s] = log_det_spd(matrices[s].matrix());
  }
  const Summary log_det = summarize(column);
  report.mean_log_det = log_det.mean;
  report.mean_log_det_se = log_det.mean_se;
  if (!variances.empty()) {
    for (std::size_t v = 0; v < dim; ++v) {
      for (std::size_t s = 0; s < matrices.size(); ++s) {
        column[s] = variances[s][v];
      }
      std::vector<double> row;
      for (const auto& rho : rho_columns) {
        row.push_back(pearson_correlation(column, rho));
      }
      report.sigma_rho_correlation.push_back(std::move(row));
    }
  }
  return report;
}

MomentReport moment_report(const SampleBatch& batch) {
  return moment_report(batch.matrices);
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

bool ValidationReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

void ValidationReport::append(const ValidationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

void ValidationReport::sort() {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const CheckResult& a, const CheckResult& b) {
                     // NaN (no grid parameter) orders first.
                     const auto key = [](double v) {
                       return std::isnan(v)
                                  ? -std::numeric_limits<double>::infinity()
                                  : v;
                     };
                     const double pa = key(a.param);
                     const double pb = key(b.param);
                     return std::tie(a.suite, a.dim, pa, a.name) <
                            std::tie(b.suite, b.dim, pb, b.name);
                   });
}

namespace {

constexpr double kNoParam = std::numeric_limits<double>::quiet_NaN();

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
  return RandomStream(seed, tag).next_u64();
}

std::string format_ks(const KsResult& r) {
  std::ostringstream out;
  out << "D=" << r.statistic << " p=" << r.p_value << " n=" << r.n;
  if (r.n2 != 0) out << " n2=" << r.n2;
  return out.str();
}

CheckResult ks_check(std::string suite, std::string name, std::size_t dim,
                     double param, const KsResult& r) {
  return {std::move(suite), std::move(name), dim, param, r.p_value, kKsAlpha,
          r.p_value > kKsAlpha, format_ks(r)};
}

std::vector<double> entry_column(const SampleBatch& batch, std::size_t i,
                                 std::size_t j) {
  std::vector<double> out;
  out.reserve(batch.count());
  for (const auto& p : batch.matrices) out.push_back(p(i, j));
  return out;
}

std::vector<double> log_det_column(const SampleBatch& batch) {
  std::vector<double> out;
  out.reserve(batch.count());
  for (const auto& p : batch.matrices) out.push_back(log_det_spd(p.matrix()));
  return out;
}

void add_constant_checks(ValidationReport& report,
                         const Perturbation& perturbation,
                         const TheoremSuiteConfig& config) {
  constexpr double kConstantTolerance = 1e-7;
  for (std::size_t t = 1; t <= config.constant_max_dim; ++t) {
    double worst_product = 0.0;
    double worst_identity = 0.0;
    for (double offset : config.dof_offsets) {
      const double m = static_cast<double>(t) + offset;
      worst_product = std::max(worst_product, std::abs(log_f_constant(t, m)));
      // ln f through the definition: RW constant times c_d.
      const double via_definition =
          static_cast<double>(t) * log_gamma(m / 2.0) -
          log_multivariate_gamma(t, m / 2.0) +
          log_lkj_constant({t, dof_to_eta(t, m)}) +
          perturbation.lkj_log_constant_offset;
      worst_identity = std::max(worst_identity, std::abs(via_definition));
    }
    report.checks.push_back({"constants", "log_f_product_form", t, kNoParam,
                             worst_product, kConstantTolerance,
                             worst_product < kConstantTolerance,
                             "max over m in T+{0.5,1,2,10}"});
    report.checks.push_back({"constants", "log_f_via_lkj_constant", t, kNoParam,
                             worst_identity, kConstantTolerance,
                             worst_identity < kConstantTolerance,
                             "max over m in T+{0.5,1,2,10}"});
  }
}

void add_duplication_check(ValidationReport& report) {
  constexpr double kTolerance = 1e-11;
  constexpr int kPoints = 1000;
  double worst = 0.0;
  for (int i = 1; i <= kPoints; ++i) {
    const double m = 1.0 + 199.0 * static_cast<double>(i) / kPoints;
    worst = std::max(worst, std::abs(duplication_residual(m)));
  }
  report.checks.push_back({"constants", "duplication_residual", 2, kNoParam,
                           worst, kTolerance, worst < kTolerance,
                           "1000-point grid over (1, 200]"});
}

}  // namespace

ValidationReport constants_suite(std::uint64_t seed,
                                 const Perturbation& perturbation,
                                 const TheoremSuiteConfig& config) {
  ValidationReport report{seed, {}};
  add_constant_checks(report, perturbation, config);
  add_duplication_check(report);
  report.sort();
  return report;
}

ValidationReport theorem_suite(std::uint64_t seed,
                               const Perturbation& perturbation,
                               const TheoremSuiteConfig& config) {
  ValidationReport report{seed, {}};
  add_constant_checks(report, perturbation, config);
  for (auto& c : report.checks) c.suite = "theorem";

  constexpr double kDensityTolerance = 1e-8;
  std::uint64_t cell = 0;
  for (std::size_t d : config.density_dims) {
    for (double eta : config.density_etas) {
      const auto batch = sample_batch(Method::kOnion, d, eta,
                                      config.density_samples,
                                      derive_seed(seed, 100 + cell++));
      const double m = eta_to_dof(d, eta);
      double worst = 0.0;
      for (const auto& p : batch.matrices) {
        const double rw = rw_log_density(p, m).value;
        const double lkj =
            lkj_log_density(p, eta).value - perturbation.lkj_log_constant_offset;
        worst = std::max(worst, std::abs(rw - lkj));
      }
      report.checks.push_back({"theorem", "density_rw_equals_lkj", d, eta,
                               worst, kDensityTolerance,
                               worst < kDensityTolerance,
                               std::to_string(batch.count()) + " onion draws"});
    }
  }

  cell = 0;
  for (std::size_t t : config.ks_dims) {
    for (double eta : config.ks_etas) {
      const std::uint64_t cell_seed = derive_seed(seed, 200 + cell++);
      const double m = eta_to_dof(t, eta);
      const double onion_eta = eta + perturbation.onion_eta_shift;
      auto compare = [&](bool use_log_det) {
        return ks_with_repeat(
            [&](std::uint64_t s) {
              const auto rw = sample_batch(Method::kRw, t, m, config.ks_samples,
                                           derive_seed(s, 1));
              const auto onion = sample_batch(Method::kOnion, t, onion_eta,
                                              config.ks_samples, derive_seed(s, 2));
              if (use_log_det) {
                return ks_two_sample(log_det_column(rw), log_det_column(onion));
              }
              return ks_two_sample(entry_column(rw, 1, 0),
                                   entry_column(onion, 1, 0));
            },
            cell_seed);
      };
      report.checks.push_back(
          ks_check("theorem", "ks_rw_vs_onion_log_det", t, eta, compare(true)));
      report.checks.push_back(
          ks_check("theorem", "ks_rw_vs_onion_rho_21", t, eta, compare(false)));
    }
  }
  report.sort();
  return report;
}

ValidationReport marginals_suite(std::uint64_t seed) {
  ValidationReport report{seed, {}};
  constexpr std::size_t kSamples = 10000;

  // Restricted Wishart: rho_ij ~ Beta((m-1)/2, (m-1)/2) on [-1, 1].
  {
    constexpr std::size_t t = 5;
    constexpr double m = 6.0;
    const double a = (m - 1.0) / 2.0;
    const std::uint64_t cell_seed = derive_seed(seed, 1);
    for (std::size_t i = 1; i < t; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        const auto r = ks_with_repeat(
            [&](std::uint64_t s) {
              const auto batch = sample_batch(Method::kRw, t, m, kSamples, s);
              return ks_one_sample(entry_column(batch, i, j), [a](double x) {
                return beta_cdf_on_interval(x, a);
              });
            },
            cell_seed);
        report.checks.push_back(ks_check(
            "marginals",
            "rw_rho_" + std::to_string(i + 1) + "_" + std::to_string(j + 1), t,
            m, r));
      }
    }
    const auto batch = sample_batch(Method::kRw, t, m, kSamples, cell_seed);
    const auto moments = moment_report(batch);
    const double expected = 1.0 / (2.0 * a + 1.0);
    double worst = 0.0;
    for (const auto& pair : moments.pairs) {
      worst = std::max(worst, std::abs(pair.variance - expected));
    }
    report.checks.push_back({"marginals", "rw_rho_variance", t, m, worst, 0.01,
                             worst < 0.01, "max |var - 1/(T+1)| over pairs"});
  }

  // Restricted inverse-Wishart: rho_ij ~ Beta((m-T+1)/2, .) on [-1, 1].
  const std::pair<std::size_t, double> riw_cells[] = {{3, 4.0}, {2, 5.0}};
  for (const auto& [t, m] : riw_cells) {
    const double a = (m - static_cast<double>(t) + 1.0) / 2.0;
    const std::uint64_t cell_seed = derive_seed(seed, 10 + t);
    for (std::size_t i = 1; i < t; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        const auto r = ks_with_repeat(
            [&](std::uint64_t s) {
              const auto batch = sample_batch(Method::kRiw, t, m, kSamples, s);
              return ks_one_sample(entry_column(batch, i, j), [a](double x) {
                return beta_cdf_on_interval(x, a);
              });
            },
            cell_seed);
        report.checks.push_back(ks_check(
            "marginals",
            "riw_rho_" + std::to_string(i + 1) + "_" + std::to_string(j + 1), t,
            m, r));
      }
    }
  }

  const std::vector<double> psi_diag{1.0, 2.0, 3.0};
  const SymmetricMatrix psi = SymmetricMatrix::diagonal(psi_diag);

  // Inverse-Wishart variances: sigma_ii ~ IG((m-T+1)/2, psi_ii/2).
  {
    constexpr std::size_t t = 3;
    constexpr double m = 6.0;
    const double shape = (m - t + 1.0) / 2.0;
    for (std::size_t i = 0; i < t; ++i) {
      const auto r = ks_with_repeat(
          [&](std::uint64_t s) {
            const RandomStream root(s);
            std::vector<double> xs(kSamples);
            for (std::size_t k = 0; k < kSamples; ++k) {
              RandomStream rng = root.split(k);
              xs[k] = sample_inverse_wishart(t, m, psi, rng)(i, i);
            }
            const double scale = psi_diag[i] / 2.0;
            return ks_one_sample(xs, [&](double x) {
              return inverse_gamma_cdf(x, shape, scale);
            });
          },
          derive_seed(seed, 20));
      report.checks.push_back(ks_check(
          "marginals", "iw_sigma_" + std::to_string(i + 1) + "_inverse_gamma", t,
          m, r));
    }
  }

  // Wishart path: sigma_ii / psi_ii ~ chi2_m, independent of P.
  {
    constexpr std::size_t t = 3;
    constexpr double m = 6.0;
    constexpr std::size_t kLarge = 100000;
    const auto draw = [&](std::uint64_t s) {
      const RandomStream root(s);
      std::vector<CorrelationMatrix> ps;
      std::vector<VarianceVector> vs;
      ps.reserve(kLarge);
      vs.reserve(kLarge);
      for (std::size_t k = 0; k < kLarge; ++k) {
        RandomStream rng = root.split(k);
        auto split = cov_to_corr(sample_wishart(t, m, psi, rng));
        ps.push_back(std::move(split.correlation));
        vs.push_back(std::move(split.variances));
      }
      return std::pair{std::move(ps), std::move(vs)};
    };
    const std::uint64_t cell_seed = derive_seed(seed, 30);
    for (std::size_t i = 0; i < t; ++i) {
      const auto r = ks_with_repeat(
          [&](std::uint64_t s) {
            const auto [ps, vs] = draw(s);
            std::vector<double> xs;
            xs.reserve(kLarge);
            for (const auto& v : vs) xs.push_back(v[i] / psi_diag[i]);
            return ks_one_sample(xs, [m](double x) { return chi_square_cdf(x, m); });
          },
          cell_seed);
      report.checks.push_back(ks_check(
          "marginals", "wishart_sigma_" + std::to_string(i + 1) + "_chi_square",
          t, m, r));
    }
    const auto [ps, vs] = draw(cell_seed);
    const auto moments = moment_report(ps, vs);
    const double c = moments.sigma_rho_correlation[0][0];
    report.checks.push_back({"marginals", "wishart_corr_sigma_11_rho_21", t, m,
                             std::abs(c), 0.01, std::abs(c) < 0.01,
                             "n=" + std::to_string(kLarge)});
  }
  report.sort();
  return report;
}

ValidationReport jacobians_suite(std::uint64_t seed) {
  ValidationReport report{seed, {}};
  constexpr std::size_t kInputs = 100;
  const RandomStream root(seed);
  for (std::size_t t : {std::size_t{2}, std::size_t{3}}) {
    double worst_j1 = 0.0;
    double worst_j2 = 0.0;
    for (std::size_t k = 0; k < kInputs; ++k) {
      RandomStream rng = root.split(t * 1000 + k);
      SymmetricMatrix sigma = sample_wishart(
          t, static_cast<double>(t) + 2.0, SymmetricMatrix::identity(t), rng);
      for (std::size_t i = 0; i < t; ++i) {
        sigma.set(i, i, sigma(i, i) + 0.1);
      }
      worst_j1 = std::max(worst_j1, jacobian_check_sigma_to_corr(sigma).rel_error);
      std::vector<double> vars(t);
      for (auto& v : vars) v = 0.1 + 9.9 * rng.uniform();
      worst_j2 = std::max(worst_j2,
                          jacobian_check_var_to_sd(VarianceVector(vars)).rel_error);
    }
    report.checks.push_back({"jacobians", "j1_sigma_to_corr", t, kNoParam,
                             worst_j1, 1e-4, worst_j1 < 1e-4,
                             "max rel_error over 100 random SPD inputs"});
    report.checks.push_back({"jacobians", "j2_var_to_sd", t, kNoParam, worst_j2,
                             1e-8, worst_j2 < 1e-8,
                             "max rel_error over 100 random variance vectors"});
  }
  report.sort();
  return report;
}

}  // namespace corrmat
