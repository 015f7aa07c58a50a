// Copyright 2026 The corrmat Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "corrmat/densities.hpp"
#include "corrmat/errors.hpp"
#include "corrmat/samplers.hpp"
#include "corrmat/special_functions.hpp"
#include "oracles.hpp"

using namespace corrmat;
using doctest::Approx;

namespace {

CorrelationMatrix corr3(double r21, double r31, double r32) {
  const std::vector<double> off{r21, r31, r32};
  return CorrelationMatrix::from_lower_offdiagonal(3, off);
}

SymmetricMatrix permuted(const SymmetricMatrix& s, const std::vector<std::size_t>& perm) {
  SymmetricMatrix out(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) out.set(i, j, s(perm[i], perm[j]));
  }
  return out;
}

SymmetricMatrix spd_inverse(const SymmetricMatrix& s) {
  const auto linv = invert_lower_triangular(cholesky(s));
  return linv.transpose_times();
}

}  // namespace

TEST_CASE("Wishart log density") {
  SUBCASE("T = 1 reduces to chi-square") {
    const auto one = SymmetricMatrix::identity(1);
    for (double k : {1.0, 2.5, 7.0}) {
      for (double s : {0.1, 1.0, 4.2, 15.0}) {
        const auto ld = wishart_log_density(SymmetricMatrix::diagonal(std::vector{s}), k, one);
        CHECK(ld.normalized);
        CHECK(ld.value == Approx(oracle::chi_square_log_pdf(s, k)).epsilon(1e-13));
      }
    }
  }
  SUBCASE("T = 2, S = 5 I, K = 5, Sigma = I") {
    const auto s = SymmetricMatrix::diagonal(std::vector{5.0, 5.0});
    const auto ld = wishart_log_density(s, 5.0, SymmetricMatrix::identity(2));
    CHECK(ld.value == Approx(-6.1039078913291450446).epsilon(1e-13));
  }
  SUBCASE("T = 1 density integrates to 1") {
    const auto sigma = SymmetricMatrix::diagonal(std::vector{1.7});
    for (double k : {3.0, 6.0}) {
      const double total = oracle::simpson(
          [&](double u) {
            const double s = std::exp(u);
            return std::exp(wishart_log_density(SymmetricMatrix::diagonal(std::vector{s}), k, sigma).value + u);
          },
          -30.0, 6.0, 20000);
      CHECK(std::abs(total - 1.0) < 1e-6);
    }
  }
  SUBCASE("domain errors") {
    const auto i2 = SymmetricMatrix::identity(2);
    CHECK_THROWS_AS(wishart_log_density(i2, 0.5, i2), DomainError);
    const auto bad = SymmetricMatrix::from_rows({{1.0, 2.0}, {2.0, 1.0}});
    CHECK_THROWS_AS(wishart_log_density(bad, 4.0, i2), NotPositiveDefinite);
    CHECK_THROWS_AS(wishart_log_density(i2, 4.0, bad), NotPositiveDefinite);
  }
}

TEST_CASE("inverse-Wishart log density") {
  SUBCASE("T = 1 reduces to inverse-gamma") {
    for (double m : {1.0, 3.0, 8.0}) {
      for (double psi : {0.5, 2.0}) {
        const auto p = SymmetricMatrix::diagonal(std::vector{psi});
        for (double x : {0.05, 1.0, 9.0}) {
          const auto ld = inverse_wishart_log_density(SymmetricMatrix::diagonal(std::vector{x}), m, p);
          CHECK(ld.normalized);
          CHECK(ld.value ==
                Approx(oracle::inverse_gamma_log_pdf(x, m / 2.0, psi / 2.0)).epsilon(1e-13));
        }
      }
    }
  }
  SUBCASE("T = 1 density integrates to 1") {
    const auto psi = SymmetricMatrix::diagonal(std::vector{2.0});
    const double total = oracle::simpson(
        [&](double u) {
          const double x = std::exp(u);
          return std::exp(inverse_wishart_log_density(SymmetricMatrix::diagonal(std::vector{x}), 3.0, psi).value + u);
        },
        -8.0, 40.0, 40000);
    CHECK(std::abs(total - 1.0) < 1e-6);
  }
  SUBCASE("change of variables from the Wishart density") {
    const auto psi = SymmetricMatrix::from_rows({{2.0, 0.3, 0.1}, {0.3, 1.0, -0.2}, {0.1, -0.2, 1.5}});
    const auto psi_inv = spd_inverse(psi);
    RandomStream rng(11);
    for (double m : {3.5, 6.0, 20.0}) {
      for (int rep = 0; rep < 10; ++rep) {
        const auto sigma = sample_inverse_wishart(3, m, psi, rng);
        const auto w = wishart_log_density(spd_inverse(sigma), m, psi_inv).value;
        const double jac = -4.0 * log_det_spd(sigma);
        const auto iw = inverse_wishart_log_density(sigma, m, psi).value;
        CHECK(std::abs(iw - (w + jac)) < 1e-10);
      }
    }
  }
}

TEST_CASE("restricted Wishart and LKJ log densities") {
  SUBCASE("uniform height at T = 2, m = 3") {
    for (double r : {-0.9, 0.0, 0.4}) {
      const auto p = CorrelationMatrix::from_lower_offdiagonal(2, std::vector{r});
      CHECK(rw_log_density(p, 3.0).value == Approx(-std::numbers::ln2).epsilon(1e-14));
      CHECK(lkj_log_density(p, 1.0).value == Approx(-std::numbers::ln2).epsilon(1e-14));
    }
  }
  SUBCASE("frozen value at T = 2, m = 4, rho = 0.5") {
    const auto p = CorrelationMatrix::from_lower_offdiagonal(2, std::vector{0.5});
    const auto ld = rw_log_density(p, 4.0);
    CHECK(ld.normalized);
    CHECK(ld.value == Approx(-0.59542374151534532845).epsilon(1e-13));
  }
  SUBCASE("identity reduces to the constant") {
    for (std::size_t t : {1u, 2u, 5u, 12u}) {
      const double m = static_cast<double>(t) + 0.7;
      const double expected = static_cast<double>(t) * log_gamma(m / 2.0) -
                              log_multivariate_gamma(t, m / 2.0);
      CHECK(rw_log_density(CorrelationMatrix::identity(t), m).value == Approx(expected).epsilon(1e-13));
    }
    CHECK(lkj_log_density(CorrelationMatrix::identity(3), 1.0).value ==
          Approx(-1.5963125911388550389).epsilon(1e-13));
  }
  SUBCASE("RW equals LKJ pointwise up to d = 25") {
    for (std::size_t d : {2u, 3u, 5u, 10u, 25u}) {
      for (double eta : {0.5, 1.0, 2.0, 7.0}) {
        const auto batch = sample_batch(Method::kOnion, d, eta, 20, 100 + d);
        for (const auto& p : batch.matrices) {
          const double rw = rw_log_density(p, 2.0 * eta + static_cast<double>(d) - 1.0).value;
          const double lkj = lkj_log_density(p, eta).value;
          CHECK(std::abs(rw - lkj) < 1e-8);
        }
      }
    }
  }
  SUBCASE("m = T + 1 is flat in P") {
    const auto batch = sample_batch(Method::kRw, 6, 7.0, 10, 3);
    const double flat = rw_log_density(CorrelationMatrix::identity(6), 7.0).value;
    for (const auto& p : batch.matrices) CHECK(rw_log_density(p, 7.0).value == Approx(flat).epsilon(1e-14));
  }
  SUBCASE("invariant under symmetric permutation") {
    const auto batch = sample_batch(Method::kRw, 5, 7.5, 5, 21);
    const std::vector<std::size_t> perm{3, 0, 4, 2, 1};
    for (const auto& p : batch.matrices) {
      const auto q = CorrelationMatrix::from_symmetric(permuted(p.matrix(), perm));
      CHECK(rw_log_density(q, 7.5).value == Approx(rw_log_density(p, 7.5).value).epsilon(1e-12));
      CHECK(lkj_log_density(q, 1.3).value == Approx(lkj_log_density(p, 1.3).value).epsilon(1e-12));
      CHECK(riw_log_density(q, 7.5).value == Approx(riw_log_density(p, 7.5).value).epsilon(1e-12));
    }
  }
  SUBCASE("domain errors") {
    CHECK_THROWS_AS(rw_log_density(CorrelationMatrix::identity(3), 1.5), DomainError);
    CHECK_THROWS_AS(lkj_log_density(CorrelationMatrix::identity(3), 0.0), DomainError);
  }
}

TEST_CASE("restricted inverse-Wishart kernel") {
  SUBCASE("T = 2 reduces to the Beta kernel") {
    for (double m : {2.0, 4.0, 9.5}) {
      for (double r : {-0.7, 0.0, 0.35}) {
        const auto p = CorrelationMatrix::from_lower_offdiagonal(2, std::vector{r});
        const auto ld = riw_log_density(p, m);
        CHECK_FALSE(ld.normalized);
        CHECK(ld.value == Approx((m - 3.0) / 2.0 * std::log1p(-r * r)).epsilon(1e-13));
      }
    }
  }
  SUBCASE("identity gives zero") {
    for (std::size_t t : {1u, 3u, 8u}) {
      CHECK(riw_log_density(CorrelationMatrix::identity(t), static_cast<double>(t) + 2.0).value ==
            Approx(0.0));
    }
  }
  SUBCASE("T = 3, m = 4 kernel ratio matches a sampled histogram") {
    constexpr double h = 0.1;
    const std::array<std::array<double, 3>, 2> centers{{{0.0, 0.0, 0.0}, {0.45, -0.35, 0.2}}};
    auto cube_mass = [&](const std::array<double, 3>& c) {
      constexpr int k = 12;
      double total = 0.0;
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
          for (int e = 0; e < k; ++e) {
            const double r21 = c[0] - h + (2 * a + 1) * h / k;
            const double r31 = c[1] - h + (2 * b + 1) * h / k;
            const double r32 = c[2] - h + (2 * e + 1) * h / k;
            total += std::exp(riw_log_density(corr3(r21, r31, r32), 4.0).value);
          }
      return total;
    };
    const double expected = cube_mass(centers[1]) / cube_mass(centers[0]);

    const auto batch = sample_batch(Method::kRiw, 3, 4.0, 400000, 77);
    std::array<double, 2> counts{0.0, 0.0};
    for (const auto& p : batch.matrices) {
      for (std::size_t c = 0; c < 2; ++c) {
        if (std::abs(p(1, 0) - centers[c][0]) < h && std::abs(p(2, 0) - centers[c][1]) < h &&
            std::abs(p(2, 1) - centers[c][2]) < h) {
          counts[c] += 1.0;
        }
      }
    }
    REQUIRE(counts[0] > 500.0);
    REQUIRE(counts[1] > 200.0);
    const double observed = counts[1] / counts[0];
    const double rel_se = std::sqrt(1.0 / counts[0] + 1.0 / counts[1]);
    CAPTURE(observed);
    CAPTURE(expected);
    CHECK(std::abs(std::log(observed / expected)) < 4.0 * rel_se);
  }
}

TEST_CASE("rho marginal density") {
  for (double r : {-0.99, -0.2, 0.0, 0.8}) CHECK(marginal_rho_log_density(r, 1.0) == Approx(-std::numbers::ln2));
  CHECK(marginal_rho_log_density(0.0, 2.0) == Approx(-0.28768207245178092744).epsilon(1e-14));
  for (double a : {0.5, 1.0, 2.0, 5.0}) {
    // rho = sin(theta) removes the endpoint singularity at a = 0.5; the
    // midpoint rule never evaluates |rho| = 1.
    constexpr int cells = 20000;
    const double h = std::numbers::pi / cells;
    double total = 0.0;
    for (int k = 0; k < cells; ++k) {
      const double th = -std::numbers::pi / 2 + (k + 0.5) * h;
      total += std::exp(marginal_rho_log_density(std::sin(th), a)) * std::cos(th) * h;
    }
    CAPTURE(a);
    CHECK(std::abs(total - 1.0) < 1e-8);
  }
  CHECK_THROWS_AS(marginal_rho_log_density(1.0, 2.0), DomainError);
  CHECK_THROWS_AS(marginal_rho_log_density(0.1, 0.0), DomainError);
}

TEST_CASE("volume of 3x3 correlation matrices matches the LKJ constant") {
  const double volume = oracle::correlation_volume_3x3(200);
  CHECK(volume == Approx(std::exp(log_lkj_constant(LkjParams{3, 1.0}))).epsilon(2e-3));
  CHECK(std::exp(log_lkj_constant(LkjParams{3, 1.0})) == Approx(std::numbers::pi * std::numbers::pi / 2.0).epsilon(1e-13));
}
