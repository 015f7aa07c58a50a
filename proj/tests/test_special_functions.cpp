// Copyright 2026 The corrmat Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "corrmat/errors.hpp"
#include "corrmat/special_functions.hpp"

using namespace corrmat;

namespace {

// ln Gamma(x) at 50 significant digits (tests/oracles/gen_oracles.py).
struct Reference {
  double x;
  double value;
};
constexpr Reference kLogGammaTable[] = {
    {0.001, 6.9071788853838536617},
    {0.01, 4.5994798780420217016},
    {0.1, 2.252712651734205902},
    {0.25, 1.2880225246980774574},
    {0.5, 0.57236494292470008707},
    {0.75, 0.20328095143129537148},
    {0.9, 0.066376239734742954426},
    {0.999, 0.00057803853289138023817},
    {1.001, -0.00057639359828330615152},
    {1.5, -0.12078223763524522235},
    {1.999, -0.00042246180069210728418},
    {2.001, 0.00042310673480011699119},
    {2.5, 0.28468287047291915963},
    {3, 0.69314718055994530942},
    {3.7, 1.4280723266653881292},
    {5.25, 3.5613759103866969369},
    {7.5, 7.5343642367587329552},
    {10, 12.801827480081469611},
    {12.25, 18.115669505710892619},
    {20.5, 40.83150097453079811},
    {30.5, 72.953471184169408324},
    {50, 144.56574394634488601},
    {99.75, 357.98447923746389499},
    {100, 359.13420536957539878},
    {250.75, 1132.6644916865745857},
    {500.5, 2608.2229044109866551},
    {1000, 5905.2204232091812118},
    {4096.5, 29974.489147243110515},
    {1e5, 1051287.7089736568949},
    {1e7, 151180949.36947391394},
};

}  // namespace

TEST_CASE("log_gamma against 30 high-precision references") {
  for (const auto& ref : kLogGammaTable) {
    CAPTURE(ref.x);
    const double got = log_gamma(ref.x);
    CHECK(std::abs(got - ref.value) <= 1e-13 * std::abs(ref.value));
  }
  CHECK(log_gamma(1.0) == 0.0);
  CHECK(log_gamma(6.0) == doctest::Approx(std::log(120.0)).epsilon(1e-15));
  CHECK_THROWS_AS(log_gamma(0.0), DomainError);
  CHECK_THROWS_AS(log_gamma(-1.5), DomainError);
}

TEST_CASE("log_multivariate_gamma") {
  CHECK(log_multivariate_gamma(1, 3.3) == log_gamma(3.3));
  CHECK(log_multivariate_gamma(2, 1.5) ==
        doctest::Approx(0.45158270528945486473).epsilon(1e-14));
  CHECK(log_multivariate_gamma(3, 3.0) ==
        doctest::Approx(2.6949248798069647303).epsilon(1e-14));
  CHECK_THROWS_AS(log_multivariate_gamma(3, 1.0), DomainError);
  CHECK_THROWS_AS(log_multivariate_gamma(0, 1.0), DomainError);

  SUBCASE("strictly increasing in x past its minimum") {
    // ln Gamma_T is convex with its minimum below (T-1)/2 + 1.5.
    for (std::size_t t : {1, 2, 5, 12}) {
      double prev = log_multivariate_gamma(t, (t - 1) / 2.0 + 1.5);
      for (double x = (t - 1) / 2.0 + 1.6; x < 60.0; x += 0.1) {
        const double cur = log_multivariate_gamma(t, x);
        CHECK(cur > prev);
        prev = cur;
      }
    }
  }
}

TEST_CASE("log_beta_function") {
  CHECK(log_beta_function(1, 1) == 0.0);
  CHECK(log_beta_function(0.5, 0.5) == doctest::Approx(std::log(std::numbers::pi)).epsilon(1e-15));
  CHECK(log_beta_function(2, 3) == doctest::Approx(std::log(1.0 / 12.0)).epsilon(1e-15));
  CHECK_THROWS_AS(log_beta_function(0, 1), DomainError);
}

TEST_CASE("log_lkj_constant") {
  CHECK(log_lkj_constant({1, 0.3}) == 0.0);
  CHECK(log_lkj_constant({2, 1.0}) == doctest::Approx(std::numbers::ln2).epsilon(1e-15));
  // Volume of the 3x3 correlation set, pi^2 / 2 (grid oracle in test_densities).
  CHECK(log_lkj_constant({3, 1.0}) == doctest::Approx(1.5963125911388550389).epsilon(1e-14));
  CHECK_THROWS_AS(log_lkj_constant({3, 0.0}), DomainError);
  CHECK_THROWS_AS(log_lkj_constant({0, 1.0}), DomainError);

  SUBCASE("matches the restricted Wishart constant") {
    for (std::size_t d = 1; d <= 40; ++d) {
      for (double eta : {0.5, 1.0, 2.0, 7.0, 30.0}) {
        const double m = eta_to_dof(d, eta);
        const double rw = static_cast<double>(d) * log_gamma(m / 2.0) -
                          log_multivariate_gamma(d, m / 2.0);
        CAPTURE(d);
        CAPTURE(eta);
        CHECK(std::abs(log_lkj_constant({d, eta}) + rw) < 1e-8);
      }
    }
  }
  SUBCASE("finite at large dimension") {
    CHECK(std::isfinite(log_lkj_constant({280, 1.0})));
  }
}

TEST_CASE("log_f_constant") {
  CHECK(log_f_constant(1, 0.5) == 0.0);
  CHECK(log_f_constant(1, 7.0) == 0.0);
  CHECK(std::abs(log_f_constant(2, 3.0)) < 1e-10);
  CHECK(std::abs(log_f_constant(25, 26.0)) < 1e-7);
  CHECK(std::abs(log_f_constant(3, 2.5)) < 1e-10);
  CHECK_THROWS_AS(log_f_constant(3, 2.0), DomainError);

  SUBCASE("vanishes on the full grid within the scaled tolerance") {
    for (std::size_t t = 1; t <= 50; ++t) {
      for (double offset : {0.5, 1.0, 2.0, 10.0}) {
        CAPTURE(t);
        CAPTURE(offset);
        CHECK(std::abs(log_f_constant(t, t + offset)) < log_f_tolerance(t));
      }
    }
  }
  SUBCASE("T = 2 is the duplication residual") {
    for (double m : {1.5, 3.0, 7.25, 40.0}) {
      CHECK(log_f_constant(2, m) == doctest::Approx(duplication_residual(m)).epsilon(1e-12));
    }
  }
}

TEST_CASE("duplication_residual") {
  CHECK(std::abs(duplication_residual(2.0)) < 1e-13);
  CHECK(std::abs(duplication_residual(3.0)) < 1e-13);
  CHECK(std::abs(duplication_residual(101.5)) < 1e-11);
  CHECK_THROWS_AS(duplication_residual(1.0), DomainError);
  for (int i = 1; i <= 400; ++i) {
    const double m = 1.0 + 199.0 * i / 400.0;
    CHECK(std::abs(duplication_residual(m)) < 1e-11);
  }
}

TEST_CASE("dof and eta conversions") {
  for (std::size_t t : {1, 2, 5, 30}) {
    CHECK(dof_to_eta(t, t + 1.0) == 1.0);
    CHECK(dof_to_eta(t, t + 2.0) == 1.5);
  }
  CHECK(eta_to_dof(5, 1.0) == 6.0);
  CHECK(dof_to_eta(5, 6.0) == 1.0);
  for (double eta : {0.25, 0.5, 1.0, 3.75, 12.0}) {
    CHECK(dof_to_eta(7, eta_to_dof(7, eta)) == eta);
  }
  CHECK_THROWS_AS(dof_to_eta(5, 4.0), DomainError);
  CHECK_THROWS_AS(eta_to_dof(5, -1.0), DomainError);
}
