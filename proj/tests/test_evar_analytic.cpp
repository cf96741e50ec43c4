// Copyright 2026 the evar authors
// SPDX-License-Identifier: Apache-2.0
//
// Unit suite for the closed-form EVaR catalogue: exact limiting values,
// reductions between families, trace consistency against the variational
// objective, the coherence properties (translation, scaling, monotonicity,
// mean domination), and the closed-form quantile helper checked against
// CDF bisection.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <initializer_list>
#include <vector>

#include "evar/errors.hpp"
#include "evar/evar_analytic.hpp"
#include "evar/numeric_oracle.hpp"

using namespace evar;

namespace {

const std::vector<double> kModerateAlphas = {0.05, 0.1, 0.2, 0.3, 0.5,
                                             0.7,  0.9, 0.95, 0.99};

std::vector<DistributionSpec> all_ten() {
  return {Poisson(1.0),
          CompoundPoissonBernoulli(1.0, 0.5),
          CompoundPoissonNormal(1.0, 1.0),
          Gamma(2.0, 1.0),
          Exponential(1.0),
          ChiSquared(3),
          Laplace(0.0, 1.0),
          Normal(0.0, 1.0),
          InverseGaussian(1.0, 2.0),
          NormalInverseGaussian(2.0, -1.0, 0.0, 1.0)};
}

double rel_err(double got, double want) {
  return std::fabs(got - want) / std::max(1.0, std::fabs(want));
}

// Closed-form CDFs for the three quantile-supported families, used to
// bisect an independent quantile.
double cdf(const DistributionSpec& dist, double x) {
  return std::visit(
      [x](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Normal>) {
          return 0.5 * std::erfc(-(x - d.mu) / (d.sigma * std::sqrt(2.0)));
        } else if constexpr (std::is_same_v<T, Exponential>) {
          return x <= 0.0 ? 0.0 : -std::expm1(-d.lambda * x);
        } else if constexpr (std::is_same_v<T, Laplace>) {
          const double z = (x - d.mu) / d.b;
          return z < 0.0 ? 0.5 * std::exp(z) : 1.0 - 0.5 * std::exp(-z);
        } else {
          throw UnsupportedError("cdf: test oracle covers three families");
        }
      },
      dist);
}

double bisect_quantile(const DistributionSpec& dist, double q) {
  double lo = -64.0;
  double hi = 64.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (cdf(dist, mid) >= q ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

} // namespace

TEST_CASE("confidence level validation") {
  CHECK_THROWS_AS(ConfidenceLevel(-0.1), ParameterError);
  CHECK_THROWS_AS(ConfidenceLevel(1.0), ParameterError);
  CHECK_THROWS_AS(ConfidenceLevel(1.5), ParameterError);
  CHECK_THROWS_AS(ConfidenceLevel(std::nan("")), ParameterError);
  CHECK_NOTHROW(ConfidenceLevel(0.0));
  CHECK_NOTHROW(ConfidenceLevel(0.999999));
  CHECK(ConfidenceLevel(0.5).tail_weight() ==
        doctest::Approx(std::log(2.0)).epsilon(1e-15));
}

TEST_CASE("normal: mu + sigma sqrt(-2 log(1-alpha))") {
  CHECK(evar_normal(0.0, 1.0, ConfidenceLevel(0.0)).value == 0.0);
  // -2 log(1 - alpha) = 1 at alpha = 1 - e^{-1/2}
  const double alpha = -std::expm1(-0.5);
  CHECK(rel_err(evar_normal(0.0, 1.0, ConfidenceLevel(alpha)).value, 1.0) <=
        1e-12);
  CHECK(rel_err(evar_normal(0.0, 1.0, ConfidenceLevel(0.95)).value,
                std::sqrt(-2.0 * std::log(0.05))) <= 1e-12);
  // the minimizer is sqrt(-2 log(1-alpha)) / sigma
  const EvarResult r = evar_normal(1.0, 2.0, ConfidenceLevel(0.95));
  REQUIRE(r.trace.t_star.has_value());
  CHECK(rel_err(*r.trace.t_star, std::sqrt(-2.0 * std::log(0.05)) / 2.0) <=
        1e-12);
}

TEST_CASE("poisson: continuous Lambert form") {
  CHECK(rel_err(evar_poisson(1.0, ConfidenceLevel(0.0)).value, 1.0) <=
        1e-12);
  // at alpha = 1 - e^{-lambda} the value is e lambda with t* = 1
  const double alpha = -std::expm1(-1.0);
  const EvarResult r = evar_poisson(1.0, ConfidenceLevel(alpha));
  CHECK(rel_err(r.value, std::exp(1.0)) <= 1e-12);
  REQUIRE(r.trace.t_star.has_value());
  CHECK(std::fabs(*r.trace.t_star - 1.0) <= 1e-9);
  CHECK(r.trace.branch == LambertBranch::Principal);
  CHECK(r.trace.intermediates.count("beta") == 1);
}

TEST_CASE("compound Bernoulli jumps reduce to a thinned Poisson") {
  for (const double alpha : kModerateAlphas) {
    CHECK(evar_compound_poisson_bernoulli(2.0, 0.5, ConfidenceLevel(alpha))
              .value ==
          evar_poisson(1.0, ConfidenceLevel(alpha)).value);
  }
  // p = 0 degenerates to zero loss for every confidence level
  for (const double alpha : kModerateAlphas) {
    CHECK(evar_compound_poisson_bernoulli(5.0, 0.0, ConfidenceLevel(alpha))
              .value == 0.0);
  }
}

TEST_CASE("compound normal jumps: lambda sigma sqrt(e) at beta = 0") {
  const double alpha = -std::expm1(-1.0);
  CHECK(rel_err(
            evar_compound_poisson_normal(1.0, 1.0, ConfidenceLevel(alpha))
                .value,
            std::sqrt(std::exp(1.0))) <= 1e-12);
  CHECK(rel_err(
            evar_compound_poisson_normal(1.0, 2.0, ConfidenceLevel(alpha))
                .value,
            2.0 * std::sqrt(std::exp(1.0))) <= 1e-12);
  // at alpha = 0 the value is the mean 0, attained only in the limit
  const EvarResult r0 =
      evar_compound_poisson_normal(1.0, 1.0, ConfidenceLevel(0.0));
  CHECK(std::fabs(r0.value) <= 1e-12);
}

TEST_CASE("gamma family and its reductions") {
  CHECK(rel_err(evar_gamma(1.0, 1.0, ConfidenceLevel(0.0)).value, 1.0) <=
        1e-12);
  CHECK(rel_err(evar_gamma(3.0, 2.0, ConfidenceLevel(0.0)).value, 6.0) <=
        1e-12);
  CHECK(rel_err(evar_exponential(1.0, ConfidenceLevel(0.0)).value, 1.0) <=
        1e-12);
  CHECK(rel_err(evar_chi_squared(2, ConfidenceLevel(0.0)).value, 2.0) <=
        1e-12);
  for (const double alpha : kModerateAlphas) {
    const ConfidenceLevel level(alpha);
    CHECK(evar_exponential(2.0, level).value ==
          evar_gamma(1.0, 0.5, level).value);
    CHECK(evar_chi_squared(4, level).value ==
          evar_gamma(2.0, 2.0, level).value);
  }
  const EvarResult r = evar_gamma(2.0, 1.0, ConfidenceLevel(0.9));
  CHECK(r.trace.branch == LambertBranch::MinusOne);
  CHECK(r.trace.intermediates.count("z_gamma") == 1);
  CHECK(r.trace.intermediates.count("b_gamma") == 1);
}

TEST_CASE("laplace: zero spread term at alpha = 0, translation in mu") {
  CHECK(std::fabs(evar_laplace(0.0, 1.0, ConfidenceLevel(0.0)).value) <=
        1e-12);
  for (const double alpha : kModerateAlphas) {
    const ConfidenceLevel level(alpha);
    CHECK(std::fabs(evar_laplace(5.0, 1.0, level).value -
                    (evar_laplace(0.0, 1.0, level).value + 5.0)) <= 1e-12);
  }
  const EvarResult r = evar_laplace(0.0, 1.0, ConfidenceLevel(0.9));
  CHECK(r.trace.branch == LambertBranch::MinusOne);
  CHECK(r.trace.intermediates.count("gamma") == 1);
  CHECK(r.trace.intermediates.count("a") == 1);
}

TEST_CASE("inverse Gaussian mean limit and trace symbols") {
  CHECK(rel_err(evar_inverse_gaussian(1.0, 1.0, ConfidenceLevel(0.0)).value,
                1.0) <= 1e-12);
  CHECK(rel_err(evar_inverse_gaussian(2.0, 1.0, ConfidenceLevel(0.0)).value,
                2.0) <= 1e-12);
  const EvarResult r =
      evar_inverse_gaussian(1.0, 2.0, ConfidenceLevel(0.95));
  CHECK(r.trace.intermediates.count("c") == 1);
  CHECK(r.trace.intermediates.count("delta_ig") == 1);
  // delta_ig = 1 - (mu/lambda) log(1-alpha)
  CHECK(rel_err(r.trace.intermediates.at("delta_ig"),
                1.0 - 0.5 * std::log(0.05)) <= 1e-12);
}

TEST_CASE("normal inverse Gaussian: mean at alpha' = 0, translation, t* cap") {
  const double mean0 = -1.0 / std::sqrt(3.0);
  CHECK(std::fabs(evar_nig(2.0, -1.0, 0.0, 1.0, ConfidenceLevel(0.0)).value -
                  mean0) <= 1e-12);
  for (const double alpha : kModerateAlphas) {
    const ConfidenceLevel level(alpha);
    CHECK(std::fabs(evar_nig(2.0, -1.0, 3.0, 1.0, level).value -
                    (evar_nig(2.0, -1.0, 0.0, 1.0, level).value + 3.0)) <=
          1e-12);
    const EvarResult r = evar_nig(2.0, -1.0, 0.0, 1.0, level);
    REQUIRE(r.trace.t_star.has_value());
    CHECK(*r.trace.t_star > 0.0);
    CHECK(*r.trace.t_star <= 3.0); // t* lives in [0, alpha - beta]
    CHECK(r.trace.intermediates.count("phi") == 1);
    CHECK(r.trace.intermediates.count("psi") == 1);
  }
}

TEST_CASE("dispatch returns the same result as the direct closed forms") {
  const ConfidenceLevel level(0.9);
  CHECK(evar::evar(DistributionSpec(Normal(0.0, 1.0)), level).value ==
        evar_normal(0.0, 1.0, level).value);
  CHECK(evar::evar(DistributionSpec(Poisson(2.0)), level).value ==
        evar_poisson(2.0, level).value);
  CHECK(evar::evar(DistributionSpec(ChiSquared(3)), level).value ==
        evar_chi_squared(3, level).value);
  CHECK(evar::evar(DistributionSpec(NormalInverseGaussian(2.0, -1.0, 0.0, 1.0)),
             level)
            .value ==
        evar_nig(2.0, -1.0, 0.0, 1.0, level).value);
}

TEST_CASE("trace consistency: objective at t* reproduces the value") {
  for (const auto& dist : all_ten()) {
    CAPTURE(distribution_name(dist));
    for (const double alpha : kModerateAlphas) {
      const ConfidenceLevel level(alpha);
      const EvarResult r = evar::evar(dist, level);
      CAPTURE(alpha);
      REQUIRE(std::fabs(r.trace.objective_at_t_star - r.value) <=
              1e-10 * (1.0 + std::fabs(r.value)));
      if (r.trace.t_star.has_value()) {
        // re-evaluate through the oracle's objective as well
        const double direct = objective(dist, level, *r.trace.t_star);
        REQUIRE(std::fabs(direct - r.value) <=
                1e-10 * (1.0 + std::fabs(r.value)));
      }
    }
  }
}

TEST_CASE("EVaR dominates the mean at every confidence level") {
  for (const auto& dist : all_ten()) {
    CAPTURE(distribution_name(dist));
    const double m = mean(dist);
    for (const double alpha : kModerateAlphas) {
      CHECK(evar::evar(dist, ConfidenceLevel(alpha)).value >=
            m - 1e-9 * (1.0 + std::fabs(m)));
    }
  }
}

TEST_CASE("mean limit as alpha -> 0") {
  for (const auto& dist : all_ten()) {
    CAPTURE(distribution_name(dist));
    const double m = mean(dist);
    const double v = evar::evar(dist, ConfidenceLevel(1e-12)).value;
    const double scale = 1.0 + std::fabs(m);
    CHECK(v - m >= -1e-6 * scale);
    CHECK(v - m <= 1e-4 * scale);
  }
}

TEST_CASE("monotone nondecreasing in alpha on a 999-point grid") {
  for (const auto& dist : all_ten()) {
    CAPTURE(distribution_name(dist));
    double previous = evar::evar(dist, ConfidenceLevel(0.001)).value;
    for (int i = 2; i <= 999; ++i) {
      const double value = evar::evar(dist, ConfidenceLevel(i / 1000.0)).value;
      REQUIRE(value >= previous - 1e-12);
      previous = value;
    }
  }
}

TEST_CASE("translation equivariance at the formula level") {
  for (const double alpha : kModerateAlphas) {
    const ConfidenceLevel level(alpha);
    CHECK(std::fabs(evar_normal(5.0, 1.0, level).value -
                    (evar_normal(0.0, 1.0, level).value + 5.0)) <= 1e-12);
    CHECK(std::fabs(evar_laplace(5.0, 2.0, level).value -
                    (evar_laplace(0.0, 2.0, level).value + 5.0)) <= 1e-12);
    CHECK(std::fabs(evar_nig(2.0, -1.0, 5.0, 1.0, level).value -
                    (evar_nig(2.0, -1.0, 0.0, 1.0, level).value + 5.0)) <=
          1e-12);
  }
}

TEST_CASE("positive homogeneity through the scale parameters") {
  for (const double c : {0.5, 3.0}) {
    for (const double alpha : kModerateAlphas) {
      const ConfidenceLevel level(alpha);
      const double e1 = evar_exponential(1.0, level).value;
      const double ec = evar_exponential(1.0 / c, level).value;
      CHECK(std::fabs(ec - c * e1) <= 1e-10 * std::fabs(c * e1));
      const double g1 = evar_gamma(2.0, 1.0, level).value;
      const double gc = evar_gamma(2.0, c, level).value;
      CHECK(std::fabs(gc - c * g1) <= 1e-10 * std::fabs(c * g1));
    }
  }
}

TEST_CASE("EVaR dominates the alpha-quantile value-at-risk") {
  const std::vector<DistributionSpec> dists = {
      Normal(0.0, 1.0), Exponential(1.0), Laplace(0.0, 1.0)};
  std::vector<double> alphas;
  for (double a = 0.5; a < 0.96; a += 0.05) {
    alphas.push_back(a);
  }
  alphas.push_back(0.99);
  for (const auto& dist : dists) {
    CAPTURE(distribution_name(dist));
    for (const double alpha : alphas) {
      const ConfidenceLevel level(alpha);
      CHECK(evar::evar(dist, level).value + 1e-12 >=
            quantile_var(dist, level, QuantileConvention::AlphaQuantile));
    }
  }
}

TEST_CASE("quantile closed forms") {
  // F(1) = 1 - e^{-1} for the unit exponential
  CHECK(rel_err(quantile_var(Exponential(1.0),
                             ConfidenceLevel(-std::expm1(-1.0)),
                             QuantileConvention::AlphaQuantile),
                1.0) <= 1e-12);
  CHECK(std::fabs(quantile_var(Normal(0.0, 1.0), ConfidenceLevel(0.5),
                               QuantileConvention::AlphaQuantile)) <= 1e-12);
  CHECK(rel_err(quantile_var(Laplace(0.0, 1.0), ConfidenceLevel(0.9),
                             QuantileConvention::AlphaQuantile),
                std::log(5.0)) <= 1e-12);
  // the complement convention returns the (1-alpha)-quantile
  CHECK(rel_err(quantile_var(Exponential(1.0), ConfidenceLevel(0.9),
                             QuantileConvention::ComplementQuantile),
                -std::log(0.9)) <= 1e-10);
  CHECK(std::fabs(quantile_var(Normal(0.0, 1.0), ConfidenceLevel(0.9),
                               QuantileConvention::ComplementQuantile) +
                  quantile_var(Normal(0.0, 1.0), ConfidenceLevel(0.9),
                               QuantileConvention::AlphaQuantile)) <= 1e-9);
  CHECK_THROWS_AS(quantile_var(Poisson(1.0), ConfidenceLevel(0.9),
                               QuantileConvention::AlphaQuantile),
                  UnsupportedError);
  CHECK_THROWS_AS(quantile_var(Gamma(2.0, 1.0), ConfidenceLevel(0.9),
                               QuantileConvention::AlphaQuantile),
                  UnsupportedError);
}

TEST_CASE("quantiles agree with CDF bisection") {
  const std::vector<DistributionSpec> dists = {
      Normal(0.5, 2.0), Exponential(0.7), Laplace(-1.0, 1.5)};
  for (const auto& dist : dists) {
    CAPTURE(distribution_name(dist));
    for (const double q : {0.05, 0.25, 0.5, 0.75, 0.9, 0.99}) {
      const double direct = quantile_var(
          dist, ConfidenceLevel(q), QuantileConvention::AlphaQuantile);
      const double bisected = bisect_quantile(dist, q);
      CAPTURE(q);
      REQUIRE(std::fabs(direct - bisected) <=
              1e-8 * (1.0 + std::fabs(direct)));
    }
  }
}
