// Copyright 2026 the evar authors
// SPDX-License-Identifier: Apache-2.0
//
// Unit suite for the real Lambert W branches: special values, the defining
// identity on dense grids, monotonicity, the log identity, the derivative
// against a finite-difference oracle, and the domain-error contract.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <initializer_list>
#include <limits>
#include <vector>

#include "evar/errors.hpp"
#include "evar/lambert_w.hpp"

using evar::lambert_w;
using evar::lambert_w_derivative;
using evar::LambertBranch;

namespace {

constexpr double kInvE = 0.367879441171442321595523770161460867;

double identity_residual(LambertBranch branch, double x) {
  const double w = lambert_w(branch, x);
  return std::fabs(w * std::exp(w) - x);
}

// Log-spaced grid of the distance above the branch point, mapped to inputs
// x = offset - 1/e; covers [-1/e + lo_offset, -1/e + hi_offset].
std::vector<double> branch_offset_grid(double lo_offset, double hi_offset,
                                       int n) {
  std::vector<double> xs(n);
  const double log_lo = std::log(lo_offset);
  const double log_hi = std::log(hi_offset);
  for (int i = 0; i < n; ++i) {
    const double f = static_cast<double>(i) / (n - 1);
    xs[i] = std::exp(log_lo + f * (log_hi - log_lo)) - kInvE;
  }
  return xs;
}

} // namespace

TEST_CASE("special values hit their closed-form points") {
  CHECK(lambert_w(LambertBranch::Principal, 0.0) == 0.0);
  CHECK(std::fabs(lambert_w(LambertBranch::Principal, std::exp(1.0)) - 1.0) <=
        1e-12);
  CHECK(std::fabs(lambert_w(LambertBranch::Principal, -kInvE) - (-1.0)) <=
        1e-12);
  CHECK(std::fabs(lambert_w(LambertBranch::MinusOne, -kInvE) - (-1.0)) <=
        1e-12);
  CHECK(std::fabs(lambert_w(LambertBranch::MinusOne, -2.0 * std::exp(-2.0)) -
                  (-2.0)) <= 1e-12);
  CHECK(std::fabs(lambert_w(LambertBranch::Principal,
                            -0.5 * std::exp(-0.5)) -
                  (-0.5)) <= 1e-12);
}

TEST_CASE("defining identity holds to 1e-12 * max(1, |x|) on dense grids") {
  SUBCASE("principal branch, x in [-1/e + 1e-12, 1e6]") {
    const auto xs = branch_offset_grid(1e-12, 1e6 + kInvE, 10000);
    for (const double x : xs) {
      CAPTURE(x);
      REQUIRE(identity_residual(LambertBranch::Principal, x) <=
              1e-12 * std::max(1.0, std::fabs(x)));
    }
  }
  SUBCASE("lower branch, x in [-1/e + 1e-12, -1e-12]") {
    const auto xs = branch_offset_grid(1e-12, kInvE - 1e-12, 10000);
    for (const double x : xs) {
      CAPTURE(x);
      REQUIRE(identity_residual(LambertBranch::MinusOne, x) <=
              1e-12 * std::max(1.0, std::fabs(x)));
    }
  }
}

TEST_CASE("W0 is strictly increasing and W-1 strictly decreasing") {
  const auto xs0 = branch_offset_grid(1e-10, 1e4 + kInvE, 2000);
  for (std::size_t i = 1; i < xs0.size(); ++i) {
    REQUIRE(lambert_w(LambertBranch::Principal, xs0[i]) >
            lambert_w(LambertBranch::Principal, xs0[i - 1]));
  }
  const auto xsm = branch_offset_grid(1e-10, kInvE - 1e-12, 2000);
  for (std::size_t i = 1; i < xsm.size(); ++i) {
    // grid ascends in x toward 0; W-1 must descend toward -infinity
    REQUIRE(lambert_w(LambertBranch::MinusOne, xsm[i]) <
            lambert_w(LambertBranch::MinusOne, xsm[i - 1]));
  }
}

TEST_CASE("log(-W(z)) = log(-z) - W(z) on [-1/e, 0), both branches") {
  const auto zs = branch_offset_grid(1e-9, kInvE - 1e-12, 1000);
  for (const double z : zs) {
    CAPTURE(z);
    for (const LambertBranch branch :
         {LambertBranch::Principal, LambertBranch::MinusOne}) {
      const double w = lambert_w(branch, z);
      REQUIRE(std::fabs(std::log(-w) - (std::log(-z) - w)) <= 1e-10);
    }
  }
}

TEST_CASE("both branches meet the branch point continuously") {
  // just above the branch point, W = -1 +/- sqrt(2 e u) + O(u), u = x + 1/e
  const double u = 1e-12;
  const double x = -kInvE + u;
  const double deviation = std::sqrt(2.0 * u * std::exp(1.0));
  const double w0 = lambert_w(LambertBranch::Principal, x);
  const double wm = lambert_w(LambertBranch::MinusOne, x);
  CHECK(std::fabs(w0 - (-1.0 + deviation)) <= 0.01 * deviation);
  CHECK(std::fabs(wm - (-1.0 - deviation)) <= 0.01 * deviation);
  CHECK(w0 >= -1.0);
  CHECK(wm <= -1.0);
}

TEST_CASE("W0 preserves the sign of x") {
  for (const double x : {-0.3, -0.1, -1e-6}) {
    CHECK(lambert_w(LambertBranch::Principal, x) < 0.0);
  }
  for (const double x : {1e-6, 0.5, 2.0, 100.0}) {
    CHECK(lambert_w(LambertBranch::Principal, x) > 0.0);
  }
}

TEST_CASE("branch ranges: W0 >= -1, W-1 <= -1") {
  const auto xs = branch_offset_grid(1e-12, kInvE - 1e-12, 500);
  for (const double x : xs) {
    CHECK(lambert_w(LambertBranch::Principal, x) >= -1.0);
    CHECK(lambert_w(LambertBranch::MinusOne, x) <= -1.0);
  }
}

TEST_CASE("derivative matches the analytic substitution and differences") {
  // W0(e) = 1 gives W / (x (1 + W)) = 1 / (2e)
  CHECK(std::fabs(lambert_w_derivative(LambertBranch::Principal,
                                       std::exp(1.0)) -
                  1.0 / (2.0 * std::exp(1.0))) <= 1e-14);

  const auto fd = [](LambertBranch branch, double x) {
    const double h = 1e-6 * std::fabs(x);
    return (lambert_w(branch, x + h) - lambert_w(branch, x - h)) / (2.0 * h);
  };
  for (const double x : {0.5, 1.0, 3.0, 10.0, -0.1, -0.3}) {
    const double exact = lambert_w_derivative(LambertBranch::Principal, x);
    CAPTURE(x);
    REQUIRE(std::fabs(exact - fd(LambertBranch::Principal, x)) <=
            1e-6 * std::fabs(exact));
  }
  for (const double x : {-0.05, -0.1, -0.2, -0.3}) {
    const double exact = lambert_w_derivative(LambertBranch::MinusOne, x);
    CAPTURE(x);
    CHECK(exact < 0.0);
    REQUIRE(std::fabs(exact - fd(LambertBranch::MinusOne, x)) <=
            1e-6 * std::fabs(exact));
  }
}

TEST_CASE("domain errors and singularities") {
  CHECK_THROWS_AS(lambert_w(LambertBranch::Principal, -kInvE - 1e-6),
                  evar::DomainError);
  CHECK_THROWS_AS(lambert_w(LambertBranch::MinusOne, -kInvE - 1e-6),
                  evar::DomainError);
  CHECK_THROWS_AS(lambert_w(LambertBranch::MinusOne, 0.0), evar::DomainError);
  CHECK_THROWS_AS(lambert_w(LambertBranch::MinusOne, 0.5), evar::DomainError);
  CHECK_THROWS_AS(lambert_w(LambertBranch::Principal,
                            std::nan("")),
                  evar::DomainError);
  CHECK_THROWS_AS(lambert_w_derivative(LambertBranch::Principal, 0.0),
                  evar::SingularityError);
  CHECK_THROWS_AS(lambert_w_derivative(LambertBranch::Principal, -kInvE),
                  evar::SingularityError);
  CHECK_THROWS_AS(lambert_w_derivative(LambertBranch::MinusOne, -kInvE),
                  evar::SingularityError);
}

TEST_CASE("inputs a hair below -1/e clamp to the branch point") {
  const double x = -kInvE - 0.5e-12; // inside the clamp band
  CHECK(lambert_w(LambertBranch::Principal, x) == -1.0);
  CHECK(lambert_w(LambertBranch::MinusOne, x) == -1.0);
}

TEST_CASE("infinite input on the principal branch returns infinity") {
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(lambert_w(LambertBranch::Principal, inf) == inf);
}
