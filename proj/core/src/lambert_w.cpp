// Copyright 2026 the evar authors
// SPDX-License-Identifier: Apache-2.0

#include "evar/lambert_w.hpp"

#include <cmath>
#include <limits>

#include "evar/errors.hpp"

namespace evar {
namespace {

constexpr double kE = 2.718281828459045235360287471352662498;
constexpr double kInvE = 0.367879441171442321595523770161460867;
// Inputs this far below -1/e are rounding noise and collapse to the branch
// point; anything lower is a genuine domain violation.
constexpr double kBranchClamp = 1e-12;
// Distance 1 + e*x below which the branch-point expansion is returned
// directly; Halley's denominator degenerates there.
constexpr double kSeriesCutoff = 1e-6;

// Expansion of both branches around the branch point x = -1/e in
// p = sign * sqrt(2 * (1 + e*x)); sign is +1 for W0, -1 for W-1.
double branch_point_series(double u, double sign) {
  const double p = sign * std::sqrt(2.0 * u);
  return -1.0 + p - p * p / 3.0;
}

// Halley iteration on f(w) = w*exp(w) - x. [lo, hi] must bracket the root;
// a candidate leaving the bracket is replaced by the bisection midpoint, so
// wild steps near the branch point cannot escape to the other branch.
// increasing says whether f is increasing on the bracket (true on w > -1).
double halley(double x, double w, double lo, double hi, bool increasing) {
  for (int iter = 0; iter < 50; ++iter) {
    const double ew = std::exp(w);
    const double f = std::fma(w, ew, -x);
    if (f == 0.0) break;
    if ((f > 0.0) == increasing) {
      hi = w;
    } else {
      lo = w;
    }
    const double fp = ew * (1.0 + w);
    // fpp / fp written as (2+w)/(1+w) so the ratio survives exp underflow.
    const double step = f / (fp - 0.5 * f * (2.0 + w) / (1.0 + w));
    const double next = w - step;
    // Converged: w is now a bracket endpoint, so a sub-ulp step can round
    // next onto hi/lo and must not be mistaken for an escaping iterate.
    if (std::fabs(step) <= 1e-15 * (1.0 + std::fabs(w))) {
      if (next > lo && next < hi) {
        w = next;
      }
      break;
    }
    if (next > lo && next < hi) {
      w = next;
    } else {
      w = std::isinf(hi) ? std::max(1.0, 2.0 * w) : 0.5 * (lo + hi);
    }
  }
  return w;
}

double principal_guess(double x) {
  if (std::fabs(x) < 0.3) {
    return x * (1.0 - x + 1.5 * x * x);
  }
  if (x > 3.0) {
    const double l1 = std::log(x);
    return l1 - std::log(l1);
  }
  // Pade [2/2] of W0 about 0; adequate on the remaining midrange.
  return x * (60.0 + 114.0 * x + 17.0 * x * x) /
         (60.0 + 174.0 * x + 101.0 * x * x);
}

} // namespace

double lambert_w(LambertBranch branch, double x) {
  if (std::isnan(x)) {
    throw DomainError("lambert_w: x is NaN");
  }
  if (x < -kInvE) {
    if (x < -kInvE - kBranchClamp) {
      throw DomainError("lambert_w: x below the branch point -1/e");
    }
    x = -kInvE;
  }
  if (x == -kInvE) {
    // Representable branch point: both branches meet at exactly -1, and -1
    // satisfies the defining identity here to within one rounding of 1/e.
    return -1.0;
  }

  if (branch == LambertBranch::MinusOne) {
    if (x >= 0.0) {
      throw DomainError("lambert_w: W-1 requires x < 0");
    }
    const double u = std::max(0.0, std::fma(kE, x, 1.0));
    if (u < kSeriesCutoff) {
      return branch_point_series(u, -1.0);
    }
    const double guess = x > -0.27
                             ? std::log(-x) - std::log(-std::log(-x))
                             : branch_point_series(u, -1.0);
    // f decreases on (-inf, -1]; e^w underflows at the far end so f(-746)
    // evaluates to -x > 0 and the bracket stays valid for any admissible x.
    return halley(x, guess, -746.0, -1.0, false);
  }

  if (x == 0.0) {
    return 0.0;
  }
  if (std::isinf(x)) {
    return x;
  }
  if (x < 0.0) {
    const double u = std::max(0.0, std::fma(kE, x, 1.0));
    if (u < kSeriesCutoff) {
      return branch_point_series(u, 1.0);
    }
    const double guess = x < -0.3 ? branch_point_series(u, 1.0) : principal_guess(x);
    return halley(x, guess, -1.0, 0.0, true);
  }
  return halley(x, principal_guess(x), 0.0,
                std::numeric_limits<double>::infinity(), true);
}

double lambert_w_derivative(LambertBranch branch, double x) {
  const double w = lambert_w(branch, x);
  const double denom = x * (1.0 + w);
  if (denom == 0.0) {
    throw SingularityError(
        "lambert_w_derivative: singular at x = 0 and at the branch point");
  }
  return w / denom;
}

} // namespace evar
