// Copyright 2026 the evar authors
// SPDX-License-Identifier: Apache-2.0

#include "evar/evar_analytic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "evar/errors.hpp"

namespace evar {
namespace {

constexpr double kE = 2.718281828459045235360287471352662498;
constexpr double kSqrtE = 1.648721270700128146848650787814163571;
// Below this |beta| the compound-Poisson-normal ratio beta / W0(gamma) is
// evaluated at its removable singularity instead.
constexpr double kBetaThreshold = 1e-12;

// Attaches the diagnostic trace. A nonpositive or nonfinite t_star means the
// infimum is a limit, recorded as an empty t_star with the limiting value.
EvarResult finish(const DistributionSpec& dist, ConfidenceLevel level,
                  double value, double t_star,
                  std::optional<LambertBranch> branch,
                  std::map<std::string, double> symbols) {
  EvarTrace trace;
  trace.branch = branch;
  trace.intermediates = std::move(symbols);
  if (t_star > 0.0 && std::isfinite(t_star)) {
    trace.t_star = t_star;
    trace.objective_at_t_star =
        (level.tail_weight() + log_mgf(dist, t_star)) / t_star;
  } else {
    trace.objective_at_t_star = value;
  }
  return {value, trace};
}

// Rational initializer for the standard normal quantile (Acklam), polished
// with one Halley step through erfc; accurate to roughly machine precision.
double inverse_normal_cdf(double p) {
  static constexpr double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                  -2.759285104469687e+02, 1.383577518672690e+02,
                                  -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                  -1.556989798598866e+02, 6.680131188771972e+01,
                                  -1.328068155288572e+01};
  static constexpr double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                  -2.400758277161838e+00, -2.549732539343734e+00,
                                  4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                  2.445134137142996e+00, 3.754408661907416e+00};
  if (p <= 0.0) {
    return -std::numeric_limits<double>::infinity();
  }
  if (p >= 1.0) {
    return std::numeric_limits<double>::infinity();
  }
  constexpr double plow = 0.02425;
  double x;
  if (p < plow) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - plow) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) *
        q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log1p(-p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double err = 0.5 * std::erfc(-x / std::numbers::sqrt2) - p;
  const double u = err * std::sqrt(2.0 * std::numbers::pi) *
                   std::exp(0.5 * x * x);
  return x - u / (1.0 + 0.5 * x * u);
}

} // namespace

ConfidenceLevel::ConfidenceLevel(double alpha) : alpha_(alpha) {
  if (!(std::isfinite(alpha) && alpha >= 0.0 && alpha < 1.0)) {
    throw ParameterError("confidence level alpha must be in [0, 1)");
  }
}

double ConfidenceLevel::tail_weight() const { return -std::log1p(-alpha_); }

EvarResult evar_normal(double mu, double sigma, ConfidenceLevel level) {
  const DistributionSpec dist = Normal(mu, sigma);
  const double root = std::sqrt(2.0 * level.tail_weight());
  return finish(dist, level, mu + sigma * root, root / sigma, std::nullopt,
                {});
}

EvarResult evar_poisson(double lambda, ConfidenceLevel level) {
  const DistributionSpec dist = Poisson(lambda);
  const double beta = level.tail_weight() - lambda;
  const double w = lambert_w(LambertBranch::Principal, beta / (kE * lambda));
  // single form e * lambda * exp(W0); continuous through beta = 0
  const double value = kE * lambda * std::exp(w);
  return finish(dist, level, value, 1.0 + w, LambertBranch::Principal,
                {{"beta", beta}});
}

EvarResult evar_compound_poisson_bernoulli(double lambda, double p,
                                           ConfidenceLevel level) {
  const DistributionSpec dist = CompoundPoissonBernoulli(lambda, p);
  if (p == 0.0) {
    // the sum is identically zero; the objective decreases to 0 as t grows
    return finish(dist, level, 0.0, 0.0, std::nullopt,
                  {{"beta", level.tail_weight()}});
  }
  // equal in law to a Poisson with rate lambda * p
  return evar_poisson(lambda * p, level);
}

EvarResult evar_compound_poisson_normal(double lambda, double sigma,
                                        ConfidenceLevel level) {
  const DistributionSpec dist = CompoundPoissonNormal(lambda, sigma);
  const double beta = level.tail_weight() - lambda;
  const double gamma = beta / (2.0 * kSqrtE * lambda);
  std::map<std::string, double> symbols{{"beta", beta}, {"gamma", gamma}};
  if (std::fabs(beta) <= kBetaThreshold) {
    return finish(dist, level, lambda * sigma * kSqrtE, 1.0 / sigma,
                  LambertBranch::Principal, std::move(symbols));
  }
  const double w = lambert_w(LambertBranch::Principal, gamma);
  const double s = std::sqrt(std::max(0.0, 1.0 + 2.0 * w));
  const double value = beta * sigma * s / (2.0 * w);
  return finish(dist, level, value, s / sigma, LambertBranch::Principal,
                std::move(symbols));
}

EvarResult evar_gamma(double k, double theta, ConfidenceLevel level) {
  const DistributionSpec dist = Gamma(k, theta);
  // z = -(1 - alpha)^{1/k} / e, evaluated in log space for large shapes
  const double z = -std::exp(-1.0 + std::log1p(-level.alpha()) / k);
  const double w = lambert_w(LambertBranch::MinusOne, z);
  const double value = -k * theta * w;
  const double t_star = (1.0 + 1.0 / w) / theta;
  return finish(dist, level, value, t_star, LambertBranch::MinusOne,
                {{"b_gamma", level.tail_weight() - k * std::log(theta)},
                 {"z_gamma", z}});
}

EvarResult evar_exponential(double lambda, ConfidenceLevel level) {
  const DistributionSpec dist = Exponential(lambda); // validates lambda
  (void)dist;
  return evar_gamma(1.0, 1.0 / lambda, level);
}

EvarResult evar_chi_squared(int k, ConfidenceLevel level) {
  const DistributionSpec dist = ChiSquared(k); // validates k
  (void)dist;
  return evar_gamma(0.5 * k, 2.0, level);
}

EvarResult evar_laplace(double mu, double b, ConfidenceLevel level) {
  const DistributionSpec dist = Laplace(mu, b);
  const double gamma = -2.0 * std::exp(-2.0) * (1.0 - level.alpha());
  const double w = lambert_w(LambertBranch::MinusOne, gamma);
  // 1 + 2/W is 0 at alpha = 0 up to rounding; clamp before the square root
  const double s = std::sqrt(std::max(0.0, 1.0 + 2.0 / w));
  const double value = mu - b * w * s;
  return finish(dist, level, value, s / b, LambertBranch::MinusOne,
                {{"a", level.tail_weight()}, {"gamma", gamma}});
}

EvarResult evar_inverse_gaussian(double mu, double lambda,
                                 ConfidenceLevel level) {
  const DistributionSpec dist = InverseGaussian(mu, lambda);
  const double c = level.tail_weight();
  const double d1 = mu * c / lambda; // delta - 1, exact near alpha = 0
  const double delta = 1.0 + d1;
  const double root = std::sqrt(d1 * (d1 + 2.0)); // sqrt(delta^2 - 1)
  const double value = mu * (delta + root);
  // delta - root rewritten as 1 / (delta + root) to dodge cancellation
  const double q = 1.0 / (delta + root);
  const double t_star =
      lambda / (2.0 * mu * mu) * (1.0 - q) * (1.0 + q);
  return finish(dist, level, value, t_star, std::nullopt,
                {{"c", c}, {"delta_ig", delta}});
}

EvarResult evar_nig(double alpha, double beta, double mu, double delta,
                    ConfidenceLevel level) {
  const DistributionSpec dist = NormalInverseGaussian(alpha, beta, mu, delta);
  const double s = std::sqrt((alpha - beta) * (alpha + beta));
  const double ell = level.tail_weight() / delta;
  const double phi = ell + s;
  // psi = sqrt(phi^2 - s^2) expanded to avoid cancellation at small alpha
  const double psi = std::sqrt(ell * (ell + 2.0 * s));
  double t_star = (alpha - beta) * (alpha + beta) * psi /
                  (alpha * phi + beta * psi);
  std::map<std::string, double> symbols{{"phi", phi}, {"psi", psi}};
  if (!(t_star > 0.0)) {
    // alpha = 0: the infimum is the mean, attained as t -> 0
    return finish(dist, level, mu + delta * beta / s, 0.0, std::nullopt,
                  std::move(symbols));
  }
  t_star = std::min(t_star, alpha - beta); // the domain endpoint is admissible
  const double tail =
      std::sqrt((alpha - beta - t_star) * (alpha + beta + t_star));
  const double value = mu + (delta / t_star) * (phi - tail);
  return finish(dist, level, value, t_star, std::nullopt, std::move(symbols));
}

EvarResult evar(const DistributionSpec& dist, ConfidenceLevel level) {
  return std::visit(
      [level](const auto& d) -> EvarResult {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Poisson>) {
          return evar_poisson(d.lambda, level);
        } else if constexpr (std::is_same_v<T, CompoundPoissonBernoulli>) {
          return evar_compound_poisson_bernoulli(d.lambda, d.p, level);
        } else if constexpr (std::is_same_v<T, CompoundPoissonNormal>) {
          return evar_compound_poisson_normal(d.lambda, d.sigma, level);
        } else if constexpr (std::is_same_v<T, Gamma>) {
          return evar_gamma(d.k, d.theta, level);
        } else if constexpr (std::is_same_v<T, Exponential>) {
          return evar_exponential(d.lambda, level);
        } else if constexpr (std::is_same_v<T, ChiSquared>) {
          return evar_chi_squared(d.k, level);
        } else if constexpr (std::is_same_v<T, Laplace>) {
          return evar_laplace(d.mu, d.b, level);
        } else if constexpr (std::is_same_v<T, Normal>) {
          return evar_normal(d.mu, d.sigma, level);
        } else if constexpr (std::is_same_v<T, InverseGaussian>) {
          return evar_inverse_gaussian(d.mu, d.lambda, level);
        } else {
          static_assert(std::is_same_v<T, NormalInverseGaussian>);
          return evar_nig(d.alpha, d.beta, d.mu, d.delta, level);
        }
      },
      dist);
}

double quantile_var(const DistributionSpec& dist, ConfidenceLevel level,
                    QuantileConvention convention) {
  const double q = convention == QuantileConvention::AlphaQuantile
                       ? level.alpha()
                       : 1.0 - level.alpha();
  return std::visit(
      [q](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Normal>) {
          return d.mu + d.sigma * inverse_normal_cdf(q);
        } else if constexpr (std::is_same_v<T, Exponential>) {
          return -std::log1p(-q) / d.lambda;
        } else if constexpr (std::is_same_v<T, Laplace>) {
          return q < 0.5 ? d.mu + d.b * std::log(2.0 * q)
                         : d.mu - d.b * std::log(2.0 * (1.0 - q));
        } else {
          throw UnsupportedError(
              "quantile_var: closed-form quantile available only for "
              "normal, exponential, and laplace");
        }
      },
      dist);
}

} // namespace evar
