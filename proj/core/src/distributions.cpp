// Copyright 2026 the evar authors
// SPDX-License-Identifier: Apache-2.0

#include "evar/distributions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "evar/errors.hpp"

namespace evar {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const char* message) {
  if (!ok) {
    throw ParameterError(message);
  }
}

bool finite(double v) { return std::isfinite(v); }

// --- Gauss-Legendre quadrature for the Bessel K1 factor ------------------

struct QuadratureRule {
  std::vector<double> nodes;   // on [-1, 1]
  std::vector<double> weights;
};

// Nodes via Newton iteration on the Legendre recurrence; standard and exact
// to machine precision for the sizes used here.
QuadratureRule gauss_legendre(int n) {
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) {
        break;
      }
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[n - 1 - i] = rule.weights[i];
  }
  return rule;
}

// log K1(z) with the exp(-z) peak factored out so large z stays finite:
// K1(z) = 1/2 Int exp(-z cosh u + u) du over the real line, truncated to
// [-30, 30] where the integrand has decayed far below double precision.
double log_bessel_k1(double z) {
  static const QuadratureRule rule = gauss_legendre(201);
  constexpr double kHalfWidth = 30.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double u = kHalfWidth * rule.nodes[i];
    sum += rule.weights[i] * std::exp(-z * (std::cosh(u) - 1.0) + u);
  }
  return -z + std::log(0.5 * kHalfWidth * sum);
}

double gamma_log_density(double shape, double scale, double x) {
  return (shape - 1.0) * std::log(x) - x / scale - std::lgamma(shape) -
         shape * std::log(scale);
}

} // namespace

Poisson::Poisson(double lambda_) : lambda(lambda_) {
  require(finite(lambda) && lambda > 0.0, "poisson: lambda must be > 0");
}

CompoundPoissonBernoulli::CompoundPoissonBernoulli(double lambda_, double p_)
    : lambda(lambda_), p(p_) {
  require(finite(lambda) && lambda > 0.0,
          "compound-poisson-bernoulli: lambda must be > 0");
  require(finite(p) && p >= 0.0 && p <= 1.0,
          "compound-poisson-bernoulli: p must be in [0, 1]");
}

CompoundPoissonNormal::CompoundPoissonNormal(double lambda_, double sigma_)
    : lambda(lambda_), sigma(sigma_) {
  require(finite(lambda) && lambda > 0.0,
          "compound-poisson-normal: lambda must be > 0");
  require(finite(sigma) && sigma > 0.0,
          "compound-poisson-normal: sigma must be > 0");
}

Gamma::Gamma(double k_, double theta_) : k(k_), theta(theta_) {
  require(finite(k) && k > 0.0, "gamma: k must be > 0");
  require(finite(theta) && theta > 0.0, "gamma: theta must be > 0");
}

Exponential::Exponential(double lambda_) : lambda(lambda_) {
  require(finite(lambda) && lambda > 0.0, "exponential: lambda must be > 0");
}

ChiSquared::ChiSquared(int k_) : k(k_) {
  require(k >= 1, "chi-squared: k must be >= 1");
}

Laplace::Laplace(double mu_, double b_) : mu(mu_), b(b_) {
  require(finite(mu), "laplace: mu must be finite");
  require(finite(b) && b > 0.0, "laplace: b must be > 0");
}

Normal::Normal(double mu_, double sigma_) : mu(mu_), sigma(sigma_) {
  require(finite(mu), "normal: mu must be finite");
  require(finite(sigma) && sigma > 0.0, "normal: sigma must be > 0");
}

InverseGaussian::InverseGaussian(double mu_, double lambda_)
    : mu(mu_), lambda(lambda_) {
  require(finite(mu) && mu > 0.0, "inverse-gaussian: mu must be > 0");
  require(finite(lambda) && lambda > 0.0,
          "inverse-gaussian: lambda must be > 0");
}

NormalInverseGaussian::NormalInverseGaussian(double alpha_, double beta_,
                                             double mu_, double delta_)
    : alpha(alpha_), beta(beta_), mu(mu_), delta(delta_) {
  require(finite(alpha) && alpha > 0.0, "nig: alpha must be > 0");
  require(finite(beta) && std::fabs(beta) < alpha,
          "nig: beta must satisfy |beta| < alpha");
  require(finite(mu), "nig: mu must be finite");
  require(finite(delta) && delta > 0.0, "nig: delta must be > 0");
}

MgfDomain mgf_domain(const DistributionSpec& dist) {
  return std::visit(
      [](const auto& d) -> MgfDomain {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Poisson> ||
                      std::is_same_v<T, CompoundPoissonBernoulli> ||
                      std::is_same_v<T, CompoundPoissonNormal> ||
                      std::is_same_v<T, Normal>) {
          return {kInf, false};
        } else if constexpr (std::is_same_v<T, Gamma>) {
          return {1.0 / d.theta, false};
        } else if constexpr (std::is_same_v<T, Exponential>) {
          return {d.lambda, false};
        } else if constexpr (std::is_same_v<T, ChiSquared>) {
          return {0.5, false};
        } else if constexpr (std::is_same_v<T, Laplace>) {
          return {1.0 / d.b, false};
        } else if constexpr (std::is_same_v<T, InverseGaussian>) {
          return {d.lambda / (2.0 * d.mu * d.mu), false};
        } else {
          static_assert(std::is_same_v<T, NormalInverseGaussian>);
          return {d.alpha - d.beta, true};
        }
      },
      dist);
}

double log_mgf(const DistributionSpec& dist, double t) {
  if (!(t >= 0.0)) {
    throw DomainError("log_mgf: t must be >= 0");
  }
  const MgfDomain dom = mgf_domain(dist);
  if (t > dom.sup_t || (t == dom.sup_t && !dom.closed_at_sup)) {
    throw DomainError("log_mgf: t outside the MGF domain");
  }
  return std::visit(
      [t](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Poisson>) {
          return d.lambda * std::expm1(t);
        } else if constexpr (std::is_same_v<T, CompoundPoissonBernoulli>) {
          // jump MGF 1 - p + p e^t, so lambda (m_jump - 1) = lambda p (e^t - 1)
          return d.lambda * d.p * std::expm1(t);
        } else if constexpr (std::is_same_v<T, CompoundPoissonNormal>) {
          return d.lambda * std::expm1(0.5 * d.sigma * d.sigma * t * t);
        } else if constexpr (std::is_same_v<T, Gamma>) {
          return -d.k * std::log1p(-d.theta * t);
        } else if constexpr (std::is_same_v<T, Exponential>) {
          return -std::log1p(-t / d.lambda);
        } else if constexpr (std::is_same_v<T, ChiSquared>) {
          return -0.5 * d.k * std::log1p(-2.0 * t);
        } else if constexpr (std::is_same_v<T, Laplace>) {
          return d.mu * t - std::log1p(-d.b * d.b * t * t);
        } else if constexpr (std::is_same_v<T, Normal>) {
          return t * (d.mu + 0.5 * d.sigma * d.sigma * t);
        } else if constexpr (std::is_same_v<T, InverseGaussian>) {
          // (lambda/mu)(1 - sqrt(1 - a)) with the difference computed as
          // a / (1 + sqrt(1 - a)) to avoid cancellation at small t
          const double a = 2.0 * d.mu * d.mu * t / d.lambda;
          return (d.lambda / d.mu) * a / (1.0 + std::sqrt(1.0 - a));
        } else {
          static_assert(std::is_same_v<T, NormalInverseGaussian>);
          // factored radicals keep the t = 0 and t = alpha - beta endpoints exact
          const double s0 = std::sqrt((d.alpha - d.beta) * (d.alpha + d.beta));
          const double st =
              std::sqrt((d.alpha - d.beta - t) * (d.alpha + d.beta + t));
          return d.mu * t + d.delta * (s0 - st);
        }
      },
      dist);
}

double mean(const DistributionSpec& dist) {
  return std::visit(
      [](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Poisson>) {
          return d.lambda;
        } else if constexpr (std::is_same_v<T, CompoundPoissonBernoulli>) {
          return d.lambda * d.p;
        } else if constexpr (std::is_same_v<T, CompoundPoissonNormal>) {
          return 0.0;
        } else if constexpr (std::is_same_v<T, Gamma>) {
          return d.k * d.theta;
        } else if constexpr (std::is_same_v<T, Exponential>) {
          return 1.0 / d.lambda;
        } else if constexpr (std::is_same_v<T, ChiSquared>) {
          return static_cast<double>(d.k);
        } else if constexpr (std::is_same_v<T, Laplace>) {
          return d.mu;
        } else if constexpr (std::is_same_v<T, Normal>) {
          return d.mu;
        } else if constexpr (std::is_same_v<T, InverseGaussian>) {
          return d.mu;
        } else {
          static_assert(std::is_same_v<T, NormalInverseGaussian>);
          const double s = std::sqrt((d.alpha - d.beta) * (d.alpha + d.beta));
          return d.mu + d.delta * d.beta / s;
        }
      },
      dist);
}

double pdf(const DistributionSpec& dist, double x) {
  return std::visit(
      [x](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Poisson> ||
                      std::is_same_v<T, CompoundPoissonBernoulli> ||
                      std::is_same_v<T, CompoundPoissonNormal>) {
          throw UnsupportedError(
              "pdf: not defined for discrete or compound distributions");
        } else if constexpr (std::is_same_v<T, Gamma>) {
          if (!(x > 0.0)) {
            throw DomainError("pdf: gamma support is x > 0");
          }
          return std::exp(gamma_log_density(d.k, d.theta, x));
        } else if constexpr (std::is_same_v<T, Exponential>) {
          if (!(x >= 0.0)) {
            throw DomainError("pdf: exponential support is x >= 0");
          }
          return d.lambda * std::exp(-d.lambda * x);
        } else if constexpr (std::is_same_v<T, ChiSquared>) {
          if (!(x > 0.0)) {
            throw DomainError("pdf: chi-squared support is x > 0");
          }
          return std::exp(gamma_log_density(0.5 * d.k, 2.0, x));
        } else if constexpr (std::is_same_v<T, Laplace>) {
          if (std::isnan(x)) {
            throw DomainError("pdf: x is NaN");
          }
          return std::exp(-std::fabs(x - d.mu) / d.b) / (2.0 * d.b);
        } else if constexpr (std::is_same_v<T, Normal>) {
          if (std::isnan(x)) {
            throw DomainError("pdf: x is NaN");
          }
          const double z = (x - d.mu) / d.sigma;
          return std::exp(-0.5 * z * z) /
                 (d.sigma * std::sqrt(2.0 * std::numbers::pi));
        } else if constexpr (std::is_same_v<T, InverseGaussian>) {
          if (!(x > 0.0)) {
            throw DomainError("pdf: inverse-gaussian support is x > 0");
          }
          const double r = x - d.mu;
          const double log_density =
              0.5 * (std::log(d.lambda) - std::log(2.0 * std::numbers::pi) -
                     3.0 * std::log(x)) -
              d.lambda * r * r / (2.0 * d.mu * d.mu * x);
          return std::exp(log_density);
        } else {
          static_assert(std::is_same_v<T, NormalInverseGaussian>);
          if (std::isnan(x)) {
            throw DomainError("pdf: x is NaN");
          }
          const double s = std::sqrt((d.alpha - d.beta) * (d.alpha + d.beta));
          const double q = std::sqrt(d.delta * d.delta +
                                     (x - d.mu) * (x - d.mu));
          const double log_density =
              std::log(d.alpha * d.delta / std::numbers::pi) - std::log(q) +
              d.delta * s + d.beta * (x - d.mu) + log_bessel_k1(d.alpha * q);
          return std::exp(log_density);
        }
      },
      dist);
}

std::string distribution_name(const DistributionSpec& dist) {
  return std::visit(
      [](const auto& d) -> std::string {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Poisson>) {
          return "poisson";
        } else if constexpr (std::is_same_v<T, CompoundPoissonBernoulli>) {
          return "compound-poisson-bernoulli";
        } else if constexpr (std::is_same_v<T, CompoundPoissonNormal>) {
          return "compound-poisson-normal";
        } else if constexpr (std::is_same_v<T, Gamma>) {
          return "gamma";
        } else if constexpr (std::is_same_v<T, Exponential>) {
          return "exponential";
        } else if constexpr (std::is_same_v<T, ChiSquared>) {
          return "chi-squared";
        } else if constexpr (std::is_same_v<T, Laplace>) {
          return "laplace";
        } else if constexpr (std::is_same_v<T, Normal>) {
          return "normal";
        } else if constexpr (std::is_same_v<T, InverseGaussian>) {
          return "inverse-gaussian";
        } else {
          static_assert(std::is_same_v<T, NormalInverseGaussian>);
          return "nig";
        }
      },
      dist);
}

} // namespace evar
