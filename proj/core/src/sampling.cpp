// Copyright 2026 the evar authors
// SPDX-License-Identifier: Apache-2.0

#include "evar/sampling.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "evar/errors.hpp"

namespace evar {
namespace {

class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  // uniform on the open interval (0, 1); the half-ulp offset keeps log(u)
  // and log(1 - u) finite
  double uniform() {
    return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform()));
    const double phi = 2.0 * std::numbers::pi * uniform();
    spare_ = r * std::sin(phi);
    have_spare_ = true;
    return r * std::cos(phi);
  }

  double exponential(double rate) { return -std::log(uniform()) / rate; }

  double laplace(double mu, double b) {
    const double u = uniform();
    return u < 0.5 ? mu + b * std::log(2.0 * u)
                   : mu - b * std::log(2.0 * (1.0 - u));
  }

  // Marsaglia-Tsang squeeze method; shapes below 1 are boosted to shape + 1
  // and corrected by a power of a uniform.
  double gamma(double shape, double scale) {
    if (shape < 1.0) {
      const double boost = std::pow(uniform(), 1.0 / shape);
      return gamma(shape + 1.0, scale) * boost;
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / (3.0 * std::sqrt(d));
    for (;;) {
      double x;
      double v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform();
      if (u < 1.0 - 0.0331 * x * x * x * x) {
        return d * v * scale;
      }
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) {
        return d * v * scale;
      }
    }
  }

  std::uint64_t poisson(double lambda) {
    if (lambda <= 30.0) {
      // CDF inversion by forward recursion on the pmf
      const double u = uniform();
      double p = std::exp(-lambda);
      double cum = p;
      std::uint64_t k = 0;
      while (u > cum && k < 10000) {
        ++k;
        p *= lambda / static_cast<double>(k);
        cum += p;
      }
      return k;
    }
    // transformed rejection with squeeze (Hormann's PTRS)
    const double b = 0.931 + 2.53 * std::sqrt(lambda);
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double vr = 0.9277 - 3.6224 / (b - 2.0);
    const double log_lambda = std::log(lambda);
    for (;;) {
      const double u = uniform() - 0.5;
      const double v = uniform();
      const double us = 0.5 - std::fabs(u);
      const double kr = std::floor((2.0 * a / us + b) * u + lambda + 0.43);
      if (us >= 0.07 && v <= vr) {
        return static_cast<std::uint64_t>(kr);
      }
      if (kr < 0.0 || (us < 0.013 && v > us)) {
        continue;
      }
      if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
          kr * log_lambda - lambda - std::lgamma(kr + 1.0)) {
        return static_cast<std::uint64_t>(kr);
      }
    }
  }

  double inverse_gaussian(double mu, double lambda) {
    const double nu = normal();
    const double y = nu * nu;
    const double x = mu + 0.5 * mu * mu * y / lambda -
                     0.5 * (mu / lambda) *
                         std::sqrt(4.0 * mu * lambda * y + mu * mu * y * y);
    return uniform() <= mu / (mu + x) ? x : mu * mu / x;
  }

  double draw(const DistributionSpec& dist) {
    return std::visit(
        [this](const auto& d) -> double {
          using T = std::decay_t<decltype(d)>;
          if constexpr (std::is_same_v<T, Poisson>) {
            return static_cast<double>(poisson(d.lambda));
          } else if constexpr (std::is_same_v<T, CompoundPoissonBernoulli>) {
            const std::uint64_t jumps = poisson(d.lambda);
            std::uint64_t successes = 0;
            for (std::uint64_t i = 0; i < jumps; ++i) {
              successes += uniform() < d.p ? 1 : 0;
            }
            return static_cast<double>(successes);
          } else if constexpr (std::is_same_v<T, CompoundPoissonNormal>) {
            const std::uint64_t jumps = poisson(d.lambda);
            double total = 0.0;
            for (std::uint64_t i = 0; i < jumps; ++i) {
              total += d.sigma * normal();
            }
            return total;
          } else if constexpr (std::is_same_v<T, Gamma>) {
            return gamma(d.k, d.theta);
          } else if constexpr (std::is_same_v<T, Exponential>) {
            return exponential(d.lambda);
          } else if constexpr (std::is_same_v<T, ChiSquared>) {
            return gamma(0.5 * d.k, 2.0);
          } else if constexpr (std::is_same_v<T, Laplace>) {
            return laplace(d.mu, d.b);
          } else if constexpr (std::is_same_v<T, Normal>) {
            return d.mu + d.sigma * normal();
          } else if constexpr (std::is_same_v<T, InverseGaussian>) {
            return inverse_gaussian(d.mu, d.lambda);
          } else {
            static_assert(std::is_same_v<T, NormalInverseGaussian>);
            // variance mixture: X | Z ~ N(mu + beta Z, Z) with inverse
            // Gaussian mixing Z of mean delta/sqrt(alpha^2 - beta^2)
            const double s =
                std::sqrt((d.alpha - d.beta) * (d.alpha + d.beta));
            const double z = inverse_gaussian(d.delta / s, d.delta * d.delta);
            return d.mu + d.beta * z + std::sqrt(z) * normal();
          }
        },
        dist);
  }

private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

} // namespace

std::vector<double> sample(const DistributionSpec& dist, std::uint64_t seed,
                           std::size_t n) {
  if (n == 0) {
    throw ParameterError("sample: n must be >= 1");
  }
  Sampler sampler(seed);
  std::vector<double> draws(n);
  for (std::size_t i = 0; i < n; ++i) {
    draws[i] = sampler.draw(dist);
  }
  return draws;
}

} // namespace evar
