// Copyright 2026 the evar authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <variant>

namespace evar {

// Parameter structs validate at construction and throw ParameterError on a
// violated constraint, so a constructed DistributionSpec is always usable.

struct Poisson {
  double lambda; // rate, > 0
  explicit Poisson(double lambda_);
};

/// Compound Poisson sum of Bernoulli(p) jumps; equal in law to a Poisson
/// with rate lambda * p.
struct CompoundPoissonBernoulli {
  double lambda; // jump intensity, > 0
  double p;      // jump success probability, in [0, 1]
  CompoundPoissonBernoulli(double lambda_, double p_);
};

/// Compound Poisson sum of centered normal jumps with scale sigma.
struct CompoundPoissonNormal {
  double lambda; // jump intensity, > 0
  double sigma;  // jump standard deviation, > 0
  CompoundPoissonNormal(double lambda_, double sigma_);
};

struct Gamma {
  double k;     // shape, > 0
  double theta; // scale, > 0
  Gamma(double k_, double theta_);
};

struct Exponential {
  double lambda; // rate, > 0
  explicit Exponential(double lambda_);
};

struct ChiSquared {
  int k; // degrees of freedom, >= 1
  explicit ChiSquared(int k_);
};

struct Laplace {
  double mu; // location
  double b;  // scale, > 0
  Laplace(double mu_, double b_);
};

struct Normal {
  double mu;    // mean
  double sigma; // standard deviation, > 0
  Normal(double mu_, double sigma_);
};

struct InverseGaussian {
  double mu;     // mean, > 0
  double lambda; // shape, > 0
  InverseGaussian(double mu_, double lambda_);
};

/// Normal-inverse Gaussian with tail heaviness alpha, asymmetry beta
/// (|beta| < alpha), location mu, and scale delta > 0.
struct NormalInverseGaussian {
  double alpha;
  double beta;
  double mu;
  double delta;
  NormalInverseGaussian(double alpha_, double beta_, double mu_, double delta_);
};

using DistributionSpec =
    std::variant<Poisson, CompoundPoissonBernoulli, CompoundPoissonNormal,
                 Gamma, Exponential, ChiSquared, Laplace, Normal,
                 InverseGaussian, NormalInverseGaussian>;

/// Upper end of the set of t >= 0 where the MGF is finite. sup_t is +inf for
/// an entire MGF; closed_at_sup says whether t = sup_t itself is admissible.
struct MgfDomain {
  double sup_t;
  bool closed_at_sup;
};

/// log m_X(t) evaluated analytically. Requires 0 <= t inside the MGF domain
/// (DomainError otherwise); log_mgf(dist, 0) == 0 exactly.
double log_mgf(const DistributionSpec& dist, double t);

MgfDomain mgf_domain(const DistributionSpec& dist);

double mean(const DistributionSpec& dist);

/// Probability density of the continuous distributions. The three discrete or
/// compound variants raise UnsupportedError; x outside the support raises
/// DomainError. The normal-inverse Gaussian density evaluates the Bessel K1
/// factor by Gauss-Legendre quadrature (201 points on u in [-30, 30] after
/// substituting t = exp(u) into K1(z) = 1/2 Int_0^inf exp(-z(t + 1/t)/2) dt).
double pdf(const DistributionSpec& dist, double x);

/// Stable lowercase tag, e.g. "chi-squared"; used by the CLI and reports.
std::string distribution_name(const DistributionSpec& dist);

} // namespace evar
