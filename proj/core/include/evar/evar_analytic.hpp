// Copyright 2026 the evar authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>

#include "evar/distributions.hpp"
#include "evar/lambert_w.hpp"

namespace evar {

/// Confidence level alpha in [0, 1). alpha = 0 is the risk-neutral limit
/// where the entropic value-at-risk reduces to the mean; alpha -> 1
/// approaches the essential supremum.
class ConfidenceLevel {
public:
  explicit ConfidenceLevel(double alpha);
  double alpha() const { return alpha_; }
  /// -log(1 - alpha), the constant the variational objective divides by t.
  double tail_weight() const;

private:
  double alpha_;
};

/// Diagnostic record attached to every EVaR evaluation.
///
/// t_star is the minimizing argument of the variational objective; it is
/// empty when the infimum is attained only as a limit (t -> 0 at alpha = 0,
/// or t -> infinity for a distribution concentrated at a point).
/// objective_at_t_star re-evaluates the objective from log_mgf at t_star and
/// must agree with the returned value; at a limit marker it carries the
/// limiting value itself.
struct EvarTrace {
  std::optional<double> t_star;
  std::optional<LambertBranch> branch;
  std::map<std::string, double> intermediates;
  double objective_at_t_star = 0.0;
};

struct EvarResult {
  double value;
  EvarTrace trace;
};

// Closed-form entropic value-at-risk, one routine per distribution family.
// Parameter constraints match the corresponding DistributionSpec structs and
// raise ParameterError when violated.

EvarResult evar_normal(double mu, double sigma, ConfidenceLevel level);
EvarResult evar_poisson(double lambda, ConfidenceLevel level);
EvarResult evar_compound_poisson_bernoulli(double lambda, double p,
                                           ConfidenceLevel level);
EvarResult evar_compound_poisson_normal(double lambda, double sigma,
                                        ConfidenceLevel level);
EvarResult evar_gamma(double k, double theta, ConfidenceLevel level);
EvarResult evar_exponential(double lambda, ConfidenceLevel level);
EvarResult evar_chi_squared(int k, ConfidenceLevel level);
EvarResult evar_laplace(double mu, double b, ConfidenceLevel level);
EvarResult evar_inverse_gaussian(double mu, double lambda,
                                 ConfidenceLevel level);
EvarResult evar_nig(double alpha, double beta, double mu, double delta,
                    ConfidenceLevel level);

/// Dispatches to the closed form matching the distribution's alternative.
EvarResult evar(const DistributionSpec& dist, ConfidenceLevel level);

/// Which quantile a value-at-risk request at confidence alpha refers to.
enum class QuantileConvention {
  /// The (1 - alpha)-quantile, inf{x : F(x) > 1 - alpha}.
  ComplementQuantile,
  /// The alpha-quantile F^{-1}(alpha), the usual risk-desk convention.
  AlphaQuantile,
};

/// Closed-form value-at-risk for the normal, exponential, and Laplace
/// distributions; raises UnsupportedError for anything else.
double quantile_var(const DistributionSpec& dist, ConfidenceLevel level,
                    QuantileConvention convention);

} // namespace evar
