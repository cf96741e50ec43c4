// Copyright 2026 the evar authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>

#include "evar/distributions.hpp"
#include "evar/evar_analytic.hpp"

namespace evar {

/// Knobs for the numerical minimizer. Defaults reproduce the reference
/// behaviour; tests may loosen rel_tol or shrink grid_points when the
/// objective itself is statistical noise.
struct OracleOptions {
  double rel_tol = 1e-10; // relative width at which golden-section stops
  int max_iters = 200;    // combined bracketing + refinement budget
  int grid_points = 512;  // coarse scan size on finite MGF domains
  double t_floor = 1e-10; // smallest probed t; stands in for the t -> 0 limit
};

/// One evaluation of the variational objective, f(t) = (-log(1 - alpha)
/// + log m_X(t)) / t, at a t strictly inside the MGF domain.
struct ObjectiveProbe {
  double t;
  double f_value;
};

/// The variational objective itself; DomainError when t is not strictly
/// positive and inside the MGF domain.
double objective(const DistributionSpec& dist, ConfidenceLevel level,
                 double t);

/// Minimizes the variational objective directly, independent of any closed
/// form: a uniform coarse scan on finite MGF domains (or doubling/halving
/// bracket expansion from t = 1 on infinite ones) followed by golden-section
/// refinement. When the scan puts the minimum at the smallest probed t the
/// infimum sits on the t -> 0 boundary; the result then carries the
/// objective at t_floor and an empty t_star.
EvarResult evar_numeric(const DistributionSpec& dist, ConfidenceLevel level,
                        const OracleOptions& options = {});

/// Same minimization applied to the empirical log-MGF of n freshly drawn
/// samples (see sample()), with the log-sum-exp evaluated against the
/// largest exponent so large t cannot overflow.
EvarResult evar_monte_carlo(const DistributionSpec& dist,
                            ConfidenceLevel level, std::size_t n,
                            std::uint64_t seed,
                            const OracleOptions& options = {});

} // namespace evar
