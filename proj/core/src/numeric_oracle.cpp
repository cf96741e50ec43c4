// Copyright 2026 the evar authors
// SPDX-License-Identifier: Apache-2.0

#include "evar/numeric_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "evar/errors.hpp"
#include "evar/sampling.hpp"

namespace evar {
namespace {

constexpr double kGolden = 0.618033988749894848204586834365638118;
// Open MGF domains are scanned up to this fraction of the supremum.
constexpr double kOpenDomainShrink = 1.0 - 1e-9;

void validate(const OracleOptions& options) {
  if (!(options.rel_tol > 0.0 && options.rel_tol < 1.0)) {
    throw ParameterError("oracle: rel_tol must be in (0, 1)");
  }
  if (options.max_iters < 1) {
    throw ParameterError("oracle: max_iters must be >= 1");
  }
  if (options.grid_points < 8) {
    throw ParameterError("oracle: grid_points must be >= 8");
  }
  if (!(options.t_floor > 0.0)) {
    throw ParameterError("oracle: t_floor must be > 0");
  }
}

struct MinimumEstimate {
  ObjectiveProbe best;
  bool at_floor; // infimum detected on the t -> 0 boundary
};

// Golden-section refinement of a bracket [lo, hi] known to contain the
// minimum. Ties move toward smaller t.
ObjectiveProbe golden_section(const std::function<double(double)>& f,
                              double lo, double hi,
                              const OracleOptions& options, int used_iters) {
  double x1 = hi - kGolden * (hi - lo);
  double x2 = lo + kGolden * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int iter = used_iters;
       iter < options.max_iters && (hi - lo) > options.rel_tol * (lo + hi);
       ++iter) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kGolden * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kGolden * (hi - lo);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? ObjectiveProbe{x1, f1} : ObjectiveProbe{x2, f2};
}

MinimumEstimate minimize(const std::function<double(double)>& f,
                         const MgfDomain& domain,
                         const OracleOptions& options) {
  if (std::isfinite(domain.sup_t)) {
    // coarse uniform scan, then refine around the best grid point
    const double lo = options.t_floor;
    const double hi = domain.closed_at_sup ? domain.sup_t
                                           : domain.sup_t * kOpenDomainShrink;
    if (!(hi > lo)) {
      return {ObjectiveProbe{options.t_floor, f(options.t_floor)}, true};
    }
    const int n = options.grid_points;
    std::vector<ObjectiveProbe> grid(n);
    int best = 0;
    for (int i = 0; i < n; ++i) {
      const double t = lo + (hi - lo) * i / (n - 1);
      grid[i] = {t, f(t)};
      if (grid[i].f_value < grid[best].f_value) {
        best = i;
      }
    }
    if (best == 0) {
      return {grid[0], true};
    }
    const double bracket_lo = grid[best - 1].t;
    const double bracket_hi = best + 1 < n ? grid[best + 1].t : hi;
    return {golden_section(f, bracket_lo, bracket_hi, options, 0), false};
  }

  // infinite domain: bracket by doubling (or halving) from t = 1
  int iters = 0;
  double t_mid = 1.0;
  double f_mid = f(t_mid);
  double t_hi = 2.0;
  double f_hi = f(t_hi);
  double t_lo;
  if (f_hi < f_mid) {
    t_lo = t_mid;
    while (f_hi < f_mid) {
      if (++iters > options.max_iters) {
        throw ConvergenceError(
            "oracle: objective still decreasing after doubling budget");
      }
      t_lo = t_mid;
      t_mid = t_hi;
      f_mid = f_hi;
      t_hi *= 2.0;
      f_hi = f(t_hi);
    }
  } else {
    t_lo = 0.5;
    double f_lo = f(t_lo);
    while (f_lo < f_mid) {
      ++iters;
      t_hi = t_mid;
      t_mid = t_lo;
      f_mid = f_lo;
      t_lo *= 0.5;
      if (t_lo <= options.t_floor || iters > options.max_iters) {
        // the objective keeps falling toward t = 0: boundary infimum
        return {ObjectiveProbe{options.t_floor, f(options.t_floor)}, true};
      }
      f_lo = f(t_lo);
    }
  }
  return {golden_section(f, t_lo, t_hi, options, iters), false};
}

EvarResult package(const MinimumEstimate& estimate) {
  EvarTrace trace;
  if (estimate.at_floor) {
    trace.objective_at_t_star = estimate.best.f_value;
  } else {
    trace.t_star = estimate.best.t;
    trace.objective_at_t_star = estimate.best.f_value;
  }
  return {estimate.best.f_value, trace};
}

} // namespace

double objective(const DistributionSpec& dist, ConfidenceLevel level,
                 double t) {
  if (!(t > 0.0)) {
    throw DomainError("objective: t must be > 0");
  }
  return (level.tail_weight() + log_mgf(dist, t)) / t;
}

EvarResult evar_numeric(const DistributionSpec& dist, ConfidenceLevel level,
                        const OracleOptions& options) {
  validate(options);
  const MgfDomain domain = mgf_domain(dist);
  const auto f = [&](double t) { return objective(dist, level, t); };
  return package(minimize(f, domain, options));
}

EvarResult evar_monte_carlo(const DistributionSpec& dist,
                            ConfidenceLevel level, std::size_t n,
                            std::uint64_t seed,
                            const OracleOptions& options) {
  validate(options);
  if (n < 1000) {
    throw ParameterError(
        "oracle: Monte-Carlo needs at least 1000 samples for a usable "
        "empirical MGF");
  }
  const std::vector<double> draws = sample(dist, seed, n);
  const double x_max = *std::max_element(draws.begin(), draws.end());
  const double c = level.tail_weight();
  const double log_n = std::log(static_cast<double>(n));
  // empirical objective with the exponents shifted by t * max(x); every
  // summand is then <= 1 and the sum cannot overflow at large t
  const auto f = [&](double t) {
    double sum = 0.0;
    for (const double x : draws) {
      sum += std::exp(t * (x - x_max));
    }
    const double value = (c + t * x_max + std::log(sum) - log_n) / t;
    if (!std::isfinite(value)) {
      throw DomainError("oracle: empirical objective is not finite");
    }
    return value;
  };
  return package(minimize(f, mgf_domain(dist), options));
}

} // namespace evar
