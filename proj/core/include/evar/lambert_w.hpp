// Copyright 2026 the evar authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace evar {

/// The two real branches of the Lambert W function, the solutions w of
/// w * exp(w) = x.
enum class LambertBranch {
  /// W0: defined on [-1/e, +inf), range [-1, +inf), strictly increasing.
  Principal,
  /// W-1: defined on [-1/e, 0), range (-inf, -1], strictly decreasing.
  MinusOne,
};

/// Evaluates the requested real branch of the Lambert W function.
///
/// Inputs within 1e-12 below -1/e are treated as the branch point itself,
/// where both branches equal -1; anything further below raises DomainError,
/// as does x >= 0 on the MinusOne branch. The residual |w*exp(w) - x| is
/// at most 1e-12 * max(1, |x|) everywhere on the admissible range.
double lambert_w(LambertBranch branch, double x);

/// First derivative of the chosen branch, W(x) / (x * (1 + W(x))).
///
/// Raises SingularityError at x = 0 and at the branch point x = -1/e where
/// the formula degenerates; DomainError outside the branch domain.
double lambert_w_derivative(LambertBranch branch, double x);

} // namespace evar
