// Copyright 2026 the evar authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>

namespace evar {

/// Argument lies outside the mathematical domain of the requested function
/// (e.g. a Lambert W input below the branch point, an MGF argument past the
/// domain supremum, a density argument outside the support).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// The requested value exists as a limit but the evaluation formula is
/// singular at this exact point (e.g. the Lambert W derivative at 0 or at
/// the branch point).
class SingularityError : public DomainError {
public:
  using DomainError::DomainError;
};

/// The operation is not defined for this distribution (e.g. a density for a
/// discrete distribution, a closed-form quantile outside the supported set).
class UnsupportedError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A distribution or solver parameter violates its constraint.
class ParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative scheme failed to converge within its iteration budget.
class ConvergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace evar
