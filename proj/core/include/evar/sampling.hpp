// Copyright 2026 the evar authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "evar/distributions.hpp"

namespace evar {

/// Draws n independent samples of the given distribution.
///
/// The generator is std::mt19937_64 seeded with the given seed, and every
/// transform is written out explicitly (Box-Muller normals, inverse-CDF
/// exponentials and Laplace draws, Marsaglia-Tsang gamma, Poisson inversion
/// with a transformed-rejection scheme above rate 30, Michael-Schucany-Haas
/// inverse Gaussian, and the normal variance-mixture construction for the
/// normal-inverse Gaussian), so a fixed (dist, seed, n) yields the same
/// stream on every platform. Concurrent callers should use distinct seeds;
/// the function itself holds no shared state.
std::vector<double> sample(const DistributionSpec& dist, std::uint64_t seed,
                           std::size_t n);

} // namespace evar
