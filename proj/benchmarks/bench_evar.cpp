// Copyright 2026 the evar authors
// SPDX-License-Identifier: Apache-2.0
//
// Throughput benchmarks: the Lambert W kernel on both branches, each
// closed-form EVaR, and the numerical minimizer it replaces.

#include <cmath>
#include <vector>

#include <benchmark/benchmark.h>

#include "evar/evar_analytic.hpp"
#include "evar/lambert_w.hpp"
#include "evar/numeric_oracle.hpp"

namespace {

using namespace evar;

constexpr double kInvE = 0.36787944117144232159552377016146086745;

std::vector<double> principal_inputs() {
  std::vector<double> xs;
  for (int i = 0; i < 256; ++i) {
    xs.push_back(-kInvE + std::exp(-20.0 + 30.0 * i / 255.0));
  }
  return xs;
}

std::vector<double> minus_one_inputs() {
  std::vector<double> xs;
  for (int i = 0; i < 256; ++i) {
    xs.push_back(-kInvE + (kInvE - 1e-9) * i / 255.0);
  }
  return xs;
}

void BM_lambert_w_principal(benchmark::State& state) {
  const std::vector<double> xs = principal_inputs();
  for (auto _ : state) {
    for (const double x : xs) {
      benchmark::DoNotOptimize(lambert_w(LambertBranch::Principal, x));
    }
  }
  state.SetItemsProcessed(state.iterations() * xs.size());
}
BENCHMARK(BM_lambert_w_principal);

void BM_lambert_w_minus_one(benchmark::State& state) {
  const std::vector<double> xs = minus_one_inputs();
  for (auto _ : state) {
    for (const double x : xs) {
      benchmark::DoNotOptimize(lambert_w(LambertBranch::MinusOne, x));
    }
  }
  state.SetItemsProcessed(state.iterations() * xs.size());
}
BENCHMARK(BM_lambert_w_minus_one);

template <typename F>
void run_closed_form(benchmark::State& state, F&& f) {
  const ConfidenceLevel level(0.95);
  for (auto _ : state) {
    benchmark::DoNotOptimize(f(level).value);
  }
}

void BM_evar_normal(benchmark::State& state) {
  run_closed_form(state,
                  [](ConfidenceLevel l) { return evar_normal(0.0, 1.0, l); });
}
BENCHMARK(BM_evar_normal);

void BM_evar_poisson(benchmark::State& state) {
  run_closed_form(state,
                  [](ConfidenceLevel l) { return evar_poisson(1.0, l); });
}
BENCHMARK(BM_evar_poisson);

void BM_evar_compound_poisson_normal(benchmark::State& state) {
  run_closed_form(state, [](ConfidenceLevel l) {
    return evar_compound_poisson_normal(1.0, 1.0, l);
  });
}
BENCHMARK(BM_evar_compound_poisson_normal);

void BM_evar_gamma(benchmark::State& state) {
  run_closed_form(state,
                  [](ConfidenceLevel l) { return evar_gamma(2.0, 1.0, l); });
}
BENCHMARK(BM_evar_gamma);

void BM_evar_laplace(benchmark::State& state) {
  run_closed_form(state,
                  [](ConfidenceLevel l) { return evar_laplace(0.0, 1.0, l); });
}
BENCHMARK(BM_evar_laplace);

void BM_evar_inverse_gaussian(benchmark::State& state) {
  run_closed_form(state, [](ConfidenceLevel l) {
    return evar_inverse_gaussian(1.0, 2.0, l);
  });
}
BENCHMARK(BM_evar_inverse_gaussian);

void BM_evar_nig(benchmark::State& state) {
  run_closed_form(state, [](ConfidenceLevel l) {
    return evar_nig(2.0, -1.0, 0.0, 1.0, l);
  });
}
BENCHMARK(BM_evar_nig);

void BM_numeric_minimizer_gamma(benchmark::State& state) {
  const DistributionSpec dist = Gamma(2.0, 1.0);
  const ConfidenceLevel level(0.95);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evar_numeric(dist, level).value);
  }
}
BENCHMARK(BM_numeric_minimizer_gamma);

void BM_numeric_minimizer_normal(benchmark::State& state) {
  const DistributionSpec dist = Normal(0.0, 1.0);
  const ConfidenceLevel level(0.95);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evar_numeric(dist, level).value);
  }
}
BENCHMARK(BM_numeric_minimizer_normal);

} // namespace

BENCHMARK_MAIN();
