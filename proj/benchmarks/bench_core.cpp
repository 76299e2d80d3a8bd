// Copyright 2026 The qmur Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <numbers>
#include <vector>

#include <benchmark/benchmark.h>

#include "qmur/compat.hpp"
#include "qmur/experiments.hpp"
#include "qmur/montecarlo.hpp"
#include "qmur/noiseop.hpp"
#include "qmur/random.hpp"
#include "qmur/tradeoff.hpp"
#include "qmur/transport.hpp"

namespace {

using namespace qmur;

void BM_DeltaSqState(benchmark::State& state) {
  Rng rng(1);
  const BinaryObservable e = random_bias(rng, random_in_ball(rng));
  const BinaryObservable f = random_bias(rng, random_in_ball(rng));
  const QubitState rho = random_state(rng);
  for (auto _ : state) benchmark::DoNotOptimize(delta_sq_state(e, f, rho));
}
BENCHMARK(BM_DeltaSqState);

void BM_JointObservable(benchmark::State& state) {
  Rng rng(2);
  const auto [c, d] = random_compatible_pair(rng);
  for (auto _ : state) benchmark::DoNotOptimize(joint_observable(c, d));
}
BENCHMARK(BM_JointObservable);

void BM_OptimalPair(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(optimal_pair(axes::i, BlochVector{0.6, 0.8, 0.0}));
}
BENCHMARK(BM_OptimalPair);

void BM_EpsNoMatrix(benchmark::State& state) {
  const BinaryObservable c = BinaryObservable::unbiased({0.5, 0.1, 0.2});
  const BinaryObservable a = BinaryObservable::sharp(axes::i);
  const QubitState rho(axes::k);
  for (auto _ : state) benchmark::DoNotOptimize(eps_no_sq(c, a, rho));
}
BENCHMARK(BM_EpsNoMatrix);

void BM_TorontoSimulate(benchmark::State& state) {
  const TorontoConfig cfg{std::numbers::pi / 4, 0.3};
  for (auto _ : state) benchmark::DoNotOptimize(toronto_simulate(cfg));
}
BENCHMARK(BM_TorontoSimulate);

void BM_SampleBinary(benchmark::State& state) {
  const BinaryObservable e = BinaryObservable::unbiased({0.3, 0.2, 0.1});
  const QubitState rho(axes::k);
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample(e, rho, n, 7));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleBinary)->Arg(1000)->Arg(1000000);

void BM_ErrorAnalysis(benchmark::State& state) {
  const ViennaConfig cfg = ViennaConfig::canonical(std::numbers::pi / 4);
  const SchemeResult r = vienna_model(cfg);
  const std::vector<QubitState> states{cfg.rho};
  const BinaryObservable target = BinaryObservable::sharp(cfg.a);
  for (auto _ : state) {
    benchmark::DoNotOptimize(empirical_error_analysis(r.approx_A, target, states, 100000, 3));
  }
}
BENCHMARK(BM_ErrorAnalysis);

}  // namespace

BENCHMARK_MAIN();
