// Copyright 2026 The qslbounds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "qsl/bounds.hpp"
#include "qsl/channels.hpp"
#include "qsl/metrics.hpp"
#include "qsl/qmat.hpp"

namespace {

using namespace qsl;

const ChannelModel kMarkov = ChannelModel::amplitude_damping(AdParams::from_ratio(0.4));
const ChannelModel kNonMarkov = ChannelModel::amplitude_damping(AdParams::from_ratio(20.0));
const ChannelModel kOhmic = ChannelModel::phase_damping(PdParams{1.0, 1.0});

void BM_Eigendecomposition(benchmark::State& state) {
  const ComplexMatrix2 m{0.7, Complex(0.1, -0.2), Complex(0.1, 0.2), 0.3};
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigendecomposition(m));
}
BENCHMARK(BM_Eigendecomposition);

void BM_Norms(benchmark::State& state) {
  const ComplexMatrix2 m{0.2, Complex(0.1, -0.4), Complex(0.1, 0.4), -0.2};
  for (auto _ : state) benchmark::DoNotOptimize(norms(m));
}
BENCHMARK(BM_Norms);

void BM_Evolve(benchmark::State& state) {
  Dynamics dyn(kMarkov);
  const DensityMatrix plus = DensityMatrix::plus();
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dyn.evolve(plus, t));
    t = t > 50.0 ? 0.0 : t + 0.01;
  }
}
BENCHMARK(BM_Evolve);

void BM_Qfi(benchmark::State& state) {
  Dynamics dyn(kMarkov);
  const DensityMatrix plus = DensityMatrix::plus();
  const DensityMatrix rho = dyn.evolve(plus, 1.3);
  const ComplexMatrix2 rho_dot = dyn.derivative(plus, 1.3);
  for (auto _ : state) benchmark::DoNotOptimize(qfi(rho, rho_dot));
}
BENCHMARK(BM_Qfi);

void BM_BuresFidelity(benchmark::State& state) {
  const DensityMatrix a = DensityMatrix::from_bloch({0.3, 0.1, 0.5});
  const DensityMatrix b = DensityMatrix::from_bloch({-0.2, 0.4, 0.1});
  for (auto _ : state) benchmark::DoNotOptimize(bures_fidelity(a, b));
}
BENCHMARK(BM_BuresFidelity);

void BM_BuresFidelitySqrtRoute(benchmark::State& state) {
  const DensityMatrix a = DensityMatrix::from_bloch({0.3, 0.1, 0.5});
  const DensityMatrix b = DensityMatrix::from_bloch({-0.2, 0.4, 0.1});
  for (auto _ : state) benchmark::DoNotOptimize(bures_fidelity_sqrt_route(a, b));
}
BENCHMARK(BM_BuresFidelitySqrtRoute);

// Sequential sweep through r(t): each call extends the knot cache.
void BM_DephasingSweep(benchmark::State& state) {
  for (auto _ : state) {
    Dynamics dyn(ChannelModel::phase_damping(PdParams{0.5, 1.0}));
    for (int i = 0; i < 1000; ++i) benchmark::DoNotOptimize(dyn.decoherence(0.1 * i));
  }
}
BENCHMARK(BM_DephasingSweep)->Unit(benchmark::kMillisecond);

void BM_CumulativeIntegral(benchmark::State& state) {
  const auto kind = static_cast<BoundKind>(state.range(0));
  const auto grid = uniform_grid(60.0, 0.01);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cumulative_speed_integral(kind, DensityMatrix::plus(), kNonMarkov, grid));
  }
  state.SetLabel(std::string(to_string(kind)));
}
BENCHMARK(BM_CumulativeIntegral)
    ->Arg(static_cast<int>(BoundKind::kAv))
    ->Arg(static_cast<int>(BoundKind::kOp))
    ->Arg(static_cast<int>(BoundKind::kQuant))
    ->Unit(benchmark::kMillisecond);

void BM_FindTauCri(benchmark::State& state) {
  ResolutionConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(find_tau_cri(DensityMatrix::plus(), kMarkov, cfg));
}
BENCHMARK(BM_FindTauCri)->Unit(benchmark::kMillisecond);

void BM_ModifiedSeriesPhaseDamping(benchmark::State& state) {
  ResolutionConfig cfg;
  cfg.t_max = 1e6;
  cfg.dt = 100.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qsl_series(BoundKind::kOp, DensityMatrix::plus(), kOhmic, cfg, true));
  }
}
BENCHMARK(BM_ModifiedSeriesPhaseDamping)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
