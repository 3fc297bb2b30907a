// Copyright 2026 The ckasim Authors
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

#include <benchmark/benchmark.h>

#include "ckasim/keyrate.h"
#include "ckasim/lp.h"
#include "ckasim/protocol.h"
#include "ckasim/states.h"
#include "ckasim/witness.h"

namespace {

using namespace ckasim;

void BM_Eigensystem(benchmark::State &state) {
    const int qubits = static_cast<int>(state.range(0));
    Rng rng(1);
    PureState psi = random_pure_state(qubits + 1, rng);
    std::vector<int> keep;
    for (int q = 0; q < qubits; q++) {
        keep.push_back(q);
    }
    DensityMatrix rho = partial_trace(psi, keep);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eigensystem(rho));
    }
}
BENCHMARK(BM_Eigensystem)->DenseRange(2, 6)->Unit(benchmark::kMicrosecond);

void BM_RateEntropyNumeric(benchmark::State &state) {
    GhzMixtureSpec spec = GhzMixtureSpec::uniform(static_cast<int>(state.range(0)), 3, 0.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rate_entropy_numeric(spec));
    }
}
BENCHMARK(BM_RateEntropyNumeric)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_RateClosedForm(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(rate_nbb84(13, 12, 0.05));
    }
}
BENCHMARK(BM_RateClosedForm);

void BM_SampleRound(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    GhzMixtureSpec spec = GhzMixtureSpec::uniform(n, n - 1, 0.05);
    std::vector<Basis> bases(static_cast<std::size_t>(n), Basis::Z);
    Rng rng(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_round(spec, bases, rng));
    }
}
BENCHMARK(BM_SampleRound)->Arg(3)->Arg(6)->Arg(13);

void BM_RunProtocol(benchmark::State &state) {
    ProtocolConfig cfg;
    cfg.spec = GhzMixtureSpec::uniform(6, 5, 0.05);
    cfg.rounds = 1000000;
    cfg.threads = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_protocol(cfg));
    }
}
BENCHMARK(BM_RunProtocol)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_DenseSimplex(benchmark::State &state) {
    const std::size_t m = static_cast<std::size_t>(state.range(0));
    Rng rng(5);
    std::vector<std::vector<double>> cols;
    std::vector<double> costs;
    for (std::size_t j = 0; j < 3 * m; j++) {
        std::vector<double> c(m);
        for (double &v : c) {
            v = 0.1 + rng.uniform();
        }
        cols.push_back(c);
        costs.push_back(rng.normal());
    }
    // b = A x0 with x0 >= 0 keeps the instance feasible.
    std::vector<double> b(m, 0.0);
    for (const auto &col : cols) {
        const double x0 = rng.uniform();
        for (std::size_t i = 0; i < m; i++) {
            b[i] += x0 * col[i];
        }
    }
    for (auto _ : state) {
        DenseSimplex lp(b);
        for (std::size_t j = 0; j < cols.size(); j++) {
            lp.add_column(cols[j], costs[j]);
        }
        benchmark::DoNotOptimize(lp.solve());
    }
}
BENCHMARK(BM_DenseSimplex)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_FindWitnessGhz2(benchmark::State &state) {
    MeasurementSet meas = MeasurementSet::nbb84(2);
    ProbabilityTable target = statistics_of(PureState::ghz(2), meas);
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_witness(target, Partition(2, {0}), meas));
    }
}
BENCHMARK(BM_FindWitnessGhz2)->Unit(benchmark::kMillisecond);

void BM_FindWitnessFamily(benchmark::State &state) {
    MeasurementSet meas = MeasurementSet::nbb84(3);
    ProbabilityTable target = statistics_of(build_ghz_mixture(GhzMixtureSpec::uniform(3, 2)), meas);
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_witness(target, Partition::parse("A|B1B2", 3), meas));
    }
}
BENCHMARK(BM_FindWitnessFamily)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
