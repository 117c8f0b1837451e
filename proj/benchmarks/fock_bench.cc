// Copyright 2026 The nongauss Authors
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

#include "nongauss/measures.h"

using namespace nongauss;

static void BM_beam_splitter_two_copies(benchmark::State &state) {
    const int cutoff = int(state.range(0));
    PureState psi = make_coherent(Complex(1.0, 0.5), cutoff);
    // Fill the cached beam-splitter blocks outside the timed loop.
    beam_splitter_output(psi);
    for (auto _ : state) {
        benchmark::DoNotOptimize(beam_splitter_output(psi));
    }
}
BENCHMARK(BM_beam_splitter_two_copies)->Arg(20)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);

static void BM_n_renyi2_fock(benchmark::State &state) {
    PureState psi = make_fock(int(state.range(0)), 60);
    for (auto _ : state) {
        benchmark::DoNotOptimize(n_renyi(psi, 2.0));
    }
}
BENCHMARK(BM_n_renyi2_fock)->Arg(1)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_fock_coefficients(benchmark::State &state) {
    const int n = int(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fock_bs_coefficients(n));
    }
}
BENCHMARK(BM_fock_coefficients)->Arg(10)->Arg(40);

static void BM_quartic_char_integral(benchmark::State &state) {
    PureState psi = make_fock(2, 20);
    for (auto _ : state) {
        benchmark::DoNotOptimize(n_renyi2_via_char_integral(psi));
    }
}
BENCHMARK(BM_quartic_char_integral)->Unit(benchmark::kMillisecond);

static void BM_loss_then_mutual_information(benchmark::State &state) {
    PureState psi = make_fock(2, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(monotonicity_probe(psi, {0.5}, ProbeMeasure::kMutualInformation));
    }
}
BENCHMARK(BM_loss_then_mutual_information)->Unit(benchmark::kMicrosecond);
