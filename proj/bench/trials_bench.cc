// Copyright 2026 The ccsurf Authors
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

#include "ccsurf/codemap.h"
#include "ccsurf/decode.h"
#include "ccsurf/simulate.h"

using namespace ccsurf;

namespace {

const ColorDecoder& decoder(int size) {
    static const ColorDecoder small(
        make_artifact(build_hexagonal_torus(3, 3), MapConventions::defaults(build_hexagonal_torus(3, 3), Color::Red)));
    static const ColorDecoder large(
        make_artifact(build_hexagonal_torus(6, 6), MapConventions::defaults(build_hexagonal_torus(6, 6), Color::Red)));
    return size == 3 ? small : large;
}

void BM_TrialsSerial(benchmark::State& state) {
    const auto& dec = decoder(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_trials_serial(dec, NoiseModel{0.05}, 2000, 1));
    }
    state.SetItemsProcessed(state.iterations() * 2000);
}

void BM_TrialsParallel(benchmark::State& state) {
    const auto& dec = decoder(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_trials(dec, NoiseModel{0.05}, 2000, 1));
    }
    state.SetItemsProcessed(state.iterations() * 2000);
}

void BM_BuildMap(benchmark::State& state) {
    const auto g = build_hexagonal_torus(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
    const auto conv = MapConventions::defaults(g, Color::Red);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_map(g, conv));
    }
}

}  // namespace

BENCHMARK(BM_TrialsSerial)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TrialsParallel)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BuildMap)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
