// Copyright 2026 The qlre Authors
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

#include "qlre/reversibilizer.hpp"
#include "qlre/verifier.hpp"

namespace {

using namespace qlre;

void BM_ExpandCensusMcnot(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(census(expand("mcnot", {n})));
}
BENCHMARK(BM_ExpandCensusMcnot)->Arg(4)->Arg(12);

void BM_ExpandCensusQft(benchmark::State &state) {
    const int b = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(census(expand("qft", {b})));
}
BENCHMARK(BM_ExpandCensusQft)->Arg(6)->Arg(12);

void BM_SimulateQft(benchmark::State &state) {
    const ExplicitCircuit c = expand("qft", {static_cast<int>(state.range(0))});
    for (auto _ : state) benchmark::DoNotOptimize(simulate(c));
}
BENCHMARK(BM_SimulateQft)->Arg(2)->Arg(4)->Unit(benchmark::kMicrosecond);

void BM_CompileAdder(benchmark::State &state) {
    const BoolCircuit c = ripple_adder(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(make_uf(compile_tf(c)));
}
BENCHMARK(BM_CompileAdder)->Arg(8)->Arg(64);

void BM_CheckAdder(benchmark::State &state) {
    const BoolCircuit c = ripple_adder(static_cast<int>(state.range(0)));
    const ReversibleCircuit uf = make_uf(compile_tf(c));
    for (auto _ : state) benchmark::DoNotOptimize(check_uf(c, uf));
}
BENCHMARK(BM_CheckAdder)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace
