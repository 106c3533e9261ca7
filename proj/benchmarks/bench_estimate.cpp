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

#include <random>

#include <benchmark/benchmark.h>

#include "qlre/profile.hpp"
#include "qlre/resources.hpp"
#include "qlre/templates.hpp"

namespace {

using namespace qlre;

void BM_EstimateDefault(benchmark::State &state) {
    const ProfileInputs in;
    for (auto _ : state) benchmark::DoNotOptimize(estimate(in));
}
BENCHMARK(BM_EstimateDefault)->Unit(benchmark::kMillisecond);

void BM_EstimateAllFalseMix(benchmark::State &state) {
    ProfileInputs in;
    in.mix_true = 0;
    for (auto _ : state) benchmark::DoNotOptimize(estimate(in));
}
BENCHMARK(BM_EstimateAllFalseMix)->Unit(benchmark::kMillisecond);

ResourceVector sample(std::mt19937_64 &rng) {
    ResourceVector v;
    for (GateKind k : kAllGateKinds) v.count(k) = rng() >> 8;
    v.depth = rng() >> 8;
    v.t_depth = rng() >> 8;
    v.width = rng() % 1024;
    v.ancilla_max = rng() % 1024;
    v.ancilla_cycles = rng() >> 8;
    v.measurements = v.ancilla_cycles;
    return v;
}

void BM_Seq(benchmark::State &state) {
    std::mt19937_64 rng(1);
    const ResourceVector a = sample(rng), b = sample(rng);
    for (auto _ : state) benchmark::DoNotOptimize(seq(a, b));
}
BENCHMARK(BM_Seq);

void BM_Par(benchmark::State &state) {
    std::mt19937_64 rng(2);
    const ResourceVector a = sample(rng), b = sample(rng);
    for (auto _ : state) benchmark::DoNotOptimize(par(a, b));
}
BENCHMARK(BM_Par);

void BM_RepeatHuge(benchmark::State &state) {
    std::mt19937_64 rng(3);
    const ResourceVector a = sample(rng);
    const BigInt m("44234100000000000000");
    for (auto _ : state) benchmark::DoNotOptimize(repeat(a, m));
}
BENCHMARK(BM_RepeatHuge);

void BM_ClosedForms(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mcnot(n));
        benchmark::DoNotOptimize(qft(n));
        benchmark::DoNotOptimize(cphase(n, 1));
    }
}
BENCHMARK(BM_ClosedForms)->Arg(8)->Arg(30);

}  // namespace

BENCHMARK_MAIN();
