// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The onebit-mimo authors
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

// Serial reference vs OpenMP trial loop of the Monte-Carlo engine.

#include <benchmark/benchmark.h>

#include "onebit/mc_engine.hpp"
#include "onebit/scenario.hpp"

#include <omp.h>

using namespace onebit;

namespace
{
const Scenario &bench_scenario()
{
    static const Scenario s = [] {
        NetworkConfig c;
        c.M = 64;
        return build_scenario(c);
    }();
    return s;
}

void run(benchmark::State &state, Execution execution, DacModel dac, PrecoderKind precoder)
{
    McOptions o;
    o.trials = static_cast<int>(state.range(0));
    o.execution = execution;
    o.dac_model = dac;
    const RegimeKey key{Architecture::OneBit, precoder, PilotScheme::Reuse};
    for (auto _ : state)
        benchmark::DoNotOptimize(mc_sqinr(bench_scenario(), key, o).sum_rate);
    state.SetItemsProcessed(state.iterations() * state.range(0));
    state.counters["threads"] = execution == Execution::Serial ? 1 : omp_get_max_threads();
}

void BM_MrtSerial(benchmark::State &s) { run(s, Execution::Serial, DacModel::Linearized, PrecoderKind::MRT); }
void BM_MrtParallel(benchmark::State &s) { run(s, Execution::Parallel, DacModel::Linearized, PrecoderKind::MRT); }
void BM_ZfSerial(benchmark::State &s) { run(s, Execution::Serial, DacModel::Linearized, PrecoderKind::ZF); }
void BM_ZfParallel(benchmark::State &s) { run(s, Execution::Parallel, DacModel::Linearized, PrecoderKind::ZF); }
void BM_ZfExactSerial(benchmark::State &s) { run(s, Execution::Serial, DacModel::Exact, PrecoderKind::ZF); }
void BM_ZfExactParallel(benchmark::State &s) { run(s, Execution::Parallel, DacModel::Exact, PrecoderKind::ZF); }
} // namespace

BENCHMARK(BM_MrtSerial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MrtParallel)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ZfSerial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ZfParallel)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ZfExactSerial)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ZfExactParallel)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
