/*
 * Copyright (c) 2026, the lomac authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "lomac/baselines.hpp"
#include "lomac/methods.hpp"
#include "lomac/rank1.hpp"
#include "lomac/rankr.hpp"
#include "lomac/simgen.hpp"

namespace {

using namespace lomac;

SimDraw make_draw(Index n, int rank) {
    SimConfig cfg;
    cfg.rows = n;
    cfg.cols = n;
    cfg.rank = rank;
    cfg.observe_prob = 0.5;
    cfg.noise_level = 0.05;
    cfg.seed = 42;
    return draw(cfg);
}

void bm_faccro(benchmark::State& state) {
    const SimDraw s = make_draw(state.range(0), 1);
    for (auto _ : state) benchmark::DoNotOptimize(faccro_all(s.observed).values);
}
BENCHMARK(bm_faccro)->Arg(50)->Arg(100)->Arg(200);

void bm_vmclosure(benchmark::State& state) {
    const SimDraw s = make_draw(state.range(0), 2);
    ClosureConfig cfg;
    cfg.target_rank = 2;
    for (auto _ : state) benchmark::DoNotOptimize(vmclosure_all(s.observed, cfg).values);
}
BENCHMARK(bm_vmclosure)->Arg(30)->Arg(60);

void bm_smcb_faccro(benchmark::State& state) {
    const SimDraw s = make_draw(state.range(0), 2);
    MethodContext ctx;
    ctx.rank = 2;
    for (auto _ : state)
        benchmark::DoNotOptimize(run_method("smcb(faccro)", s.observed, ctx));
}
BENCHMARK(bm_smcb_faccro)->Arg(50)->Arg(100)->Arg(200);

void bm_mos_smcb_faccro(benchmark::State& state) {
    const SimDraw s = make_draw(state.range(0), 2);
    MethodContext ctx;
    ctx.rank = 2;
    for (auto _ : state)
        benchmark::DoNotOptimize(run_method("mos(smcb(faccro))", s.observed, ctx));
}
BENCHMARK(bm_mos_smcb_faccro)->Arg(50)->Arg(100);

void bm_svt(benchmark::State& state) {
    const SimDraw s = make_draw(state.range(0), 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(svt_complete(s.observed, SvtConfig{}, 1));
}
BENCHMARK(bm_svt)->Arg(50)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
