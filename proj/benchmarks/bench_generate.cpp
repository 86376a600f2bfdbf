// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <benchmark/benchmark.h>

#include "sscm/antenna.hpp"
#include "sscm/ensemble.hpp"
#include "sscm/generator.hpp"
#include "sscm/stats.hpp"

using namespace sscm;

static void BM_GenerateChannel(benchmark::State &state)
{
    const auto cfg = make_generation_config(ScenarioKey::NLOS_28_73, 28e9);
    std::uint64_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(realization(cfg, 42, i++));
}
BENCHMARK(BM_GenerateChannel);

static void BM_RealizationStats(benchmark::State &state)
{
    const auto cfg = make_generation_config(ScenarioKey::NLOS_73, 73e9);
    const LobeOptions lobe{-10.0, 1.0, static_cast<double>(state.range(0))};
    std::vector<OmniChannel> channels;
    for (std::uint64_t i = 0; i < 64; ++i)
        channels.push_back(realization(cfg, 42, i));
    std::size_t k = 0;
    for (auto _ : state) {
        const auto &ch = channels[k++ % channels.size()];
        benchmark::DoNotOptimize(realization_stats(ch, 0, lobe));
    }
}
BENCHMARK(BM_RealizationStats)->Arg(0)->Arg(10);

static void BM_DirectionalCir(benchmark::State &state)
{
    const auto cfg = make_generation_config(ScenarioKey::NLOS_28, 28e9);
    const OmniChannel ch = realization(cfg, 42, 1);
    const auto horn = AntennaPattern::horn(10.0, 7.0);
    for (auto _ : state) {
        const auto [tx, rx] = best_pointing(ch);
        benchmark::DoNotOptimize(directional_cir(ch, horn, horn, tx, rx));
    }
}
BENCHMARK(BM_DirectionalCir);

static void BM_Ensemble(benchmark::State &state)
{
    RunConfig c;
    c.n_realizations = static_cast<int>(state.range(0));
    c.threads = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(run_ensemble(c));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Ensemble)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
