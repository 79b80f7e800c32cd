// Copyright 2026 The sumqg Authors.
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

// Serial reference vs OpenMP corpus drivers.

#include <benchmark/benchmark.h>

#include <vector>

#include "sumqg/config.h"
#include "sumqg/qg_engine.h"
#include "sumqg/stats_lint.h"
#include "testing/fixtures.h"

namespace sumqg {
namespace {

const std::vector<AnnotatedSentence>& Corpus() {
  static const auto* corpus = new std::vector<AnnotatedSentence>(testing::RandomCorpus(20000, 7));
  return *corpus;
}

void BM_GenerateSerial(benchmark::State& state) {
  const auto cfg = LadderPreset("full");
  for (auto _ : state) benchmark::DoNotOptimize(GenerateCorpusSerial(Corpus(), cfg));
  state.SetItemsProcessed(state.iterations() * Corpus().size());
}
BENCHMARK(BM_GenerateSerial)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_GenerateParallel(benchmark::State& state) {
  const auto cfg = LadderPreset("full");
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(GenerateCorpus(Corpus(), cfg, workers));
  state.SetItemsProcessed(state.iterations() * Corpus().size());
}
BENCHMARK(BM_GenerateParallel)
    ->Arg(1)
    ->Arg(2)
    ->Arg(4)
    ->Arg(8)
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_Stats(benchmark::State& state) {
  const auto cfg = LadderPreset("full");
  std::vector<LintInput> inputs;
  const auto results = GenerateCorpusSerial(Corpus(), cfg);
  for (size_t i = 0; i < results.size(); ++i) {
    for (const auto& e : results[i]) {
      inputs.push_back({Corpus()[i].sentence_id, e.question.Text(), e.answer_text,
                        Corpus()[i].Text(), std::nullopt});
    }
  }
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ComputeStats(inputs, workers));
  state.SetItemsProcessed(state.iterations() * inputs.size());
}
BENCHMARK(BM_Stats)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
}  // namespace sumqg

BENCHMARK_MAIN();
