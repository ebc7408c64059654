#include <benchmark/benchmark.h>

#include "repairkit/metrics.hpp"
#include "support/fixtures.hpp"
#include "support/genprog.hpp"

using namespace repairkit;

namespace {

std::string large_function() {
  testing::GenOptions opt;
  opt.min_statements = 80;
  opt.max_statements = 80;
  testing::ProgramGenerator gen(424242);
  return gen.function(opt);
}

void BM_Tokenize(benchmark::State& state) {
  std::string fn = large_function();
  for (auto _ : state) benchmark::DoNotOptimize(tokenize(fn));
  state.SetBytesProcessed(state.iterations() * fn.size());
}
BENCHMARK(BM_Tokenize);

void BM_Parse(benchmark::State& state) {
  std::string fn = large_function();
  for (auto _ : state) benchmark::DoNotOptimize(parse_text(fn));
}
BENCHMARK(BM_Parse);

void BM_ExtractDfg(benchmark::State& state) {
  ParseOutcome outcome = parse_text(large_function());
  for (auto _ : state) benchmark::DoNotOptimize(extract_dfg(*outcome.tree));
}
BENCHMARK(BM_ExtractDfg);

void BM_Bleu(benchmark::State& state) {
  MetricConfig cfg;
  auto cand = tokenize(large_function());
  testing::ProgramGenerator gen(5);
  testing::GenOptions opt;
  opt.min_statements = 80;
  opt.max_statements = 80;
  auto ref = tokenize(gen.function(opt));
  for (auto _ : state) benchmark::DoNotOptimize(bleu(cand, ref, cfg));
}
BENCHMARK(BM_Bleu);

void BM_ScorePair_Small(benchmark::State& state) {
  MetricConfig cfg;
  auto functions = testing::realistic_functions();
  const std::string& cand = functions[0];
  const std::string& oracle = functions[1];
  for (auto _ : state)
    benchmark::DoNotOptimize(score_pair(cand, oracle, cfg));
}
BENCHMARK(BM_ScorePair_Small);

void BM_ScorePair_Large(benchmark::State& state) {
  MetricConfig cfg;
  testing::ProgramGenerator gen(7);
  testing::GenOptions opt;
  opt.min_statements = 80;
  opt.max_statements = 80;
  std::string cand = gen.function(opt);
  std::string oracle = gen.function(opt);
  for (auto _ : state)
    benchmark::DoNotOptimize(score_pair(cand, oracle, cfg));
}
BENCHMARK(BM_ScorePair_Large);

}  // namespace

BENCHMARK_MAIN();
