#include <random>

#include <benchmark/benchmark.h>

#include "hyalba/alba.hpp"
#include "hyalba/axioms.hpp"
#include "hyalba/classify.hpp"
#include "hyalba/generator.hpp"
#include "hyalba/semantics.hpp"
#include "hyalba/syntax.hpp"
#include "hyalba/translate.hpp"

using namespace hyalba;

namespace {

const char* kTwoBranch = "<>p1 & p2 -> <>[]<>p1 | <>[]<>p2";

void BM_Parse(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(parse(kTwoBranch));
}
BENCHMARK(BM_Parse);

void BM_ClassifyTwoBranch(benchmark::State& state) {
  Inequality ineq = as_inequality(parse(kTwoBranch));
  for (auto _ : state) benchmark::DoNotOptimize(classify(ineq));
}
BENCHMARK(BM_ClassifyTwoBranch);

void BM_RunCorpusFormula(benchmark::State& state, const char* text) {
  Formula f = parse(text);
  for (auto _ : state) benchmark::DoNotOptimize(run(f));
}
BENCHMARK_CAPTURE(BM_RunCorpusFormula, reflexivity, "[]p -> p");
BENCHMARK_CAPTURE(BM_RunCorpusFormula, transitivity, "<><>p -> <>p");
BENCHMARK_CAPTURE(BM_RunCorpusFormula, two_branch, kTwoBranch);
BENCHMARK_CAPTURE(BM_RunCorpusFormula, binder, "<>!x.(p & <>x) -> p");

// Generation plus a full run, batch of state.range(0) formulas.
void BM_RunGenerated(benchmark::State& state) {
  for (auto _ : state) {
    std::mt19937_64 rng(1);
    for (int k = 0; k < state.range(0); ++k) benchmark::DoNotOptimize(run(random_skeletal(rng).formula));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RunGenerated)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_FrameValidAllFrames(benchmark::State& state) {
  auto frames = enumerate_frames(3);
  Formula f = parse(kTwoBranch);
  for (auto _ : state) {
    int valid = 0;
    for (const auto& fr : frames) valid += frame_valid(fr, f);
    benchmark::DoNotOptimize(valid);
  }
}
BENCHMARK(BM_FrameValidAllFrames)->Unit(benchmark::kMillisecond);

void BM_QuasiValidAllFrames(benchmark::State& state) {
  auto frames = enumerate_frames(3);
  auto pure = run(parse(kTwoBranch)).pure;
  for (auto _ : state) {
    int valid = 0;
    for (const auto& fr : frames) valid += frame_valid_quasi_set(fr, pure);
    benchmark::DoNotOptimize(valid);
  }
}
BENCHMARK(BM_QuasiValidAllFrames)->Unit(benchmark::kMillisecond);

void BM_TrEquivalenceTwoWorlds(benchmark::State& state) {
  auto pure = run(parse("<><>p -> <>p")).pure;
  for (auto _ : state) benchmark::DoNotOptimize(verify_tr_equivalence(pure, 2));
}
BENCHMARK(BM_TrEquivalenceTwoWorlds)->Unit(benchmark::kMillisecond);

void BM_SchemasTwoWorlds(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_schemas(2));
}
BENCHMARK(BM_SchemasTwoWorlds)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
