#include <benchmark/benchmark.h>

#include <string>

#include "spantree/bijection.hpp"
#include "spantree/counting.hpp"
#include "spantree/rng.hpp"
#include "spantree/threshold.hpp"

namespace {

using namespace spantree;

CreationSequence connected_sequence(std::size_t n) {
  Rng rng(n);
  std::string chars = "*";
  for (std::size_t i = 1; i + 1 < n; ++i) chars += rng.bernoulli(0.5) ? '1' : '0';
  if (n >= 2) chars += '1';
  return CreationSequence::parse(chars);
}

void BM_BuildThreshold(benchmark::State& state) {
  const CreationSequence seq = connected_sequence(state.range(0));
  for (auto _ : state) {
    ThresholdGraph t = build_threshold(seq);
    benchmark::DoNotOptimize(t);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildThreshold)->Range(64, 1024)->Complexity();

void BM_TauFormula(benchmark::State& state) {
  const ThresholdGraph t = build_threshold(connected_sequence(state.range(0)));
  for (auto _ : state) {
    TreeCount tau = tau_threshold_formula(t);
    benchmark::DoNotOptimize(tau);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TauFormula)->Range(64, 1024)->Complexity();

void BM_TauKirchhoff(benchmark::State& state) {
  const ThresholdGraph t = build_threshold(connected_sequence(state.range(0)));
  for (auto _ : state) {
    TreeCount tau = tau_kirchhoff(t.graph());
    benchmark::DoNotOptimize(tau);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TauKirchhoff)->Range(16, 128)->Complexity();

void BM_Recognize(benchmark::State& state) {
  const ThresholdGraph t = build_threshold(connected_sequence(state.range(0)));
  for (auto _ : state) {
    auto result = recognize_threshold(t.graph());
    benchmark::DoNotOptimize(result);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Recognize)->Range(64, 512)->Complexity();

void BM_SampleSpanningTree(benchmark::State& state) {
  const ThresholdGraph t = build_threshold(connected_sequence(state.range(0)));
  Rng rng(7);
  for (auto _ : state) {
    auto tree = sample_spanning_tree(t, rng);
    benchmark::DoNotOptimize(tree);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SampleSpanningTree)->Range(64, 1024)->Complexity();

void BM_EnumerateSpanningTrees(benchmark::State& state) {
  const ThresholdGraph t = build_threshold(CreationSequence::parse("*111111"));  // K_7
  for (auto _ : state) {
    auto listing = enumerate_spanning_trees(t.graph(), 1u << 20);
    benchmark::DoNotOptimize(listing);
  }
}
BENCHMARK(BM_EnumerateSpanningTrees);

}  // namespace

BENCHMARK_MAIN();
