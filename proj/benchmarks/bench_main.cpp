#include <benchmark/benchmark.h>

#include "wordseq/wordseq.hpp"

namespace {

using namespace wordseq;

void BM_ArshonPrefix(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(arshon_prefix(n));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ArshonPrefix)->Range(1 << 10, 1 << 20);

void BM_FindSquareSquareFree(benchmark::State& state) {
  const Word w = arshon_prefix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_square(w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FindSquareSquareFree)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Complexity();

void BM_SigmaPrefix(benchmark::State& state) {
  const auto method = static_cast<SigmaMethod>(state.range(1));
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sigma_prefix(n, method));
}
BENCHMARK(BM_SigmaPrefix)
    ->ArgsProduct({{1 << 16, 1 << 20},
                   {static_cast<int>(SigmaMethod::twoadic), static_cast<int>(SigmaMethod::recursive),
                    static_cast<int>(SigmaMethod::fold)}});

void BM_FixedPointF4(benchmark::State& state) {
  const Morphism f4 = arshon_even_morphism(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fixed_point_prefix(f4, 1, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_FixedPointF4)->Range(1 << 10, 1 << 18);

void BM_ArshonSearch(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(search_arshon_morphisms(static_cast<std::size_t>(state.range(0)),
                                                     kDefaultArshonCheckLen, {1}));
  }
}
BENCHMARK(BM_ArshonSearch)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_SigmaSearch(benchmark::State& state) {
  const auto bound = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(search_sigma_morphisms(bound, bound, kDefaultSigmaCheckLen, {1}));
  }
}
BENCHMARK(BM_SigmaSearch)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_DragonSvg(benchmark::State& state) {
  const auto path = turns_to_path(fold_sequence(static_cast<unsigned>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(render_svg(path));
}
BENCHMARK(BM_DragonSvg)->Arg(10)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
