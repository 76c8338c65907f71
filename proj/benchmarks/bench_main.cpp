#include "reebsurg/chain_report.hpp"

#include <benchmark/benchmark.h>

using namespace reebsurg;

namespace {

const char* kTrefoil = "L1,L3,X2,X2,X2,R1,R1 / surgery {0:+1}";

ResolvedDiagram trefoil() { return resolve(parse_front(kTrefoil)); }

void BM_Resolve(benchmark::State& state) {
  auto front = parse_front(kTrefoil);
  for (auto _ : state) benchmark::DoNotOptimize(resolve(front));
}
BENCHMARK(BM_Resolve);

void BM_EnumerateWords(benchmark::State& state) {
  auto d = trefoil();
  WordBounds b{static_cast<int>(state.range(0)), std::nullopt};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_orbit_words(d, b));
}
BENCHMARK(BM_EnumerateWords)->Arg(2)->Arg(4)->Arg(6);

void BM_ReturnMap(benchmark::State& state) {
  auto d = trefoil();
  auto words = enumerate_orbit_words(d, {static_cast<int>(state.range(0)), std::nullopt});
  for (auto _ : state)
    for (const auto& w : words) benchmark::DoNotOptimize(return_map(d, w));
}
BENCHMARK(BM_ReturnMap)->Arg(2)->Arg(3);

void BM_EmbedOrbit(benchmark::State& state) {
  auto d = trefoil();
  auto words = enumerate_orbit_words(d, {2, std::nullopt});
  Q eps(1, 100);
  for (auto _ : state)
    for (const auto& w : words) benchmark::DoNotOptimize(embed_orbit(d, w, eps));
}
BENCHMARK(BM_EmbedOrbit);

void BM_SmithNormalForm(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  IntMatrix m(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = ((i * 7 + j * 13) % 11) - 5 + (i == j ? 3 : 0);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16);

void BM_DifferentialR4(benchmark::State& state) {
  auto d = trefoil();
  auto h = h1_presentation(d);
  auto t = generators(d, h, {2, std::nullopt});
  auto w = canonical_cyclic(d, Word{{3}});
  int src = 0;
  while (!(t.good[src].word == w)) ++src;
  for (auto _ : state) benchmark::DoNotOptimize(differential_candidates(d, h, t, src, Q(1, 100)));
}
BENCHMARK(BM_DifferentialR4)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
