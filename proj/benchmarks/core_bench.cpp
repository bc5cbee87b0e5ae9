#include <benchmark/benchmark.h>

#include <vector>

#include "freecomm/commensurator.hpp"
#include "freecomm/lattice.hpp"
#include "freecomm/scenarios.hpp"

using namespace freecomm;

namespace {

Subgroup kernel(std::int64_t wx, std::int64_t wy, std::int64_t p) {
  std::vector<std::int64_t> const w{wx, wy};
  return kernel_mod_p(2, w, p);
}

// The listed generating set of the x -> 1 kernel, folded from scratch.
void BM_FoldKernelGenerators(benchmark::State& state) {
  auto const p = state.range(0);
  auto const x = Word::generator(1);
  std::vector<Word> gens{power(x, p)};
  for (std::int64_t j = 0; j < p; ++j) {
    gens.push_back(conjugate(Word::generator(2), power(x, j)));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(Subgroup::from_generators(2, gens));
  }
}
BENCHMARK(BM_FoldKernelGenerators)->RangeMultiplier(4)->Range(4, 256);

void BM_Intersect(benchmark::State& state) {
  auto const p = state.range(0);
  auto const a = kernel(1, 0, p);
  auto const b = kernel(0, 1, p + 1);
  for (auto _ : state) benchmark::DoNotOptimize(intersect(a, b));
}
BENCHMARK(BM_Intersect)->DenseRange(3, 31, 7);

void BM_Subindex(benchmark::State& state) {
  auto const h = kernel(1, 0, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(subindex(h));
}
BENCHMARK(BM_Subindex)->Arg(8)->Arg(12)->Arg(16)->Arg(24);

PartialIso swap_iso(std::int64_t p) {
  auto const h = kernel(1, 0, p);
  auto images = h.basis();
  std::iter_swap(std::find(images.begin(), images.end(),
                           power(Word::generator(1), p)),
                 std::find(images.begin(), images.end(), Word::generator(2)));
  return make_iso(h, h, images);
}

void BM_Equivalent(benchmark::State& state) {
  auto const s = swap_iso(state.range(0));
  auto const r = restrict(s, intersect(s.domain(), kernel(0, 1, 2)));
  for (auto _ : state) benchmark::DoNotOptimize(equivalent(s, r));
}
BENCHMARK(BM_Equivalent)->Arg(3)->Arg(7)->Arg(13);

void BM_EquivalentBruteforce(benchmark::State& state) {
  auto const s = swap_iso(3);
  auto const id = identity_iso(s.domain());
  for (auto _ : state) {
    benchmark::DoNotOptimize(equivalent_bruteforce(s, id, state.range(0)));
  }
}
BENCHMARK(BM_EquivalentBruteforce)->Arg(12)->Arg(24)->Arg(36);

void BM_Compose(benchmark::State& state) {
  auto const s = swap_iso(state.range(0));
  auto const g = embed_aut(2, {parse_word("ab"), parse_word("b")});
  for (auto _ : state) benchmark::DoNotOptimize(compose(g, s));
}
BENCHMARK(BM_Compose)->Arg(3)->Arg(7)->Arg(13);

void BM_KernelSwapScenario(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernel_swap(3, state.range(0)));
}
BENCHMARK(BM_KernelSwapScenario)->Arg(5)->Arg(11);

}  // namespace

BENCHMARK_MAIN();
