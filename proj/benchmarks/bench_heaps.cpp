#include <benchmark/benchmark.h>

#include <random>

#include "heaps/boundary.hpp"
#include "heaps/catalog.hpp"
#include "heaps/props.hpp"
#include "heaps/tl.hpp"

namespace {

std::vector<heaps::PieceId> random_word(const heaps::GraphPtr& g, std::size_t length,
                                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<heaps::PieceId> word(length);
  for (auto& letter : word)
    letter = static_cast<heaps::PieceId>(rng() % g->piece_count());
  return word;
}

void BM_HeapFromWord(benchmark::State& state) {
  auto g = heaps::build_graph("a:4");
  auto word = random_word(g, static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state)
    benchmark::DoNotOptimize(heaps::Heap::from_word_ids(g, word));
}
BENCHMARK(BM_HeapFromWord)->Arg(8)->Arg(16)->Arg(32);

void BM_KerDim(benchmark::State& state) {
  auto g = heaps::build_graph("a:4");
  auto heap = heaps::Heap::from_word_ids(g, random_word(g, static_cast<std::size_t>(state.range(0)), 7));
  auto field = heaps::Field::rationals();
  for (auto _ : state)
    benchmark::DoNotOptimize(heaps::ker_dim(heaps::build_complex(heap, field)));
}
BENCHMARK(BM_KerDim)->Arg(8)->Arg(16)->Arg(32);

void BM_ReduceRandomStrategy(benchmark::State& state) {
  auto g = heaps::build_graph("aff-a:3");
  auto heap = heaps::Heap::from_word_ids(g, random_word(g, 12, 99));
  std::mt19937_64 rng(1);
  for (auto _ : state)
    benchmark::DoNotOptimize(heaps::reduce_random(heap, rng));
}
BENCHMARK(BM_ReduceRandomStrategy);

void BM_EnumerateHeaps(benchmark::State& state) {
  auto g = heaps::build_graph("a:3");
  for (auto _ : state)
    benchmark::DoNotOptimize(
        heaps::enumerate_heaps(g, static_cast<std::size_t>(state.range(0)), false));
}
BENCHMARK(BM_EnumerateHeaps)->Arg(5)->Arg(7);

}  // namespace

BENCHMARK_MAIN();
