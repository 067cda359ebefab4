#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "soficlab/arithmetic.hpp"
#include "soficlab/group_spec.hpp"
#include "soficlab/rigidity.hpp"
#include "soficlab/schreier.hpp"
#include "soficlab/sentences.hpp"
#include "soficlab/stability.hpp"

using namespace soficlab;

namespace {

Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation::from_images(std::move(img));
}

void BM_HammingDistance(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto p = random_permutation(n, rng), q = random_permutation(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(hamming_distance(p, q));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_HammingDistance)->RangeMultiplier(10)->Range(10, 100000);

void BM_Compose(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto p = random_permutation(n, rng), q = random_permutation(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(p * q);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Compose)->RangeMultiplier(10)->Range(10, 100000);

void BM_CentralizerOrderSym(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto type = cycle_type(random_permutation(static_cast<std::size_t>(state.range(0)), rng));
  for (auto _ : state) benchmark::DoNotOptimize(centralizer_order_sym(type));
}
BENCHMARK(BM_CentralizerOrderSym)->Arg(10)->Arg(100)->Arg(1000);

void BM_ConstructSym(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(construct_group(GroupSpec::sym(static_cast<std::size_t>(state.range(0)))));
}
BENCHMARK(BM_ConstructSym)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_ConjugacyClasses(benchmark::State& state) {
  for (auto _ : state) {
    state.PauseTiming();
    const auto g = construct_group(GroupSpec::sym(static_cast<std::size_t>(state.range(0))));
    state.ResumeTiming();
    benchmark::DoNotOptimize(g.classes().classes.size());
  }
}
BENCHMARK(BM_ConjugacyClasses)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_FelgnerPhi2(benchmark::State& state) {
  const auto g = construct_group(GroupSpec::alt(static_cast<std::size_t>(state.range(0))));
  const auto phi = felgner_phi2();
  for (auto _ : state) benchmark::DoNotOptimize(logic::evaluate(g, phi, logic::Strategy::ClassReduced));
}
BENCHMARK(BM_FelgnerPhi2)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_CongruenceAlt(benchmark::State& state) {
  const auto g = construct_group(GroupSpec::alt(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(satisfies_congruence(g, 1, 3));
}
BENCHMARK(BM_CongruenceAlt)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_PrimeRemark(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(holds_on_sym(n));
}
BENCHMARK(BM_PrimeRemark)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_WitnessPrime(benchmark::State& state) {
  const std::pair<std::uint64_t, int> choices[] = {{7, 1}, {11, 0}, {13, 1}, {17, 0}, {19, 1}};
  SelectorProblem problem;
  for (std::int64_t i = 0; i < state.range(0); ++i) problem.gamma.insert(choices[i]);
  for (auto _ : state) benchmark::DoNotOptimize(find_witness_prime(problem).p);
}
BENCHMARK(BM_WitnessPrime)->DenseRange(1, 5);

void BM_SpectralGap(benchmark::State& state) {
  const auto g = regular_schreier_graph(construct_group(GroupSpec::sym(static_cast<std::size_t>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(spectral_gap(g));
}
BENCHMARK(BM_SpectralGap)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_EdgeExpansion(benchmark::State& state) {
  const auto g = regular_schreier_graph(construct_group(GroupSpec::cyclic(static_cast<std::size_t>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(edge_expansion(g));
}
BENCHMARK(BM_EdgeExpansion)->DenseRange(8, 20, 4)->Unit(benchmark::kMillisecond);

void BM_ExactAutomorphisms(benchmark::State& state) {
  const auto g = regular_schreier_graph(construct_group(GroupSpec::alt(static_cast<std::size_t>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(exact_automorphisms(g).size());
}
BENCHMARK(BM_ExactAutomorphisms)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_BiregularCheck(benchmark::State& state) {
  const auto g = construct_group(GroupSpec::sym(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(biregular_check(g).ok());
}
BENCHMARK(BM_BiregularCheck)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_EnumerateHoms(benchmark::State& state) {
  const auto domain = make_domain(GroupSpec::alt(4));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_homs(domain, static_cast<std::size_t>(state.range(0))).size());
}
BENCHMARK(BM_EnumerateHoms)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
