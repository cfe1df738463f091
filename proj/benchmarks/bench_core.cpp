#include <benchmark/benchmark.h>

#include "easyq/category.hpp"
#include "easyq/enumerate.hpp"
#include "easyq/oracle/monte_carlo.hpp"
#include "easyq/temperley_lieb.hpp"
#include "easyq/tensor_map.hpp"
#include "easyq/weingarten.hpp"

using namespace easyq;

static void enumerate_partitions(benchmark::State& state) {
  auto const word = white_word(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate({}, word).size());
}
BENCHMARK(enumerate_partitions)->DenseRange(4, 8, 2);

static void pairing_closure(benchmark::State& state) {
  auto const bound = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(closure({crossing(Color::white, Color::white)}, bound, Regime::uncolored)->size());
}
BENCHMARK(pairing_closure)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void weingarten_matrix(benchmark::State& state) {
  auto const cat = CategorySpec::named(CategoryId::P);
  auto const word = white_word(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(weingarten(gram(cat, word, 8)).matrix.rows());
}
BENCHMARK(weingarten_matrix)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void haar_moment_cached(benchmark::State& state) {
  HaarIntegrator integrator({GroupId::O, false}, 5);
  auto const m = parse_monomial("u[1,1] u[1,2] u[2,1] u[2,2]");
  integrator.moment(m);
  for (auto _ : state) benchmark::DoNotOptimize(integrator.moment(m));
}
BENCHMARK(haar_moment_cached);

static void partition_map(benchmark::State& state) {
  auto const p = Partition::parse("ooo|ooo {u1,d2}{u2,d1}{u3,d3}");
  for (auto _ : state) benchmark::DoNotOptimize(int_t_map(p, state.range(0), false).entries.size());
}
BENCHMARK(partition_map)->Arg(3)->Arg(6);

static void diagram_product(benchmark::State& state) {
  auto const k = static_cast<std::size_t>(state.range(0));
  Rational const delta = 3;
  TLElement x(k, delta);
  for (auto const& d : tl_basis(k)) x.add(d, 1);
  for (auto _ : state) benchmark::DoNotOptimize((x * x).terms().size());
}
BENCHMARK(diagram_product)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void haar_unitary_sample(benchmark::State& state) {
  auto rng = oracle::block_stream(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::haar_unitary(state.range(0), rng)(0, 0));
}
BENCHMARK(haar_unitary_sample)->Arg(3)->Arg(5);

BENCHMARK_MAIN();
