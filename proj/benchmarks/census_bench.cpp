#include <benchmark/benchmark.h>

#include "latkit/constructions.hpp"
#include "latkit/embedding.hpp"

namespace {

void bm_powerset_convex_census(benchmark::State& state) {
  const auto x = static_cast<std::size_t>(state.range(0));
  const auto y = static_cast<std::size_t>(state.range(1));
  latkit::CensusOptions opt;
  opt.filters.convex_range = true;
  opt.threads = 1;
  const latkit::QuasiOrder P = latkit::powerset(x), Q = latkit::powerset(y);
  for (auto _ : state) benchmark::DoNotOptimize(latkit::enumerate_embeddings(P, Q, opt).maps.size());
}
BENCHMARK(bm_powerset_convex_census)->Args({2, 3})->Args({3, 4})->Args({3, 5});

void bm_powerset_all_embeddings(benchmark::State& state) {
  latkit::CensusOptions opt;
  opt.threads = static_cast<std::size_t>(state.range(0));
  const latkit::QuasiOrder P = latkit::powerset(3), Q = latkit::powerset(5);
  for (auto _ : state) benchmark::DoNotOptimize(latkit::enumerate_embeddings(P, Q, opt).maps.size());
}
BENCHMARK(bm_powerset_all_embeddings)->Arg(1)->Arg(4)->UseRealTime();

void bm_chainprod_census(benchmark::State& state) {
  latkit::CensusOptions opt;
  opt.filters.convex_range = true;
  opt.threads = 1;
  const latkit::QuasiOrder P = latkit::ChainPower(2, 2).order(), Q = latkit::ChainPower(3, 3).order();
  for (auto _ : state) benchmark::DoNotOptimize(latkit::enumerate_embeddings(P, Q, opt).maps.size());
}
BENCHMARK(bm_chainprod_census);

void bm_preregular_continuity(benchmark::State& state) {
  const latkit::QuasiOrder P = latkit::n5(), Q = latkit::powerset(3);
  latkit::CensusOptions opt;
  opt.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(latkit::verify_preregular_continuity(P, Q, opt).embeddings);
}
BENCHMARK(bm_preregular_continuity);

}  // namespace
