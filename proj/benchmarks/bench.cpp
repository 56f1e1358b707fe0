#include <benchmark/benchmark.h>

#include "qgauss/convolution.hpp"
#include "qgauss/random.hpp"

namespace {

using namespace qg;

GaussianSpec bench_spec(int n) {
  Rng rng(42);
  return random_valid_spec({GroupTarget::Kind::u_plus, n}, 2, rng);
}

void bm_cook(benchmark::State& state) {
  GaussianSpec spec = bench_spec(int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cook(spec));
}
BENCHMARK(bm_cook)->Arg(2)->Arg(3)->Arg(4);

void bm_eval_phi(benchmark::State& state) {
  GaussianSpec spec = bench_spec(3);
  CookedFunctional f = cook(spec);
  Word w;
  for (int k = 0; k < int(state.range(0)); ++k)
    w.push_back(fundamental(k % 3 + 1, (k + 1) % 3 + 1, k % 2 == 1));
  for (auto _ : state) benchmark::DoNotOptimize(eval_phi(f, w));
}
BENCHMARK(bm_eval_phi)->Arg(2)->Arg(4)->Arg(6);

void bm_kraus_extract(benchmark::State& state) {
  GaussianSpec spec = bench_spec(int(state.range(0)));
  TensorOperator w = cp_sum(spec.L, spec.ambient_dim());
  for (auto _ : state) benchmark::DoNotOptimize(kraus_extract(w, kDefaultTol));
}
BENCHMARK(bm_kraus_extract)->Arg(2)->Arg(3)->Arg(4);

void bm_convolve(benchmark::State& state) {
  GaussianSpec spec = bench_spec(2);
  WordFunctional f = WordFunctional::from_cooked(cook(spec));
  Word w;
  for (int k = 0; k < int(state.range(0)); ++k)
    w.push_back(fundamental(k % 2 + 1, (k + 1) % 2 + 1));
  Element x = element(w);
  for (auto _ : state) benchmark::DoNotOptimize(convolve(f, f, x, 2));
}
BENCHMARK(bm_convolve)->Arg(2)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
