#include <benchmark/benchmark.h>

#include "szlenklab/baernstein.hpp"
#include "szlenklab/orlicz.hpp"
#include "szlenklab/random.hpp"
#include "szlenklab/schlumprecht.hpp"
#include "szlenklab/tsirelson.hpp"

using namespace szlenklab;

namespace {

SparseVec make_vec(int support) {
  Rng rng(12345);
  std::vector<SparseVec::Entry> es;
  int idx = 0;
  for (int p = 0; p < support; ++p) {
    idx += rng.uniform_int(1, 3);
    es.push_back({idx, rng.nonzero_uniform(2.0)});
  }
  return SparseVec(es);
}

void BM_TsirelsonNorm(benchmark::State& state) {
  const SparseVec v = make_vec(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tsirelson::norm_value(v));
  }
}
BENCHMARK(BM_TsirelsonNorm)->Arg(8)->Arg(32)->Arg(128);

void BM_TsirelsonOracle(benchmark::State& state) {
  const SparseVec v = make_vec(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tsirelson::oracle(v, 9));
  }
}
BENCHMARK(BM_TsirelsonOracle)->Arg(6)->Arg(8);

void BM_SchlumprechtNorm(benchmark::State& state) {
  const SparseVec v = make_vec(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(schlumprecht::norm_value(v));
  }
}
BENCHMARK(BM_SchlumprechtNorm)->Arg(8)->Arg(32)->Arg(128);

void BM_BaernsteinExact(benchmark::State& state) {
  const SparseVec v = make_vec(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(baernstein::norm_exact_value(v));
  }
}
BENCHMARK(BM_BaernsteinExact)->Arg(8)->Arg(12)->Arg(14);

void BM_OrliczClosedForm(benchmark::State& state) {
  const SparseVec v = make_vec(64);
  const orlicz::OrliczParams p{2.0, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(orlicz::closed_form_norm(v, p));
  }
}
BENCHMARK(BM_OrliczClosedForm);

void BM_LuxemburgBisection(benchmark::State& state) {
  const SparseVec v = make_vec(64);
  const orlicz::OrliczParams p{2.0, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(orlicz::luxemburg_oracle(v, p));
  }
}
BENCHMARK(BM_LuxemburgBisection);

}  // namespace

BENCHMARK_MAIN();
