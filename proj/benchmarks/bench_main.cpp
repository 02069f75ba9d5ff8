#include <benchmark/benchmark.h>

#include "klrw/algebra.hpp"
#include "klrw/ambiguity.hpp"
#include "klrw/resolution.hpp"

namespace {

using namespace klrw;

// A long out-and-back word: (p_1 q_0)^k reduces to s_1^k one collapse and
// slide at a time.
Path zigzag(int k) {
  std::vector<Arrow> w;
  for (int t = 0; t < k; ++t) {
    w.push_back(P(1));
    w.push_back(Q(0));
  }
  return Path::word(std::move(w));
}

void BM_reduce_zigzag(benchmark::State& state) {
  Path w = zigzag(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reduce(w));
}
BENCHMARK(BM_reduce_zigzag)->Arg(8)->Arg(32)->Arg(128);

void BM_mu2_basis(benchmark::State& state) {
  Mor b = a(0, 7, 5), x = a(7, 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(mu2(b, x));
}
BENCHMARK(BM_mu2_basis);

void BM_boundary_closed(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Ambiguity g = Ambiguity::family(n, Fam::Q, 1, true);
  for (auto _ : state) {
    ResolutionElement x;
    x.add(e(g.tgt()), g, e(g.src()), 1);
    benchmark::DoNotOptimize(boundary(n, x));
  }
}
BENCHMARK(BM_boundary_closed)->Arg(4)->Arg(8);

void BM_boundary_recursive(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Ambiguity g = Ambiguity::family(n, Fam::Q, 1, true);
  for (auto _ : state) benchmark::DoNotOptimize(boundary_recursive(n, g));
}
BENCHMARK(BM_boundary_recursive)->Arg(3)->Arg(5);

void BM_exactness_slicewise(benchmark::State& state) {
  QuiverConfig cfg(2);
  for (auto _ : state) benchmark::DoNotOptimize(check_exactness(cfg, 4, 6));
}
BENCHMARK(BM_exactness_slicewise);

}  // namespace

BENCHMARK_MAIN();
