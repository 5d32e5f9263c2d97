#include <benchmark/benchmark.h>

#include "toricd/classifier.hpp"
#include "toricd/lattice.hpp"
#include "toricd/primitive.hpp"

namespace {

using namespace toricd;

IntMatrix plane() { return IntMatrix{{1, 1, 2, 2}, {1, 2, 0, 1}}; }
IntMatrix prism() { return IntMatrix{{1, 1, 1, 1, 1, 1}, {0, 2, 3, 0, 2, 3}, {0, 0, 0, 1, 1, 1}}; }

void BM_Snf(benchmark::State& state) {
  IntMatrix M{{12, 18, 6, 4}, {8, -3, 9, 7}, {5, 10, -15, 20}, {2, 4, 6, 9}};
  for (auto _ : state) benchmark::DoNotOptimize(snf(M));
}
BENCHMARK(BM_Snf);

void BM_BuildToric(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_toric(prism()));
}
BENCHMARK(BM_BuildToric);

void BM_MembershipWindow(benchmark::State& state) {
  ToricData T = build_toric(prism());
  auto pts = saturation_window(T, Integer(state.range(0)));
  for (auto _ : state) {
    SemigroupEngine S(T);  // fresh cache each round
    std::size_t n = 0;
    for (const auto& p : pts) n += S.in_semigroup(p);
    benchmark::DoNotOptimize(n);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(pts.size()));
}
BENCHMARK(BM_MembershipWindow)->Arg(8)->Arg(16);

void BM_ClassifyCoset(benchmark::State& state) {
  SemigroupEngine S(build_toric(plane()));
  for (auto _ : state) {
    ParameterClassifier C(S);
    benchmark::DoNotOptimize(C.classify_coset(RatVector{0, 0}, Window{Integer(state.range(0))}));
  }
}
BENCHMARK(BM_ClassifyCoset)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_Prim(benchmark::State& state) {
  SemigroupEngine S(build_toric(plane()));
  for (auto _ : state) {
    ParameterClassifier C(S);
    benchmark::DoNotOptimize(enumerate_prim(C, default_window(S.toric())));
  }
}
BENCHMARK(BM_Prim)->Unit(benchmark::kMillisecond);

void BM_CheckC2(benchmark::State& state) {
  SemigroupEngine S(build_toric(prism()));
  for (auto _ : state) benchmark::DoNotOptimize(check_C2(S));
}
BENCHMARK(BM_CheckC2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
