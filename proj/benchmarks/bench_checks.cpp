#include <benchmark/benchmark.h>

#include "gammalib/filtration.hpp"
#include "gammalib/gamma_module.hpp"
#include "gammalib/grading.hpp"
#include "gammalib/hom.hpp"

using namespace gammalib;

namespace {

GammaRing z2() {
  AbelianGroup g = AbelianGroup::cyclic_product({2});
  return GammaRing(g, g, [](const Element& x, const Element& a,
                            const Element& y) {
    return Element{(x[0] * a[0] * y[0]) % 2};
  });
}

GradedGammaRing group_ring(std::size_t n) {
  return semigroup_gamma_ring(z2(), cyclic_group_semigroup(n));
}

void BM_check_axioms(benchmark::State& state) {
  GammaRing r = group_ring(static_cast<std::size_t>(state.range(0))).ring();
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_axioms(r));
  }
}
BENCHMARK(BM_check_axioms)->Arg(2)->Arg(3)->Arg(4);

void BM_check_internal_grading(benchmark::State& state) {
  GradedGammaRing g = group_ring(static_cast<std::size_t>(state.range(0)));
  InternalGrading internal = as_internal(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_internal_grading(internal));
  }
}
BENCHMARK(BM_check_internal_grading)->Arg(2)->Arg(3)->Arg(4);

void BM_strongly_graded(benchmark::State& state) {
  GradedGammaRing g = group_ring(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(strongly_graded_check(g));
  }
}
BENCHMARK(BM_strongly_graded)->Arg(2)->Arg(4);

void BM_associated_graded(benchmark::State& state) {
  Filtration f = filtration_from_grading(
      polynomial_gamma_ring(z2(), static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(associated_graded(f));
  }
}
BENCHMARK(BM_associated_graded)->Arg(1)->Arg(2);

void BM_enumerate_homs(benchmark::State& state) {
  GammaModule m = regular_module(group_ring(2).ring());
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_homs(m, m));
  }
}
BENCHMARK(BM_enumerate_homs);

}  // namespace

BENCHMARK_MAIN();
