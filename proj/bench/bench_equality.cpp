#include <benchmark/benchmark.h>
#include <omp.h>

#include "graydist/laws.hpp"
#include "graydist/monads.hpp"
#include "graydist/parametric.hpp"

namespace {

using namespace graydist;

// Both sides of the associativity law of the composite writer(Z3).reader(2)
// monad, compared exhaustively over every source shape.
struct AssocCase {
  Morphism lhs, rhs;
  AssocCase() {
    const MonadData c = compose_via_law(dwriter(cyclic_monoid(2), reader(2)));
    const Container& t = c.functor;
    lhs = vertical(c.mult, whisker(t, c.mult, Container{}));
    rhs = vertical(c.mult, whisker(Container{}, c.mult, t));
  }
};

const AssocCase& assoc_case() {
  static const AssocCase c;
  return c;
}

void BM_FlatSerial(benchmark::State& st) {
  const auto& c = assoc_case();
  for (auto _ : st) benchmark::DoNotOptimize(equal_flat_serial(c.lhs, c.rhs).equal);
}

void BM_FlatOpenMP(benchmark::State& st) {
  const auto& c = assoc_case();
  omp_set_num_threads(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(equal_flat_parallel(c.lhs, c.rhs).equal);
}

void BM_Lazy(benchmark::State& st) {
  const auto& c = assoc_case();
  for (auto _ : st) benchmark::DoNotOptimize(equal_lazy(c.lhs, c.rhs).equal);
}

}  // namespace

BENCHMARK(BM_FlatSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FlatOpenMP)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Lazy)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
