#include <benchmark/benchmark.h>

#include "hyll/assembly.hpp"
#include "hyll/eigensolve.hpp"
#include "hyll/sweep.hpp"

using namespace hyll;

namespace {

void BM_Enumerate(benchmark::State& state) {
  const int omega = static_cast<int>(state.range(0));
  for (auto _ : state) {
    BasisSet set = enumerate(omega);
    benchmark::DoNotOptimize(set.terms.data());
  }
}
BENCHMARK(BM_Enumerate)->Arg(10)->Arg(30)->Arg(50);

void BM_RadialTable(benchmark::State& state) {
  const int max_power = static_cast<int>(state.range(0));
  for (auto _ : state) {
    RadialTable table(Rational(2), max_power);
    benchmark::DoNotOptimize(&table);
  }
}
BENCHMARK(BM_RadialTable)->Arg(30)->Arg(105);

void BM_HamiltonianElement(benchmark::State& state) {
  const BasisSet set = enumerate(8);
  const BasisTerm a = set.terms[set.terms.size() - 1];
  const BasisTerm b = set.terms[set.terms.size() / 2];
  for (auto _ : state) {
    ExactValue v = hamiltonian_element_exact(a, b, set);
    benchmark::DoNotOptimize(&v);
  }
}
BENCHMARK(BM_HamiltonianElement);

void BM_AssembleExact(benchmark::State& state) {
  const int omega = static_cast<int>(state.range(0));
  const PrecisionContext ctx = make_context(50, Rational(2));
  const BasisSet set = enumerate(omega);
  for (auto _ : state) {
    Pencil p = assemble(set, ctx, AssemblyMode::exact, 1);
    benchmark::DoNotOptimize(&p);
  }
}
BENCHMARK(BM_AssembleExact)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_Realize(benchmark::State& state) {
  const PrecisionContext lo = make_context(50, Rational(2));
  const PrecisionContext hi = make_context(80, Rational(2));
  Pencil p = assemble(enumerate(static_cast<int>(state.range(0))), lo, AssemblyMode::exact, 1);
  bool flip = false;
  for (auto _ : state) {
    realize(p, flip ? lo : hi);
    flip = !flip;
    benchmark::DoNotOptimize(&p);
  }
}
BENCHMARK(BM_Realize)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_Cholesky(benchmark::State& state) {
  const PrecisionContext ctx = make_context(60, Rational(2));
  const Pencil p = assemble(enumerate(static_cast<int>(state.range(0))), ctx,
                            AssemblyMode::floating, 1);
  for (auto _ : state) {
    CholeskyResult r = cholesky(p.S, p.n, ctx.prec());
    benchmark::DoNotOptimize(&r);
  }
}
BENCHMARK(BM_Cholesky)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_LowestEigenpair(benchmark::State& state) {
  const PrecisionContext ctx = make_context(60, Rational(2));
  const Pencil p = assemble(enumerate(static_cast<int>(state.range(0))), ctx,
                            AssemblyMode::floating, 1);
  EigenOptions opt;
  opt.prec = ctx.prec();
  opt.tol = pow10(-50, ctx.prec());
  opt.sigma0 = Real(-3L, ctx.prec());
  for (auto _ : state) {
    EigenResult r = lowest_eigenpair(p.H, p.S, p.n, opt);
    benchmark::DoNotOptimize(&r);
  }
}
BENCHMARK(BM_LowestEigenpair)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
