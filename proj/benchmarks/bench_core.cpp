#include <benchmark/benchmark.h>

#include "twistkit/cocycle.hpp"

namespace {

using namespace twistkit;

AlgebraPtr quantum_plane(const Field& f, long q) {
  GeneratorSet gens({"x", "y"});
  // x*y - q*y*x
  SparseVec c;
  c.emplace_back(Word::encode({0, 1}, 2), Scalar::one(f));
  c.emplace_back(Word::encode({1, 0}, 2), -Scalar::from_int(f, q));
  return Algebra::make(f, gens, 2, {Tensor::from_sparse(f, 2, std::move(c))});
}

void BM_rref_dense(benchmark::State& state) {
  const Field f = Field::rationals();
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Matrix m(f, n, 2 * n);
  long v = 1;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < 2 * n; ++c) {
      m.at(r, c) = Scalar::from_int(f, (v * v) % 97 - 48);
      ++v;
    }
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_rref_dense)->Arg(16)->Arg(48);

void BM_graded_component(benchmark::State& state) {
  const Field f = Field::rationals();
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    state.PauseTiming();
    auto a = quantum_plane(f, 2);  // fresh object: no memoized components
    state.ResumeTiming();
    benchmark::DoNotOptimize(a->dim(d));
  }
}
BENCHMARK(BM_graded_component)->Arg(4)->Arg(6)->Arg(8);

void BM_endr_degree3(benchmark::State& state) {
  const Field f = Field::rationals();
  for (auto _ : state) {
    state.PauseTiming();
    EndR er(quantum_plane(f, 2));
    state.ResumeTiming();
    benchmark::DoNotOptimize(er.bialgebra().dim(3));
  }
}
BENCHMARK(BM_endr_degree3);

void BM_theorem_pipeline(benchmark::State& state) {
  const Field f = Field::rationals();
  Matrix phi(f, 2, 2);
  phi.at(0, 0) = Scalar::one(f);
  phi.at(1, 1) = Scalar::from_int(f, 3);
  for (auto _ : state) {
    state.PauseTiming();
    auto er = std::make_shared<EndR>(quantum_plane(f, 2));
    TwistingSystem t = TwistingSystem::one_parameter(
        er->base().gens(), phi, IndexWindow{0, 6});
    state.ResumeTiming();
    Report rep = verify_main_theorem(er, t, 3);
    benchmark::DoNotOptimize(rep.all_pass());
  }
}
BENCHMARK(BM_theorem_pipeline);

}  // namespace

BENCHMARK_MAIN();
