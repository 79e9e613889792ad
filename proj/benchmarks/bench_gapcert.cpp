#include <benchmark/benchmark.h>

#include "gapcert/bounds.hpp"
#include "gapcert/exact_diag.hpp"
#include "gapcert/lattice.hpp"
#include "gapcert/transfer.hpp"

using namespace gapcert;

static void BM_TransferCompose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(aklt_transfer_left(n).rep.norm());
}
BENCHMARK(BM_TransferCompose)->Arg(2)->Arg(4)->Arg(8);

static void BM_HamiltonianAssembly(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const SparseHermitianOperator h = hamiltonian(build_y_graph(n));
    benchmark::DoNotOptimize(h.mat.nonZeros());
  }
}
BENCHMARK(BM_HamiltonianAssembly)->Arg(1)->Arg(2)->Arg(3);

static void BM_SparseMatvec(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SparseHermitianOperator h = hamiltonian(build_y_graph(n));
  Vector v = Vector::Random(h.dim());
  for (auto _ : state) {
    v = h.mat * v;
    v.normalize();
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_SparseMatvec)->Arg(2)->Arg(3);

static void BM_GammaState(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SiteTensor gl = aklt_gl_tensor(n);
  Rng rng(kDefaultSeed);
  const Matrix b = rng.gaussian_matrix(4, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(gamma_state(n, &gl, nullptr, b).squaredNorm());
}
BENCHMARK(BM_GammaState)->Arg(2)->Arg(3)->Arg(4);

static void BM_BoundSuite(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bound_suite(8).eps_bound);
}
BENCHMARK(BM_BoundSuite);

BENCHMARK_MAIN();
