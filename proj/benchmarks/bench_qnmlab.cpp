// Copyright 2026 The qnmlab Authors
// SPDX-License-Identifier: Apache-2.0

#include <memory>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "qnmlab/greens.hpp"
#include "qnmlab/numerics.hpp"
#include "qnmlab/qnm1d.hpp"
#include "qnmlab/qnm2d.hpp"

namespace
{

using namespace qnmlab;

std::vector<cplx> sample_arguments(double radius, int n)
{
  std::mt19937 gen(2718);
  std::uniform_real_distribution<double> re(0.1, radius), im(-0.3, 0.3);
  std::vector<cplx> z(n);
  for (auto &v : z)
  {
    v = cplx(re(gen), im(gen));
  }
  return z;
}

// Arg is the largest |Re z|; 12 and below stays on the power series.
void BM_Hankel0(benchmark::State &state)
{
  const auto z = sample_arguments(double(state.range(0)), 1024);
  for (auto _ : state)
  {
    for (const cplx v : z)
    {
      benchmark::DoNotOptimize(hankel0_first_kind(v));
    }
  }
  state.SetItemsProcessed(state.iterations() * std::int64_t(z.size()));
}
BENCHMARK(BM_Hankel0)->Arg(4)->Arg(12)->Arg(60);

void BM_AssembleA1(benchmark::State &state)
{
  const auto lattice = build_hexagonal_crystallite(int(state.range(0)), 1.0, 0.15, 11.4, 1.0);
  const ScattererMesh mesh(lattice, int(state.range(1)));
  const cplx omega = ComplexFrequency::from_normalized(cplx(0.42, -0.001), 1.0).omega;
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(assemble_ls_operator_a1(lattice, omega, mesh));
  }
  state.counters["orbits"] = double(mesh.orbit_representatives().size());
}
BENCHMARK(BM_AssembleA1)->Args({1, 8})->Args({1, 16})->Args({2, 16})->Unit(benchmark::kMillisecond);

void BM_SlabRoot(benchmark::State &state)
{
  const double n = 3.4;
  const LayeredStack1D slab({{1.0, n * n}}, 1.0, 1.0);
  const cplx guess(2.0 * pi / n, -0.1);
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(find_qnm_1d(slab, guess));
  }
}
BENCHMARK(BM_SlabRoot)->Unit(benchmark::kMicrosecond);

void BM_Ldos(benchmark::State &state)
{
  const auto lattice = build_hexagonal_crystallite(1, 1.0, 0.15, 11.4, 1.0);
  const auto mesh = std::make_shared<const ScattererMesh>(lattice, int(state.range(0)));
  const double omega = ComplexFrequency::from_normalized(0.42, 1.0).omega.real();
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(ldos_enhancement(lattice, {0.0, 0.0}, omega, mesh));
  }
}
BENCHMARK(BM_Ldos)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
