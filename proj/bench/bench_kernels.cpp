#include <benchmark/benchmark.h>

#include <random>

#include "fga/galg.hpp"
#include "fga/shoda.hpp"

using namespace fga;

namespace {

galg::AlgebraPtr algebra_of_order(int n) {
  // C_n x C_2 keeps the group non-cyclic for even sizes, C_n otherwise
  auto g = n % 2 == 0 ? groups::direct_product(groups::cyclic_group(n / 2), groups::cyclic_group(2))
                      : groups::cyclic_group(n);
  return galg::make_algebra(std::move(g), ff::make_small_field(ff::make_field(n % 3 == 0 ? 5 : 3, 2)));
}

std::vector<galg::Code> random_vector(const galg::Algebra& alg, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<galg::Code> d(0, alg.field->size() - 1);
  std::vector<galg::Code> v(alg.dim());
  for (auto& c : v) c = d(rng);
  return v;
}

template <auto Kernel>
void BM_convolve(benchmark::State& state) {
  const auto alg = algebra_of_order(static_cast<int>(state.range(0)));
  const auto a = random_vector(*alg, 1), b = random_vector(*alg, 2);
  std::vector<galg::Code> out(alg->dim());
  for (auto _ : state) {
    Kernel(*alg, a, b, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * alg->dim() * alg->dim());
}

void BM_convolve_serial(benchmark::State& s) { BM_convolve<galg::kernels::convolve_serial>(s); }
void BM_convolve_omp(benchmark::State& s) { BM_convolve<galg::kernels::convolve_omp>(s); }

void BM_central_decomposition(benchmark::State& state) {
  const auto q8 = groups::metacyclic_group(4, 2, 2, 3, "Q8");
  const auto alg = galg::make_algebra(groups::direct_product(groups::cyclic_group(5), q8),
                                      ff::make_small_field(ff::make_field(3, 1)));
  for (auto _ : state) benchmark::DoNotOptimize(shoda::central_decomposition(alg, static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_convolve_serial)->Arg(16)->Arg(32)->Arg(64)->Arg(128);
BENCHMARK(BM_convolve_omp)->Arg(16)->Arg(32)->Arg(64)->Arg(128);
BENCHMARK(BM_central_decomposition)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
