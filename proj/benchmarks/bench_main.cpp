#include "pglsym/cusp.hpp"
#include "pglsym/gluing.hpp"
#include "pglsym/homology.hpp"
#include "pglsym/verify.hpp"

#include <benchmark/benchmark.h>

#include <string>

namespace {

pglsym::Triangulation census(const std::string &name) {
  return pglsym::load_triangulation(std::string(PGLSYM_DATA_DIR) + "/" + name + ".json");
}

void BM_GluingSystem(benchmark::State &state) {
  const auto tri = census("m129");
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const pglsym::JComplex cx(tri, n);
    benchmark::DoNotOptimize(pglsym::gluing_system(cx));
  }
}
BENCHMARK(BM_GluingSystem)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_SmithBetaStar(benchmark::State &state) {
  const pglsym::JComplex cx(census("m129"), static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(pglsym::smith_normal_form(cx.beta_star()));
}
BENCHMARK(BM_SmithBetaStar)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_CuspSystem(benchmark::State &state) {
  const auto tri = census("m129");
  const pglsym::CuspSurface surface(tri);
  const auto curves = pglsym::homology_basis_curves(surface);
  const pglsym::JComplex cx(tri, static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(pglsym::cusp_system(surface, cx, curves));
}
BENCHMARK(BM_CuspSystem)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_VerifyAll(benchmark::State &state) {
  const auto tri = census("m004");
  for (auto _ : state)
    benchmark::DoNotOptimize(pglsym::verify_all(tri, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_VerifyAll)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
