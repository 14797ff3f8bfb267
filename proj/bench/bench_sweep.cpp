#include <benchmark/benchmark.h>

#include <vector>

#include "abm/quadrature.hpp"
#include "abm/tov/search.hpp"
#include "abm/tov/star.hpp"

namespace {

abm::tov::SweepRequest table_request() {
  abm::tov::SweepRequest req;
  req.orders = {4, 5, 6, 7, 8, 9, 10};
  req.tolerances = {1e-2, 1e-4, 1e-6, 1e-8};
  req.p_central = 3.631382e35;
  req.base = abm::tov::default_star_config();
  req.reference = {1.4121295e33, 9.1614913e5};
  return req;
}

void BM_SweepSerial(benchmark::State& state) {
  const auto req = table_request();
  for (auto _ : state) benchmark::DoNotOptimize(abm::tov::parameter_sweep_serial(req));
}
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);

void BM_SweepParallel(benchmark::State& state) {
  const auto req = table_request();
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(abm::tov::parameter_sweep(req, jobs));
}
BENCHMARK(BM_SweepParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Sieve(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        abm::tov::trinary_sieve(1e35, 1e36, abm::tov::default_star_config(6, 1e-8), {}, 1e-5, jobs));
  }
}
BENCHMARK(BM_Sieve)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_QuadratureWeights(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<double> nodes(n);
  for (std::size_t k = 0; k < n; ++k) nodes[k] = -static_cast<double>(n - 1 - k) * 0.7;
  for (auto _ : state) benchmark::DoNotOptimize(abm::quadrature_weights(nodes, 0.9));
}
BENCHMARK(BM_QuadratureWeights)->Arg(2)->Arg(5)->Arg(11)->Arg(21);

}  // namespace

BENCHMARK_MAIN();
