#include <benchmark/benchmark.h>

#include "nlb/campaign.hpp"
#include "nlb/catalog.hpp"
#include "nlb/hamgeo.hpp"
#include "nlb/multibracket.hpp"
#include "nlb/polynomial.hpp"

namespace {

void BM_Multiply(benchmark::State& state) {
  nlb::Ring r({"x1", "x2", "x3", "x4"});
  auto deg = static_cast<unsigned>(state.range(0));
  auto p = nlb::random_poly(r, deg, 50, 1), q = nlb::random_poly(r, deg, 50, 2);
  for (auto _ : state) benchmark::DoNotOptimize(nlb::multiply(p, q, r));
  state.counters["terms"] = static_cast<double>(p.size() * q.size());
}
BENCHMARK(BM_Multiply)->Arg(2)->Arg(4)->Arg(6);

void BM_FiCheckSo3(benchmark::State& state) {
  auto t = *nlb::catalog("so3").tensor;
  for (auto _ : state) benchmark::DoNotOptimize(nlb::fi_check(t));
}
BENCHMARK(BM_FiCheckSo3)->Unit(benchmark::kMillisecond);

void BM_FiCheckNambu3(benchmark::State& state) {
  auto t = *nlb::catalog("nambu3").tensor;
  nlb::CheckOptions opts{static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(nlb::fi_check(t, opts));
}
BENCHMARK(BM_FiCheckNambu3)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_PreservationSo3(benchmark::State& state) {
  auto t = *nlb::catalog("so3").tensor;
  for (auto _ : state) benchmark::DoNotOptimize(nlb::preservation_check(t));
}
BENCHMARK(BM_PreservationSo3)->Unit(benchmark::kMillisecond);

void BM_Campaign(benchmark::State& state) {
  nlb::CampaignConfig cfg;
  cfg.samples = static_cast<std::uint64_t>(state.range(0));
  cfg.seed = 7;
  for (auto _ : state) benchmark::DoNotOptimize(nlb::theorem1_campaign(cfg));
}
BENCHMARK(BM_Campaign)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
