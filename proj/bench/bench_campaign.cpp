// Serial reference vs OpenMP kernel on the same campaigns.

#include <benchmark/benchmark.h>

#include "crossmat/campaign.hpp"
#include "crossmat/oracle.hpp"

using namespace crossmat;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

void BM_CertifyCn02(benchmark::State& state) {
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto cert = certify_cn02(n, mode(state));
    benchmark::DoNotOptimize(cert.realized);
  }
}

void BM_Claim(benchmark::State& state, const char* claim, std::size_t trials) {
  ClaimParams p;
  p.trials = trials;
  p.exec = mode(state);
  for (auto _ : state) {
    auto r = verify_claim(claim, p);
    benchmark::DoNotOptimize(r.instances);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(trials));
}

}  // namespace

BENCHMARK(BM_CertifyCn02)->ArgNames({"parallel", "n"})->Args({0, 5})->Args({1, 5})->Args({0, 6})->Args({1, 6})
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Claim, cn_decomposition, "cn-decomposition", 10000)
    ->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Claim, ou_characterization, "thm-OU5", 2000)
    ->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Claim, positive_pure, "cor-5pp", 500)
    ->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
