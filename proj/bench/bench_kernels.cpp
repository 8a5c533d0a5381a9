// Serial reference kernels against the OpenMP versions.

#include <benchmark/benchmark.h>

#include "qu2/endo.hpp"
#include "qu2/kernels.hpp"
#include "qu2/parse.hpp"

namespace {

using namespace qu2;

// the level-3 extension test against U^4, as used by the brute-force enumeration
bool extends_u4(std::span<const std::uint32_t> p) {
  static const Element u4 = parse_element("U^4");
  return check_extension(PermUnitary::from_perm(3, Perm(p.begin(), p.end())), u4);
}

void BM_sweep_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reference::permutation_sweep(8, extends_u4));
}

void BM_sweep_parallel(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(permutation_sweep(8, extends_u4, jobs));
}

const Element kLeft = parse_element("F U^5 F* + phi^2(U^3 P[12]) + S[121] U^-7 S*[22]");
// the same element written at a deeper level, so the sweep never exits early
const Element kRight = normalize(kLeft, kLeft.depth() + 3);

void BM_oracle_serial(benchmark::State& state) {
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reference::oracle_sweep(kLeft, kRight, depth));
}

void BM_oracle_parallel(benchmark::State& state) {
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_sweep(kLeft, kRight, depth, 0));
}

}  // namespace

BENCHMARK(BM_sweep_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sweep_parallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_oracle_serial)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_oracle_parallel)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
