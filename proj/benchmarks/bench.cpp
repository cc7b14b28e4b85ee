#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "semiramsey/dynamics.hpp"
#include "semiramsey/ellis.hpp"
#include "semiramsey/grunwald.hpp"
#include "semiramsey/ramsey.hpp"

using namespace semiramsey;

namespace {

Map rotation(std::size_t n, std::size_t by) {
  Map m(n);
  for (std::size_t x = 0; x < n; ++x) m[x] = static_cast<std::uint32_t>((x + by) % n);
  return m;
}

void BM_Grunwald(benchmark::State& state) {
  const ConfigSet<Int> F({0, 1, 2});
  GrunwaldOptions opts;
  opts.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(grunwald_number(static_cast<int>(state.range(0)), F, opts).N);
}
BENCHMARK(BM_Grunwald)->Arg(1)->Arg(2);

// Random coloring, ten-term F: short windows scan fully, long ones stop at an early copy.
void BM_FindMonoCopy(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(5);
  std::vector<int> colors(n);
  for (auto& c : colors) c = static_cast<int>(rng() % 2) + 1;
  const NatColoring c(NatRange(0, static_cast<Int>(n) - 1), 2, colors);
  std::vector<Int> F(10);
  std::iota(F.begin(), F.end(), Int{0});
  std::vector<Int> d(50);
  std::iota(d.begin(), d.end(), Int{1});
  const ConfigSet<Int> config(F);
  for (auto _ : state)
    benchmark::DoNotOptimize(find_mono_copy(NatModule{}, c, config, std::span<const Int>(d)));
}
BENCHMARK(BM_FindMonoCopy)->Arg(500)->Arg(4000);

void BM_HittingTimeSet(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto tds = FiniteTDS::nat(n, {rotation(n, 1), rotation(n, 3)});
  for (auto _ : state) {
    auto h = hitting_time_set(tds, {0, 1}, {TimeElement{1, 0}, TimeElement{0, 1}},
                              Interval{0, static_cast<Int>(4 * n)});
    benchmark::DoNotOptimize(h.N.size());
  }
}
BENCHMARK(BM_HittingTimeSet)->Arg(16)->Arg(128);

void BM_MinGapCertificate(benchmark::State& state) {
  std::mt19937_64 rng(9);
  std::vector<Int> D;
  for (Int x = 0; x < state.range(0); ++x)
    if (rng() % 3 == 0) D.push_back(x);
  for (auto _ : state) benchmark::DoNotOptimize(min_gap_certificate(D, Interval{0, state.range(0) - 1}).K);
}
BENCHMARK(BM_MinGapCertificate)->Arg(1000)->Arg(100000);

void BM_GenerateSemigroup(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Map shrink(n);
  for (std::size_t x = 0; x < n; ++x) shrink[x] = static_cast<std::uint32_t>(x == 0 ? 0 : x - 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(generate_semigroup(n, {rotation(n, 1), shrink}).elements.size());
}
BENCHMARK(BM_GenerateSemigroup)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
