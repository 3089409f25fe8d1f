// Serial vs OpenMP for the enumeration kernels. The second argument of every
// benchmark is the ExecutionPolicy: 0 serial, 1 parallel.

#include <benchmark/benchmark.h>

#include "commacat/lattice.hpp"
#include "commacat/wall_scan.hpp"
#include "support/fixtures.hpp"

namespace {

using namespace commacat;

ExecutionPolicy policy_of(const benchmark::State& state) {
  return state.range(1) == 0 ? ExecutionPolicy::serial : ExecutionPolicy::parallel;
}

// P_0^n (+) S_1 on Rep(1 -> 2).
RepObject quiver_object(const RepCategory& rep, std::int64_t n) {
  RepObject x = rep.simple(1);
  for (std::int64_t i = 0; i < n; ++i) x = rep.biproduct(x, rep.projective(0)).object;
  return x;
}

CommaObject arrow_object(const CommaCategory& c, std::int64_t n) {
  const auto& A = c.A();
  return c.make_object(A.vect(n), A.vect(n), A.identity(A.vect(n)));
}

void BM_RepSubobjects(benchmark::State& state) {
  const RepCategory rep(2, Quiver::linear(2), "Rep(1->2)", Budget{std::uint64_t{1} << 20, 8});
  const auto x = quiver_object(rep, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rep.enumerate_subobjects(x, policy_of(state)));
}

void BM_CommaSubobjects(benchmark::State& state) {
  const auto c = fixtures::arrow();
  const auto x = arrow_object(c, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(c.enumerate_subobjects(x, policy_of(state)));
}

void BM_Lattice(benchmark::State& state) {
  const auto c = fixtures::arrow();
  const auto subs = c.enumerate_subobjects(arrow_object(c, state.range(0)));
  state.counters["subobjects"] = static_cast<double>(subs.size());
  for (auto _ : state) benchmark::DoNotOptimize(make_lattice(c, subs, policy_of(state)));
}

void BM_AlphaScan(benchmark::State& state) {
  const auto c = fixtures::toy();
  auto x = fixtures::toy_system(c);
  for (std::int64_t i = 1; i < state.range(0); ++i) x = c.biproduct(x, fixtures::toy_system(c)).object;
  const auto g = fixtures::toy_geometry();
  for (auto _ : state) benchmark::DoNotOptimize(alpha_scan(c, x, g, Rational(0), Rational(6), policy_of(state)));
}

}  // namespace

BENCHMARK(BM_RepSubobjects)->ArgsProduct({{1, 2, 3}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CommaSubobjects)->ArgsProduct({{2, 3}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Lattice)->ArgsProduct({{2, 3}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AlphaScan)->ArgsProduct({{1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
