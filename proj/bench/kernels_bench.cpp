#include <benchmark/benchmark.h>

#include <random>

#include "gfan/builtins.hpp"
#include "gfan/cone.hpp"
#include "gfan/matrix.hpp"
#include "gfan/stability.hpp"

using namespace gfan;

namespace {

Matrix random_square(std::size_t n, std::uint64_t seed) {
  PrimeField f(32003);
  std::mt19937_64 rng(seed);
  return random_matrix(f, n, n, rng);
}

void BM_RowReduceSerial(benchmark::State& state) {
  PrimeField f(32003);
  auto m = random_square(state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(row_reduce_serial(f, m));
}

void BM_RowReduceParallel(benchmark::State& state) {
  PrimeField f(32003);
  auto m = random_square(state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(row_reduce_parallel(f, m));
}

const ModuleCatalog& cycle_catalog() {
  static const ModuleCatalog c = [] {
    CatalogOptions o;
    o.dim_cap = 8;
    return build_catalog(build_algebra(parse_algebra(*builtin_algebra_text("cycle3"))), o);
  }();
  return c;
}

std::vector<QVector> grid_points(int half) {
  std::vector<QVector> pts;
  for (const auto& g : box_grid(3, -half, half)) pts.push_back(to_rational(g));
  return pts;
}

void BM_SignatureSweepSerial(benchmark::State& state) {
  const auto& c = cycle_catalog();
  auto pts = grid_points(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(signatures_for_serial(pts, c));
}

void BM_SignatureSweepParallel(benchmark::State& state) {
  const auto& c = cycle_catalog();
  auto pts = grid_points(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(signatures_for(pts, c));
}

RationalCone sample_cone() {
  return cone_from_generators({{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {1, 1, -1, 0}, {-1, 2, 1, 0}});
}

std::vector<QVector> random_points(std::size_t count) {
  std::mt19937_64 rng(9);
  std::vector<QVector> pts(count, QVector(4));
  for (auto& p : pts)
    for (auto& x : p) x = static_cast<int>(rng() % 11) - 5;
  return pts;
}

void BM_MembershipSerial(benchmark::State& state) {
  auto c = sample_cone();
  auto pts = random_points(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(contains_all_serial(c, pts));
}

void BM_MembershipParallel(benchmark::State& state) {
  auto c = sample_cone();
  auto pts = random_points(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(contains_all(c, pts));
}

}  // namespace

BENCHMARK(BM_RowReduceSerial)->Arg(64)->Arg(256);
BENCHMARK(BM_RowReduceParallel)->Arg(64)->Arg(256);
BENCHMARK(BM_SignatureSweepSerial)->Arg(1)->Arg(3);
BENCHMARK(BM_SignatureSweepParallel)->Arg(1)->Arg(3);
BENCHMARK(BM_MembershipSerial)->Arg(1000);
BENCHMARK(BM_MembershipParallel)->Arg(1000);

BENCHMARK_MAIN();
