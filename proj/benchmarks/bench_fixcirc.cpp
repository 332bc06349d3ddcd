#include <benchmark/benchmark.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "fixcirc/circle_engine.hpp"
#include "fixcirc/contractions.hpp"
#include "fixcirc/instance.hpp"
#include "fixcirc/metric_space.hpp"
#include "fixcirc/quadrature.hpp"

namespace {

using namespace fixcirc;

struct Rng {
  std::uint64_t state = 0x51ce;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

MetricSpace make_space(std::size_t n) {
  Rng rng;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      d[i * n + j] = d[j * n + i] = 1.0 + double(rng.below(50));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
  return MetricSpace::from_matrix(std::move(labels), std::move(d));
}

MultivaluedMap make_map(const MetricSpace& space) {
  Rng rng{0xfeed};
  std::vector<PointSet> images;
  for (PointId x = 0; x < space.size(); ++x) {
    std::vector<PointId> img;
    const std::size_t size = 1 + rng.below(3);
    for (std::size_t i = 0; i < size; ++i) img.push_back(rng.below(space.size()));
    images.emplace_back(std::move(img));
  }
  return MultivaluedMap(space, std::move(images));
}

void BM_hausdorff(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const MetricSpace space = make_space(n);
  std::vector<PointId> a_ids, b_ids;
  for (PointId i = 0; i < n; i += 2) a_ids.push_back(i);
  for (PointId i = 1; i < n; i += 2) b_ids.push_back(i);
  const PointSet a(a_ids), b(b_ids);
  for (auto _ : state) benchmark::DoNotOptimize(hausdorff(space, a, b));
}
BENCHMARK(BM_hausdorff)->Range(8, 256);

void BM_compute_r(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const MetricSpace space = make_space(n);
  const MultivaluedMap map = make_map(space);
  for (auto _ : state) benchmark::DoNotOptimize(compute_r(space, map));
}
BENCHMARK(BM_compute_r)->Range(8, 128);

void BM_max_tau_fc(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const MetricSpace space = make_space(n);
  const MultivaluedMap map = make_map(space);
  const FFunction f = FFunction::ln();
  for (auto _ : state) benchmark::DoNotOptimize(max_tau_fc(space, map, f, 0));
}
BENCHMARK(BM_max_tau_fc)->Range(8, 128);

void BM_enumerate_fixed_circles(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const MetricSpace space = make_space(n);
  const MultivaluedMap map = make_map(space);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_fixed_circles(space, map));
}
BENCHMARK(BM_enumerate_fixed_circles)->Range(8, 64);

void BM_theorem_example2(benchmark::State& state) {
  const Instance inst = builtin_instance("example2");
  const FFunction f = FFunction::ln();
  const PointId origin = inst.space.require("0");
  const double tau = std::log(4.0 / 3.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_theorem(inst.space, inst.map,
                                            ContractionClass::Fc, f, tau,
                                            origin));
}
BENCHMARK(BM_theorem_example2);

void BM_adaptive_simpson(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(adaptive_simpson(
        [](double t) { return std::exp(-t * t); }, 0.0, 10.0, 1e-9));
}
BENCHMARK(BM_adaptive_simpson);

}  // namespace

BENCHMARK_MAIN();
