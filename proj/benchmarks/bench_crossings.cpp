#include <benchmark/benchmark.h>

#include "crosslab/drawing.hpp"

using namespace crosslab;

namespace {

Drawing parabola(int n) {
  Drawing d;
  // Powers of 2 padded with an offset to avoid equal pair-products, which
  // would make three disjoint chords concurrent.
  std::vector<Rational> xs;
  Rational x = 0;
  for (int i = 0; i < n; ++i) {
    xs.push_back(x);
    x = x * 2 + 1;
  }
  for (int i = 0; i < n; ++i) d.vertices.emplace(i, Point{xs[i], xs[i] * xs[i]});
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      d.edges.emplace(EdgeKey{i, j},
                      Polyline{d.vertices.at(i), d.vertices.at(j)});
    }
  }
  return d;
}

void bm_crossings_geometric(benchmark::State& state) {
  Drawing d = parabola(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto recs = compute_crossings_geometric(d);
    benchmark::DoNotOptimize(recs);
  }
}

} // namespace

BENCHMARK(bm_crossings_geometric)->Arg(6)->Arg(8)->Arg(10);

BENCHMARK_MAIN();
