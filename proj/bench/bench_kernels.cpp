// Serial reference vs OpenMP kernels. Usage: bench_kernels [n] [T] [threads]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "corrtree/correlation.hpp"
#include "corrtree/dynamics.hpp"
#include "corrtree/metric.hpp"
#include "corrtree/mst.hpp"
#include "corrtree/parallel.hpp"
#include "corrtree/serial.hpp"
#include "corrtree/synthgen.hpp"
#include "corrtree/ultrametric.hpp"

using namespace corrtree;

namespace {

double best_of(int reps, const std::function<void()>& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const char* name, double serial, double parallel) {
  std::printf("%-22s %10.4f %10.4f %8.2fx\n", name, serial, parallel, serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 300;
  const std::size_t T = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 2000;
  if (argc > 3) set_threads(std::atoi(argv[3]));
  const int reps = 3;

  FactorModelSpec spec;
  spec.groups = {{"G1", n / 3}, {"G2", n / 3}, {"G3", n - 2 * (n / 3)}};
  spec.length = T;
  spec.global_loading = 0.3;
  spec.seed = 1;

  std::printf("n=%zu T=%zu threads=%d\n", n, T, max_threads());
  std::printf("%-22s %10s %10s %9s\n", "kernel", "serial s", "omp s", "speedup");

  ReturnsMatrix y;
  row("generate", best_of(reps, [&] { y = serial::generate(spec); }), best_of(reps, [&] { y = generate(spec); }));

  CorrelationMatrix c;
  row("pearson_matrix", best_of(reps, [&] { c = serial::pearson_matrix(y); }),
      best_of(reps, [&] { c = pearson_matrix(y); }));

  DistanceMatrix d;
  row("to_distance", best_of(reps, [&] { d = serial::to_distance(c); }), best_of(reps, [&] { d = to_distance(c); }));

  const SpanningTree tree = build_mst(d);
  UltrametricMatrix u;
  row("subdominant_ultrametric", best_of(reps, [&] { u = serial::subdominant_ultrametric(tree); }),
      best_of(reps, [&] { u = subdominant_ultrametric(tree); }));

  const WindowSpec w{T / 4, T / 8};
  TreeSequence seq;
  row("rolling_trees", best_of(1, [&] { seq = serial::rolling_trees(y, w); }),
      best_of(1, [&] { seq = rolling_trees(y, w); }));
  return 0;
}
