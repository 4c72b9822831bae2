// Times the OpenMP kernels against their serial references: dense matrix
// multiply at a few sizes and the partitioned forest-matrix scan on a random
// digraph. Prints one line per case with the speedup.

#include <chrono>
#include <cstdio>
#include <random>

#include "lapcon/forest.hpp"
#include "lapcon/kernels.hpp"
#include "lapcon/random.hpp"

using namespace lapcon;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

SquareMatrix random_matrix(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  SquareMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = dist(rng);
  return m;
}

void bench_matmul(int n, int reps) {
  std::mt19937_64 rng(42);
  const SquareMatrix a = random_matrix(rng, n);
  const SquareMatrix b = random_matrix(rng, n);
  SquareMatrix out(n);

  auto t0 = Clock::now();
  for (int r = 0; r < reps; ++r) kernels::matmul_serial(a, b, out);
  const double serial = seconds_since(t0) / reps;

  t0 = Clock::now();
  for (int r = 0; r < reps; ++r) kernels::matmul(a, b, out);
  const double parallel = seconds_since(t0) / reps;

  std::printf("matmul n=%-5d serial %.4fs  omp %.4fs  speedup %.2fx\n", n, serial, parallel,
              serial / parallel);
}

void bench_forest(int n, double arc_prob) {
  std::mt19937_64 rng(7);
  const Digraph g = random_digraph(rng, n, arc_prob, 0.5, 2.0);

  auto t0 = Clock::now();
  const ForestSummary serial = maximal_forest_matrix_serial(g);
  const double ts = seconds_since(t0);

  t0 = Clock::now();
  const ForestSummary parallel = maximal_forest_matrix(g);
  const double tp = seconds_since(t0);

  const double diff = kernels::max_abs_diff(serial.j_matrix, parallel.j_matrix);
  std::printf("forest n=%-2d arcs=%-3zu serial %.4fs  omp %.4fs  speedup %.2fx  max diff %.2e\n",
              n, g.arcs().size(), ts, tp, ts / tp, diff);
}

}  // namespace

int main() {
  bench_matmul(128, 20);
  bench_matmul(256, 10);
  bench_matmul(512, 3);
  bench_forest(9, 0.5);
  bench_forest(10, 0.45);
  return 0;
}
