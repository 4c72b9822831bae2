#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "lapcon/dynamics.hpp"
#include "lapcon/errors.hpp"
#include "lapcon/forest.hpp"
#include "lapcon/kernels.hpp"
#include "lapcon/random.hpp"
#include "test_util.hpp"

using namespace lapcon;
namespace tu = lapcon::testutil;

namespace {

std::vector<double> mat_apply(const SquareMatrix& m, const std::vector<double>& x) {
  std::vector<double> y(x.size());
  kernels::matvec(m, x, y);
  return y;
}

}  // namespace

TEST_CASE("continuous simulation examples") {
  const std::vector<double> x0{1.0, -2.0, 3.0};
  const Trajectory still = simulate_continuous(tu::empty(3), x0, 5.0, 0.1, 1);
  for (const auto& state : still.states)
    CHECK(kernels::max_abs_diff(state, x0) == 0.0);

  // 2-cycle closed form: x(t) = (1 - e^{-2t}, 1 + e^{-2t}) from x0 = (0, 2).
  const std::vector<double> pair{0.0, 2.0};
  const Trajectory cyc = simulate_continuous(tu::two_cycle(), pair, 20.0, 0.01, 10);
  CHECK(kernels::max_abs_diff(cyc.states.back(), std::vector<double>{1.0, 1.0}) <= 1e-6);
  for (std::size_t k = 0; k < cyc.times.size(); ++k) {
    const double e = std::exp(-2.0 * cyc.times[k]);
    CHECK(cyc.states[k][0] == doctest::Approx(1.0 - e).epsilon(1e-8));
    CHECK(cyc.states[k][1] == doctest::Approx(1.0 + e).epsilon(1e-8));
  }

  const Trajectory path = simulate_continuous(tu::path(3), std::vector<double>{5.0, 3.0, 7.0}, 50.0, 0.01, 100);
  CHECK(kernels::max_abs_diff(path.states.back(), std::vector<double>{7.0, 7.0, 7.0}) <= 1e-6);

  CHECK_THROWS_AS(simulate_continuous(tu::path(3), std::vector<double>{1, 2, 3}, 1.0, 0.0, 1), Error);
  CHECK_THROWS_AS(simulate_continuous(tu::path(3), std::vector<double>{1, 2}, 1.0, 0.1, 1), Error);
}

TEST_CASE("times are strictly increasing and strides keep the final state") {
  const Trajectory t = simulate_continuous(tu::two_cycle(), std::vector<double>{0.0, 2.0}, 1.0, 0.03, 7);
  for (std::size_t k = 1; k < t.times.size(); ++k) CHECK(t.times[k] > t.times[k - 1]);
  CHECK(t.times.front() == 0.0);
  CHECK(t.times.back() == doctest::Approx(33 * 0.03));  // llround(1.0 / 0.03) = 33 steps
}

TEST_CASE("discrete simulation examples") {
  const Trajectory still = simulate_discrete(tu::empty(2), 0.5, std::vector<double>{3.0, -1.0}, 10);
  CHECK(kernels::max_abs_diff(still.states.back(), std::vector<double>{3.0, -1.0}) == 0.0);

  const Trajectory fixed = simulate_discrete(tu::two_cycle(), 0.5, std::vector<double>{0.0, 2.0}, 5);
  CHECK(kernels::max_abs_diff(fixed.states[1], std::vector<double>{1.0, 1.0}) <= 1e-15);
  CHECK(kernels::max_abs_diff(fixed.states.back(), std::vector<double>{1.0, 1.0}) <= 1e-15);

  // eps = 1 on the 2-cycle is a pure swap; plain powers never settle.
  const Trajectory swap = simulate_discrete(tu::two_cycle(), 1.0, std::vector<double>{0.0, 2.0}, 3);
  CHECK(swap.states[1] == std::vector<double>{2.0, 0.0});
  CHECK(swap.states[2] == std::vector<double>{0.0, 2.0});
  CHECK(swap.states[3] == std::vector<double>{2.0, 0.0});

  CHECK_THROWS_AS(simulate_discrete(tu::two_cycle(), 0.0, std::vector<double>{0.0, 2.0}, 3), Error);
}

TEST_CASE("elementwise update equals the Perron matrix iteration") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const Digraph g = random_digraph(rng, n, 0.5, 0.2, 2.0);
    const double eps = 0.2;
    const std::vector<double> x0 = random_vector(rng, n, -5.0, 5.0);
    const Trajectory traj = simulate_discrete(g, eps, x0, 20);

    const SquareMatrix p = perron_matrix(g, eps);
    std::vector<double> x = x0;
    for (int k = 1; k <= 20; ++k) {
      x = mat_apply(p, x);
      CHECK(kernels::max_abs_diff(traj.states[k], x) <= 1e-12);
    }
  }
}

TEST_CASE("one discrete step is an Euler step: RK4 gap scales as dt^2") {
  const Digraph g = tu::make(4, {{0, 1, 1.0}, {1, 2, 0.8}, {2, 0, 1.2}, {2, 3, 0.5}, {3, 1, 1.0}});
  const std::vector<double> x0{4.0, -1.0, 0.5, 2.0};
  auto gap = [&](double dt) {
    const auto euler = simulate_discrete(g, dt, x0, 1).states.back();
    const auto rk4 = simulate_continuous(g, x0, dt, dt, 1).states.back();
    return kernels::max_abs_diff(euler, rk4);
  };
  const double ratio = gap(1e-2) / gap(1e-3);
  CHECK(ratio > 50.0);
  CHECK(ratio < 200.0);  // O(dt^2): ~100x between dt = 1e-2 and 1e-3
}

TEST_CASE("perron property record") {
  const Digraph g = tu::two_cycle();
  const PerronProperties half = perron_properties(g, 0.5);
  CHECK(half.nonnegative);
  CHECK(half.row_stochastic);
  CHECK(half.positive_diagonal);
  CHECK(half.within_threshold);

  const PerronProperties one = perron_properties(g, 1.0);
  CHECK(one.nonnegative);
  CHECK(one.row_stochastic);
  CHECK_FALSE(one.positive_diagonal);
  CHECK(one.within_threshold);

  const PerronProperties two = perron_properties(g, 2.0);
  CHECK_FALSE(two.nonnegative);
  CHECK_FALSE(two.within_threshold);
  CHECK(two.row_stochastic);  // row sums stay 1 regardless of eps

  const PerronProperties empty = perron_properties(tu::empty(3), 123.0);
  CHECK(empty.within_threshold);
  CHECK(empty.positive_diagonal);
}

TEST_CASE("Cesaro limit examples") {
  // Swap matrix: averages of I and the swap alternate; even m is exact.
  const LongRunResult even = cesaro_limit(tu::two_cycle(), 1.0, 1000);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(even.matrix(i, j) == doctest::Approx(0.5).epsilon(1e-15));

  const LongRunResult id = cesaro_limit(tu::empty(3), 0.4, 100);
  CHECK(kernels::max_abs_diff(id.matrix, SquareMatrix::identity(3)) == 0.0);
  CHECK(id.residual == 0.0);

  const LongRunResult path = cesaro_limit(tu::path(3), 0.5, 10000);
  const SquareMatrix jbar = maximal_forest_matrix(tu::path(3)).j_matrix;
  CHECK(kernels::max_abs_diff(path.matrix, jbar) <= 1e-2);

  CHECK_THROWS_AS(cesaro_limit(tu::two_cycle(), 1.5, 100), Error);
  CHECK_THROWS_AS(cesaro_limit(tu::two_cycle(), 0.5, 1), Error);
}

TEST_CASE("power limit examples") {
  const SquareMatrix id = power_limit(tu::empty(3), 0.4, 10, 1e-12);
  CHECK(kernels::max_abs_diff(id, SquareMatrix::identity(3)) == 0.0);

  const SquareMatrix half = power_limit(tu::two_cycle(), 0.5, 10, 1e-12);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(half(i, j) == doctest::Approx(0.5).epsilon(1e-14));

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const Digraph g = random_digraph(rng, 5, 0.6, 0.2, 2.0);
    const double delta = max_out_degree(g);
    if (delta == 0.0) continue;
    const SquareMatrix pl = power_limit(g, 1.0 / (2.0 * delta), 64, 1e-11);
    CHECK(kernels::max_abs_diff(pl, maximal_forest_matrix(g).j_matrix) <= 1e-8);
  }

  CHECK_THROWS_AS(power_limit(tu::two_cycle(), 1.0, 10, 1e-12), Error);  // needs eps < 1/Delta
}

TEST_CASE("stochastic updates stay inside the initial hull") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const Digraph g = random_digraph(rng, n, 0.5, 0.2, 2.0);
    const double delta = max_out_degree(g);
    const double eps = delta > 0.0 ? 1.0 / delta : 1.0;
    const std::vector<double> x0 = random_vector(rng, n, -10.0, 10.0);
    const auto [lo_it, hi_it] = std::minmax_element(x0.begin(), x0.end());
    const double lo = *lo_it, hi = *hi_it;
    const Trajectory traj = simulate_discrete(g, eps, x0, 200);
    for (const auto& state : traj.states)
      for (double v : state) {
        CHECK(v >= lo - 1e-12);
        CHECK(v <= hi + 1e-12);
      }
  }
}

TEST_CASE("the forest-matrix image is a fixed point of both flows") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const Digraph g = random_digraph(rng, n, 0.5, 0.2, 2.0);
    const SquareMatrix jbar = maximal_forest_matrix(g).j_matrix;
    const std::vector<double> fixed = mat_apply(jbar, random_vector(rng, n, -10.0, 10.0));

    const Trajectory cont = simulate_continuous(g, fixed, 5.0, 0.01, 100);
    CHECK(kernels::max_abs_diff(cont.states.back(), fixed) <= 1e-9);

    const double delta = max_out_degree(g);
    const Trajectory disc = simulate_discrete(g, delta > 0 ? 1.0 / (2.0 * delta) : 0.5, fixed, 500);
    CHECK(kernels::max_abs_diff(disc.states.back(), fixed) <= 1e-9);
  }
}

TEST_CASE("trajectory CSV export") {
  const Trajectory t = simulate_discrete(tu::two_cycle(), 0.5, std::vector<double>{0.0, 2.0}, 2);
  std::ostringstream out;
  write_trajectory_csv(t, out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "t,x0,x1");
  std::getline(in, line);
  CHECK(line == "0,0,2");
  std::getline(in, line);
  CHECK(line == "1,1,1");
}
