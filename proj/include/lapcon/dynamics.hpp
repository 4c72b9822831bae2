#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "lapcon/digraph.hpp"
#include "lapcon/matrix.hpp"

namespace lapcon {

enum class SimMode { continuous, discrete };

struct Trajectory {
  SimMode mode = SimMode::continuous;
  std::vector<double> times;  // strictly increasing; step indices for discrete
  std::vector<std::vector<double>> states;
};

/// Classical fixed-step RK4 on xdot = -L x. Records x0, every stride-th
/// step, and the final state. Stability guard: dt should stay below
/// 1/(2*max_out_degree).
Trajectory simulate_continuous(const Digraph& g, std::span<const double> x0, double t_end,
                               double dt, int stride = 10);

/// x(k+1) = x(k) + eps * sum_j a_ij (x_j - x_i), computed elementwise;
/// identical to iterating the Perron matrix.
Trajectory simulate_discrete(const Digraph& g, double eps, std::span<const double> x0,
                             long steps, int stride = 1);

struct PerronProperties {
  bool nonnegative = false;
  bool row_stochastic = false;
  bool positive_diagonal = false;  // eps strictly below 1/max_out_degree
  bool within_threshold = false;   // eps <= 1/max_out_degree
};

PerronProperties perron_properties(const Digraph& g, double eps);

struct LongRunResult {
  SquareMatrix matrix;    // (1/m) sum_{k=1..m} P^k
  long m = 0;
  double residual = 0.0;  // max-norm gap between the m and m/2 averages
};

/// Streaming Cesaro average of Perron-matrix powers. Exists for every
/// row-stochastic P, even when plain powers oscillate, and converges to the
/// normalized matrix of maximal in-forests. Requires eps in (0, 1/Delta].
LongRunResult cesaro_limit(const Digraph& g, double eps, long m);

/// Limit of plain powers by repeated squaring; valid only for eps strictly
/// inside (0, 1/Delta), where the positive diagonal makes powers converge.
SquareMatrix power_limit(const Digraph& g, double eps, int k_max, double tol);

/// CSV export: header `t,x0,...,x{n-1}`, full double precision.
void write_trajectory_csv(const Trajectory& t, std::ostream& out);

}  // namespace lapcon
