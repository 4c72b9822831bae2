#include "lapcon/dynamics.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "lapcon/errors.hpp"
#include "lapcon/kernels.hpp"

namespace lapcon {

namespace {

void check_dimension(const Digraph& g, std::span<const double> x0) {
  if (static_cast<int>(x0.size()) != g.order())
    throw Error(Errc::dimension_mismatch, "x0 has " + std::to_string(x0.size()) + " entries, graph has " +
                                              std::to_string(g.order()) + " nodes");
}

// One elementwise consensus update: out_i = x_i + eps * sum_j a_ij (x_j - x_i).
void consensus_step(const Digraph& g, double eps, const std::vector<double>& x,
                    std::vector<double>& out) {
  for (int i = 0; i < g.order(); ++i) {
    double s = 0.0;
    for (const Arc& a : g.out_arcs(i)) s += a.weight * (x[a.target] - x[i]);
    out[i] = x[i] + eps * s;
  }
}

// xdot = -L x without forming L: rate_i = sum_j a_ij (x_j - x_i).
void flow_rate(const Digraph& g, const std::vector<double>& x, std::vector<double>& rate) {
  for (int i = 0; i < g.order(); ++i) {
    double s = 0.0;
    for (const Arc& a : g.out_arcs(i)) s += a.weight * (x[a.target] - x[i]);
    rate[i] = s;
  }
}

double stochastic_threshold(const Digraph& g) {
  const double delta = max_out_degree(g);
  return delta > 0.0 ? 1.0 / delta : std::numeric_limits<double>::infinity();
}

}  // namespace

Trajectory simulate_continuous(const Digraph& g, std::span<const double> x0, double t_end,
                               double dt, int stride) {
  if (!(dt > 0.0) || t_end < 0.0)
    throw Error(Errc::non_positive_step_or_horizon,
                "dt = " + std::to_string(dt) + ", t_end = " + std::to_string(t_end));
  check_dimension(g, x0);
  if (stride < 1) stride = 1;

  const int n = g.order();
  Trajectory traj;
  traj.mode = SimMode::continuous;
  std::vector<double> x(x0.begin(), x0.end());
  std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);

  const long steps = static_cast<long>(std::llround(t_end / dt));
  traj.times.push_back(0.0);
  traj.states.push_back(x);
  for (long step = 1; step <= steps; ++step) {
    flow_rate(g, x, k1);
    for (int i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * dt * k1[i];
    flow_rate(g, tmp, k2);
    for (int i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * dt * k2[i];
    flow_rate(g, tmp, k3);
    for (int i = 0; i < n; ++i) tmp[i] = x[i] + dt * k3[i];
    flow_rate(g, tmp, k4);
    for (int i = 0; i < n; ++i) x[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    if (step % stride == 0 || step == steps) {
      traj.times.push_back(step * dt);
      traj.states.push_back(x);
    }
  }
  return traj;
}

Trajectory simulate_discrete(const Digraph& g, double eps, std::span<const double> x0, long steps,
                             int stride) {
  if (!(eps > 0.0)) throw Error(Errc::non_positive_step_size, "eps = " + std::to_string(eps));
  check_dimension(g, x0);
  if (stride < 1) stride = 1;

  Trajectory traj;
  traj.mode = SimMode::discrete;
  std::vector<double> x(x0.begin(), x0.end());
  std::vector<double> next(g.order());
  traj.times.push_back(0.0);
  traj.states.push_back(x);
  for (long k = 1; k <= steps; ++k) {
    consensus_step(g, eps, x, next);
    x.swap(next);
    if (k % stride == 0 || k == steps) {
      traj.times.push_back(static_cast<double>(k));
      traj.states.push_back(x);
    }
  }
  return traj;
}

PerronProperties perron_properties(const Digraph& g, double eps) {
  const SquareMatrix p = perron_matrix(g, eps);  // validates eps > 0
  const int n = p.dim();
  PerronProperties props;
  props.nonnegative = true;
  props.row_stochastic = true;
  for (int i = 0; i < n; ++i) {
    double row_sum = 0.0;
    for (int j = 0; j < n; ++j) {
      if (p(i, j) < -1e-12) props.nonnegative = false;
      row_sum += p(i, j);
    }
    if (std::abs(row_sum - 1.0) > 1e-12) props.row_stochastic = false;
  }
  const double delta = max_out_degree(g);
  props.within_threshold = delta == 0.0 || eps * delta <= 1.0 + 1e-12;
  props.positive_diagonal = delta == 0.0 || eps * delta < 1.0 - 1e-12;
  return props;
}

LongRunResult cesaro_limit(const Digraph& g, double eps, long m) {
  if (!(eps > 0.0)) throw Error(Errc::non_positive_step_size, "eps = " + std::to_string(eps));
  if (eps > stochastic_threshold(g) * (1.0 + 1e-12))
    throw Error(Errc::step_size_outside_stochastic_range,
                "eps = " + std::to_string(eps) + " > 1/max_out_degree");
  if (m < 2) throw Error(Errc::dimension_mismatch, "m must be >= 2");

  const int n = g.order();
  const SquareMatrix p = perron_matrix(g, eps);
  SquareMatrix power = p;        // P^k
  SquareMatrix sum = p;          // sum of P^1..P^k
  SquareMatrix half_avg(n);      // average at k = m/2
  SquareMatrix scratch(n);
  const long half = m / 2;
  for (long k = 2; k <= m; ++k) {
    kernels::matmul(power, p, scratch);
    power = scratch;
    kernels::add_scaled(sum, power, 1.0);
    if (k == half) {
      half_avg = sum;
      for (std::size_t t = 0; t < half_avg.size(); ++t) half_avg.data()[t] /= half;
    }
  }
  LongRunResult out;
  out.m = m;
  out.matrix = sum;
  for (std::size_t t = 0; t < out.matrix.size(); ++t) out.matrix.data()[t] /= m;
  out.residual = kernels::max_abs_diff(out.matrix, half_avg);
  return out;
}

SquareMatrix power_limit(const Digraph& g, double eps, int k_max, double tol) {
  if (!(eps > 0.0)) throw Error(Errc::non_positive_step_size, "eps = " + std::to_string(eps));
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  const double delta = max_out_degree(g);
  if (delta > 0.0 && eps * delta >= 1.0 - 1e-12)
    throw Error(Errc::step_size_outside_stochastic_range,
                "power limit needs eps strictly below 1/max_out_degree");

  SquareMatrix q = perron_matrix(g, eps);
  SquareMatrix next(q.dim());
  for (int k = 0; k < k_max; ++k) {
    kernels::matmul(q, q, next);
    if (kernels::max_abs_diff(next, q) <= tol) return next;
    q = next;
  }
  throw Error(Errc::no_convergence_within_budget,
              std::to_string(k_max) + " squarings without reaching tol");
}

void write_trajectory_csv(const Trajectory& t, std::ostream& out) {
  const int n = t.states.empty() ? 0 : static_cast<int>(t.states.front().size());
  out << "t";
  for (int i = 0; i < n; ++i) out << ",x" << i;
  out << "\n";
  out.precision(17);
  for (std::size_t k = 0; k < t.times.size(); ++k) {
    out << t.times[k];
    for (double v : t.states[k]) out << "," << v;
    out << "\n";
  }
}

}  // namespace lapcon
