#pragma once

#include <span>
#include <vector>

#include "lapcon/matrix.hpp"

namespace lapcon {

struct Arc {
  int source = 0;
  int target = 0;
  double weight = 1.0;

  bool operator==(const Arc&) const = default;
};

/// Weighted simple digraph on nodes 0..n-1. No self-loops, at most one arc
/// per ordered pair, strictly positive finite weights. Arc (i, j, w) means
/// node i listens to node j: it contributes w to row i of the Laplacian.
/// Immutable after build(); safe to share across threads.
class Digraph {
 public:
  /// Validates and canonicalizes (arcs sorted by source, then target).
  /// Throws Error with codes empty_graph_order, node_out_of_range, self_loop,
  /// non_positive_weight, duplicate_arc.
  static Digraph build(int n, std::vector<Arc> arcs);

  int order() const { return n_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::span<const Arc> out_arcs(int node) const {
    return {arcs_.data() + out_begin_[node],
            static_cast<std::size_t>(out_begin_[node + 1] - out_begin_[node])};
  }
  int out_arc_count(int node) const { return out_begin_[node + 1] - out_begin_[node]; }

  /// Weighted out-degree of one node (row sum of A).
  double out_degree(int node) const { return out_degree_[node]; }

 private:
  Digraph() = default;

  int n_ = 0;
  std::vector<Arc> arcs_;         // sorted by (source, target)
  std::vector<int> out_begin_;    // CSR offsets into arcs_, size n_+1
  std::vector<double> out_degree_;
};

/// L = D - A; every row sums to zero.
SquareMatrix laplacian(const Digraph& g);

/// P = I - eps * L. Throws non_positive_step_size for eps <= 0.
SquareMatrix perron_matrix(const Digraph& g, double eps);

/// Largest weighted out-degree; 0 for the arcless graph.
double max_out_degree(const Digraph& g);

}  // namespace lapcon
