#pragma once

#include <cstddef>
#include <vector>

#include "lapcon/digraph.hpp"
#include "lapcon/matrix.hpp"

namespace lapcon {

inline constexpr int kDefaultEnumerationCap = 12;

/// A spanning converging forest: a subset of the graph's arcs with
/// out-degree <= 1 at every node and no directed cycle. Nodes without an
/// outgoing arc in the subset are the roots; the forest has |roots| trees
/// and n - |roots| arcs.
struct InForest {
  std::vector<int> arc_indices;  // indices into g.arcs(), ascending
  std::vector<int> roots;        // ascending
  double weight = 1.0;           // product of arc weights; empty product = 1

  bool operator==(const InForest&) const = default;
};

/// All spanning in-forests with exactly num_trees trees, in lexicographic
/// order of their sorted arc-index lists. Brute force; this is the
/// combinatorial oracle the spectral and dynamics routes are checked against.
/// Throws graph_too_large_for_enumeration past the cap.
std::vector<InForest> enumerate_in_forests(const Digraph& g, int num_trees,
                                           int cap = kDefaultEnumerationCap);

/// Aggregate over the maximal (fewest-trees) in-forests. j_matrix is the
/// normalized matrix of maximal in-forests: entry (i, j) is the weight share
/// of maximal forests in which node i lies in the tree rooted at j. Rows sum
/// to 1; rank equals d; it is the eigenprojector of L at eigenvalue zero.
struct ForestSummary {
  int d = 0;
  double total_weight = 0.0;
  std::size_t forest_count = 0;
  SquareMatrix j_matrix;
};

ForestSummary maximal_forest_matrix(const Digraph& g, int cap = kDefaultEnumerationCap);

/// Serial reference for the OpenMP-partitioned maximal_forest_matrix.
ForestSummary maximal_forest_matrix_serial(const Digraph& g, int cap = kDefaultEnumerationCap);

}  // namespace lapcon
