#pragma once

#include <utility>
#include <vector>

#include "lapcon/digraph.hpp"

namespace lapcon {

/// Strongly connected components plus the condensation DAG. Component ids
/// are assigned by ascending smallest contained node, so the decomposition
/// is deterministic for a given graph.
struct SccDecomposition {
  std::vector<int> component_of;                     // node -> component id
  std::vector<std::vector<int>> components;          // sorted node lists
  std::vector<std::pair<int, int>> condensation_arcs;  // dedup, sorted, acyclic
  std::vector<bool> sink_flags;  // true iff no outgoing condensation arc

  int count() const { return static_cast<int>(components.size()); }
  int sink_count() const;
};

SccDecomposition scc_decompose(const Digraph& g);

/// In-forest dimension d: the minimum number of trees in a spanning
/// converging forest, computed combinatorially as the sink-SCC count.
int in_forest_dimension(const Digraph& g);

/// True iff d = 1, i.e. some node is reachable from every node.
bool has_spanning_converging_tree(const Digraph& g);

/// rank(L) = n - d, contrasted with the textbook formula n - c that only
/// holds when the condensation has no arcs.
struct RankReport {
  int n = 0;
  int c = 0;               // SCC count
  int num_sink_sccs = 0;
  int d = 0;               // in-forest dimension
  int rank_corrected = 0;  // n - d
  int rank_lemma2_original = 0;  // n - c
  bool lemma2_formula_valid = false;       // d == c
  bool sccs_pairwise_disconnected = false;  // condensation arc set empty
};

RankReport rank_report(const Digraph& g);

}  // namespace lapcon
