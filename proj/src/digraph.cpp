#include "lapcon/digraph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lapcon/errors.hpp"

namespace lapcon {

Digraph Digraph::build(int n, std::vector<Arc> arcs) {
  if (n < 1) throw Error(Errc::empty_graph_order, "node count must be >= 1, got " + std::to_string(n));
  for (const Arc& a : arcs) {
    if (a.source < 0 || a.source >= n || a.target < 0 || a.target >= n)
      throw Error(Errc::node_out_of_range, "arc (" + std::to_string(a.source) + ", " +
                                               std::to_string(a.target) + ") on " +
                                               std::to_string(n) + " nodes");
    if (a.source == a.target)
      throw Error(Errc::self_loop, "self-loop at node " + std::to_string(a.source));
    if (!(a.weight > 0.0) || !std::isfinite(a.weight))
      throw Error(Errc::non_positive_weight, "arc (" + std::to_string(a.source) + ", " +
                                                 std::to_string(a.target) + ") has weight " +
                                                 std::to_string(a.weight));
  }
  std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
    return a.source != b.source ? a.source < b.source : a.target < b.target;
  });
  for (std::size_t k = 1; k < arcs.size(); ++k)
    if (arcs[k - 1].source == arcs[k].source && arcs[k - 1].target == arcs[k].target)
      throw Error(Errc::duplicate_arc, "arc (" + std::to_string(arcs[k].source) + ", " +
                                           std::to_string(arcs[k].target) + ") given twice");

  Digraph g;
  g.n_ = n;
  g.arcs_ = std::move(arcs);
  g.out_begin_.assign(n + 1, 0);
  g.out_degree_.assign(n, 0.0);
  for (const Arc& a : g.arcs_) {
    ++g.out_begin_[a.source + 1];
    g.out_degree_[a.source] += a.weight;
  }
  for (int i = 0; i < n; ++i) g.out_begin_[i + 1] += g.out_begin_[i];
  return g;
}

SquareMatrix laplacian(const Digraph& g) {
  SquareMatrix l(g.order());
  for (const Arc& a : g.arcs()) {
    l(a.source, a.source) += a.weight;
    l(a.source, a.target) -= a.weight;
  }
  return l;
}

SquareMatrix perron_matrix(const Digraph& g, double eps) {
  if (!(eps > 0.0))
    throw Error(Errc::non_positive_step_size, "eps = " + std::to_string(eps));
  const int n = g.order();
  SquareMatrix p = SquareMatrix::identity(n);
  for (const Arc& a : g.arcs()) {
    p(a.source, a.source) -= eps * a.weight;
    p(a.source, a.target) += eps * a.weight;
  }
  return p;
}

double max_out_degree(const Digraph& g) {
  double m = 0.0;
  for (int i = 0; i < g.order(); ++i) m = std::max(m, g.out_degree(i));
  return m;
}

}  // namespace lapcon
