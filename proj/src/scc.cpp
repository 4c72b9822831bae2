#include "lapcon/scc.hpp"

#include <algorithm>
#include <set>

namespace lapcon {

int SccDecomposition::sink_count() const {
  int k = 0;
  for (bool s : sink_flags) k += s ? 1 : 0;
  return k;
}

namespace {

// Iterative Tarjan. Emits components in reverse topological order of the
// condensation; ids are renumbered afterwards by smallest contained node.
std::vector<int> tarjan_components(const Digraph& g, int& num_components) {
  const int n = g.order();
  constexpr int kUnvisited = -1;
  std::vector<int> index(n, kUnvisited), lowlink(n, 0), component(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  int next_index = 0;
  num_components = 0;

  struct Frame {
    int node;
    int arc_pos;  // position within out_arcs(node)
  };
  std::vector<Frame> call_stack;

  for (int start = 0; start < n; ++start) {
    if (index[start] != kUnvisited) continue;
    call_stack.push_back({start, 0});
    index[start] = lowlink[start] = next_index++;
    stack.push_back(start);
    on_stack[start] = true;

    while (!call_stack.empty()) {
      Frame& f = call_stack.back();
      const auto arcs = g.out_arcs(f.node);
      if (f.arc_pos < static_cast<int>(arcs.size())) {
        const int w = arcs[f.arc_pos++].target;
        if (index[w] == kUnvisited) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call_stack.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[f.node] = std::min(lowlink[f.node], index[w]);
        }
      } else {
        const int v = f.node;
        if (lowlink[v] == index[v]) {
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            component[w] = num_components;
          } while (w != v);
          ++num_components;
        }
        call_stack.pop_back();
        if (!call_stack.empty())
          lowlink[call_stack.back().node] = std::min(lowlink[call_stack.back().node], lowlink[v]);
      }
    }
  }
  return component;
}

}  // namespace

SccDecomposition scc_decompose(const Digraph& g) {
  const int n = g.order();
  int c = 0;
  std::vector<int> raw = tarjan_components(g, c);

  // Renumber by ascending smallest node for a deterministic decomposition.
  std::vector<int> remap(c, -1);
  int next_id = 0;
  for (int v = 0; v < n; ++v)
    if (remap[raw[v]] < 0) remap[raw[v]] = next_id++;

  SccDecomposition scc;
  scc.component_of.resize(n);
  scc.components.resize(c);
  for (int v = 0; v < n; ++v) {
    scc.component_of[v] = remap[raw[v]];
    scc.components[scc.component_of[v]].push_back(v);
  }

  std::set<std::pair<int, int>> cond;
  for (const Arc& a : g.arcs()) {
    const int cu = scc.component_of[a.source];
    const int cv = scc.component_of[a.target];
    if (cu != cv) cond.insert({cu, cv});
  }
  scc.condensation_arcs.assign(cond.begin(), cond.end());
  scc.sink_flags.assign(c, true);
  for (const auto& [cu, cv] : scc.condensation_arcs) scc.sink_flags[cu] = false;
  return scc;
}

int in_forest_dimension(const Digraph& g) { return scc_decompose(g).sink_count(); }

bool has_spanning_converging_tree(const Digraph& g) { return in_forest_dimension(g) == 1; }

RankReport rank_report(const Digraph& g) {
  const SccDecomposition scc = scc_decompose(g);
  RankReport r;
  r.n = g.order();
  r.c = scc.count();
  r.num_sink_sccs = scc.sink_count();
  r.d = r.num_sink_sccs;
  r.rank_corrected = r.n - r.d;
  r.rank_lemma2_original = r.n - r.c;
  r.lemma2_formula_valid = (r.d == r.c);
  r.sccs_pairwise_disconnected = scc.condensation_arcs.empty();
  return r;
}

}  // namespace lapcon
