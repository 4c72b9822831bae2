#include "lapcon/forest.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "lapcon/errors.hpp"

namespace lapcon {

namespace {

// Candidates are per-node choices: digit 0 = no outgoing arc, digit k = the
// k-th out-arc in canonical order. Every spanning in-forest is such a choice
// vector whose chosen arcs are acyclic.
struct CandidateSpace {
  std::vector<int> radix;         // outdeg(i) + 1
  unsigned long long total = 1;
};

constexpr unsigned long long kCandidateBudget = 1ull << 34;

CandidateSpace candidate_space(const Digraph& g, int cap) {
  if (g.order() > cap)
    throw Error(Errc::graph_too_large_for_enumeration,
                "n = " + std::to_string(g.order()) + " exceeds cap " + std::to_string(cap));
  CandidateSpace cs;
  cs.radix.resize(g.order());
  for (int i = 0; i < g.order(); ++i) {
    cs.radix[i] = g.out_arc_count(i) + 1;
    if (cs.total > kCandidateBudget / cs.radix[i])
      throw Error(Errc::graph_too_large_for_enumeration,
                  "candidate space exceeds " + std::to_string(kCandidateBudget));
    cs.total *= cs.radix[i];
  }
  return cs;
}

struct Candidate {
  std::vector<int> succ;     // chosen target per node, -1 for none
  std::vector<int> arc_idx;  // chosen arc index per node, -1 for none
  std::vector<int> root_of;  // root of each node's out-arc chain
  double weight = 1.0;
  int num_roots = 0;
  bool acyclic = false;
};

// Scratch reused across candidates within one worker.
struct Scratch {
  Candidate cand;
  std::vector<int> state;  // 0 unknown, 1 on current walk, 2 resolved
  std::vector<int> path;

  explicit Scratch(int n) : state(n, 0) {
    cand.succ.resize(n);
    cand.arc_idx.resize(n);
    cand.root_of.resize(n);
    path.reserve(n);
  }
};

// Decodes candidate `id`, follows each node's unique out-arc chain to find
// its root, and rejects candidates whose chosen arcs contain a cycle.
void evaluate(const Digraph& g, const CandidateSpace& cs, unsigned long long id, Scratch& s) {
  const int n = g.order();
  Candidate& c = s.cand;
  c.weight = 1.0;
  c.num_roots = 0;
  unsigned long long rem = id;
  for (int i = 0; i < n; ++i) {
    const int digit = static_cast<int>(rem % cs.radix[i]);
    rem /= cs.radix[i];
    if (digit == 0) {
      c.succ[i] = -1;
      c.arc_idx[i] = -1;
      ++c.num_roots;
    } else {
      const auto arcs = g.out_arcs(i);
      const Arc& a = arcs[digit - 1];
      c.succ[i] = a.target;
      c.arc_idx[i] = static_cast<int>(&a - g.arcs().data());
      c.weight *= a.weight;
    }
  }

  std::fill(s.state.begin(), s.state.end(), 0);
  for (int start = 0; start < n; ++start) {
    if (s.state[start] == 2) continue;
    s.path.clear();
    int v = start;
    while (v != -1 && s.state[v] == 0) {
      s.state[v] = 1;
      s.path.push_back(v);
      v = c.succ[v];
    }
    if (v != -1 && s.state[v] == 1) {  // walked into our own path: cycle
      c.acyclic = false;
      return;
    }
    const int root = (v == -1) ? s.path.back() : c.root_of[v];
    for (int u : s.path) {
      s.state[u] = 2;
      c.root_of[u] = root;
    }
  }
  c.acyclic = true;
}

// Unnormalized aggregate over the fewest-root acyclic candidates in a range.
struct Accumulator {
  int best_roots = std::numeric_limits<int>::max();
  double total_weight = 0.0;
  std::size_t count = 0;
  std::vector<double> j;  // n*n row-major, weight-weighted root membership

  explicit Accumulator(int n) : j(static_cast<std::size_t>(n) * n, 0.0) {}

  void reset() {
    total_weight = 0.0;
    count = 0;
    std::fill(j.begin(), j.end(), 0.0);
  }

  void add(const Candidate& c, int n) {
    if (c.num_roots > best_roots) return;
    if (c.num_roots < best_roots) {
      best_roots = c.num_roots;
      reset();
    }
    total_weight += c.weight;
    ++count;
    for (int i = 0; i < n; ++i) j[static_cast<std::size_t>(i) * n + c.root_of[i]] += c.weight;
  }
};

Accumulator scan_range(const Digraph& g, const CandidateSpace& cs, unsigned long long lo,
                       unsigned long long hi) {
  Accumulator acc(g.order());
  Scratch s(g.order());
  for (unsigned long long id = lo; id < hi; ++id) {
    evaluate(g, cs, id, s);
    if (s.cand.acyclic) acc.add(s.cand, g.order());
  }
  return acc;
}

ForestSummary summarize(const Digraph& g, const Accumulator& acc) {
  const int n = g.order();
  ForestSummary out;
  out.d = acc.best_roots;  // the arcless choice is always acyclic, so best_roots <= n
  out.total_weight = acc.total_weight;
  out.forest_count = acc.count;
  out.j_matrix = SquareMatrix(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.j_matrix(i, j) = acc.j[static_cast<std::size_t>(i) * n + j] / acc.total_weight;
  return out;
}

}  // namespace

ForestSummary maximal_forest_matrix_serial(const Digraph& g, int cap) {
  const CandidateSpace cs = candidate_space(g, cap);
  return summarize(g, scan_range(g, cs, 0, cs.total));
}

ForestSummary maximal_forest_matrix(const Digraph& g, int cap) {
  const CandidateSpace cs = candidate_space(g, cap);
  // Fixed chunk grid keeps the merge (and its floating-point order)
  // independent of the worker count.
  const unsigned long long chunks = std::min<unsigned long long>(cs.total, 64);
  if (chunks <= 1) return summarize(g, scan_range(g, cs, 0, cs.total));

  std::vector<Accumulator> parts(chunks, Accumulator(g.order()));
#pragma omp parallel for schedule(dynamic)
  for (long long ci = 0; ci < static_cast<long long>(chunks); ++ci) {
    const unsigned long long lo = cs.total * ci / chunks;
    const unsigned long long hi = cs.total * (ci + 1) / chunks;
    parts[ci] = scan_range(g, cs, lo, hi);
  }

  Accumulator merged(g.order());
  for (const Accumulator& p : parts) merged.best_roots = std::min(merged.best_roots, p.best_roots);
  for (const Accumulator& p : parts) {
    if (p.best_roots != merged.best_roots) continue;
    merged.total_weight += p.total_weight;
    merged.count += p.count;
    for (std::size_t k = 0; k < merged.j.size(); ++k) merged.j[k] += p.j[k];
  }
  return summarize(g, merged);
}

std::vector<InForest> enumerate_in_forests(const Digraph& g, int num_trees, int cap) {
  const int n = g.order();
  if (num_trees < 1 || num_trees > n)
    throw Error(Errc::dimension_mismatch,
                "num_trees = " + std::to_string(num_trees) + " outside [1, " + std::to_string(n) + "]");
  const CandidateSpace cs = candidate_space(g, cap);
  std::vector<InForest> forests;
  Scratch s(n);
  for (unsigned long long id = 0; id < cs.total; ++id) {
    evaluate(g, cs, id, s);
    if (!s.cand.acyclic || s.cand.num_roots != num_trees) continue;
    InForest f;
    f.weight = s.cand.weight;
    for (int i = 0; i < n; ++i) {
      if (s.cand.arc_idx[i] >= 0)
        f.arc_indices.push_back(s.cand.arc_idx[i]);
      else
        f.roots.push_back(i);
    }
    std::sort(f.arc_indices.begin(), f.arc_indices.end());
    forests.push_back(std::move(f));
  }
  std::sort(forests.begin(), forests.end(),
            [](const InForest& a, const InForest& b) { return a.arc_indices < b.arc_indices; });
  return forests;
}

}  // namespace lapcon
