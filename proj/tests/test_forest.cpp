#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "lapcon/errors.hpp"
#include "lapcon/forest.hpp"
#include "lapcon/kernels.hpp"
#include "lapcon/random.hpp"
#include "lapcon/scc.hpp"
#include "lapcon/verify.hpp"
#include "test_util.hpp"

using namespace lapcon;
namespace tu = lapcon::testutil;

namespace {

// Independent oracle: every subset of the arc set, checked with a generic
// white/gray/black DFS rather than the out-arc chain walk the implementation
// uses. Exponential in the arc count; keep graphs small.
std::vector<InForest> subset_oracle(const Digraph& g, int num_trees) {
  const auto& arcs = g.arcs();
  const int m = static_cast<int>(arcs.size());
  REQUIRE(m <= 20);
  std::vector<InForest> found;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> out_deg(g.order(), 0);
    std::vector<std::vector<int>> adj(g.order());
    bool ok = true;
    for (int k = 0; k < m && ok; ++k) {
      if (!(mask >> k & 1)) continue;
      if (++out_deg[arcs[k].source] > 1) ok = false;
      adj[arcs[k].source].push_back(arcs[k].target);
    }
    if (!ok) continue;

    std::vector<int> color(g.order(), 0);
    std::function<bool(int)> cyclic = [&](int v) {
      color[v] = 1;
      for (int w : adj[v]) {
        if (color[w] == 1) return true;
        if (color[w] == 0 && cyclic(w)) return true;
      }
      color[v] = 2;
      return false;
    };
    for (int v = 0; v < g.order() && ok; ++v)
      if (color[v] == 0 && cyclic(v)) ok = false;
    if (!ok) continue;

    InForest f;
    for (int k = 0; k < m; ++k)
      if (mask >> k & 1) {
        f.arc_indices.push_back(k);
        f.weight *= arcs[k].weight;
      }
    for (int v = 0; v < g.order(); ++v)
      if (out_deg[v] == 0) f.roots.push_back(v);
    if (static_cast<int>(f.roots.size()) == num_trees) found.push_back(std::move(f));
  }
  std::sort(found.begin(), found.end(),
            [](const InForest& a, const InForest& b) { return a.arc_indices < b.arc_indices; });
  return found;
}

void check_forest_invariants(const Digraph& g, const InForest& f) {
  std::vector<int> out_deg(g.order(), 0);
  for (int k : f.arc_indices) ++out_deg[g.arcs()[k].source];
  for (int v = 0; v < g.order(); ++v) {
    CHECK(out_deg[v] <= 1);
    CHECK((out_deg[v] == 0) == std::binary_search(f.roots.begin(), f.roots.end(), v));
  }
  CHECK(f.arc_indices.size() + f.roots.size() == static_cast<std::size_t>(g.order()));
}

}  // namespace

TEST_CASE("2-cycle has two spanning trees") {
  const auto forests = enumerate_in_forests(tu::two_cycle(), 1);
  REQUIRE(forests.size() == 2);
  CHECK(forests[0].arc_indices == std::vector<int>{0});  // arc 0->1, root 1
  CHECK(forests[0].roots == std::vector<int>{1});
  CHECK(forests[1].roots == std::vector<int>{0});
  CHECK(forests[0].weight == 1.0);
  CHECK(forests == subset_oracle(tu::two_cycle(), 1));
}

TEST_CASE("empty graph has only the empty forest") {
  const auto forests = enumerate_in_forests(tu::empty(2), 2);
  REQUIRE(forests.size() == 1);
  CHECK(forests[0].arc_indices.empty());
  CHECK(forests[0].roots == std::vector<int>{0, 1});
  CHECK(forests[0].weight == 1.0);  // empty product
}

TEST_CASE("path graph has a unique spanning tree") {
  const auto forests = enumerate_in_forests(tu::path(3), 1);
  REQUIRE(forests.size() == 1);
  CHECK(forests[0].arc_indices == std::vector<int>{0, 1});
  CHECK(forests[0].roots == std::vector<int>{2});
  CHECK(forests == subset_oracle(tu::path(3), 1));
}

TEST_CASE("enumeration matches the subset oracle on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const Digraph g = random_digraph(rng, n, 0.5, 0.2, 2.0);
    if (g.arcs().size() > 12) continue;
    for (int trees = 1; trees <= n; ++trees) {
      const auto got = enumerate_in_forests(g, trees);
      CHECK(got == subset_oracle(g, trees));
      for (const InForest& f : got) check_forest_invariants(g, f);
    }
  }
}

TEST_CASE("enumeration rejects out-of-range inputs") {
  CHECK_THROWS_AS(enumerate_in_forests(tu::path(3), 0), Error);
  CHECK_THROWS_AS(enumerate_in_forests(tu::path(3), 4), Error);
  CHECK_THROWS_AS(maximal_forest_matrix(tu::path(3), 2), Error);  // cap below n
}

TEST_CASE("forest matrix examples") {
  const ForestSummary cyc = maximal_forest_matrix(tu::two_cycle());
  CHECK(cyc.d == 1);
  CHECK(cyc.forest_count == 2);
  CHECK(cyc.total_weight == 2.0);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(cyc.j_matrix(i, j) == doctest::Approx(0.5).epsilon(1e-15));

  const ForestSummary id = maximal_forest_matrix(tu::empty(3));
  CHECK(id.d == 3);
  CHECK(id.j_matrix == SquareMatrix::identity(3));

  const ForestSummary path = maximal_forest_matrix(tu::path(3));
  CHECK(path.d == 1);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(path.j_matrix(i, j) == (j == 2 ? 1.0 : 0.0));
}

TEST_CASE("forest matrix properties over all n=3 digraphs") {
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const Digraph g = graph_from_mask(3, mask);
    const ForestSummary fs = maximal_forest_matrix(g);

    CHECK(fs.d == in_forest_dimension(g));  // Prop 6/11 cross-check
    CHECK(fs.total_weight > 0.0);
    // d is the smallest tree count with a nonempty enumeration.
    for (int trees = 1; trees < fs.d; ++trees) CHECK(enumerate_in_forests(g, trees).empty());
    CHECK(enumerate_in_forests(g, fs.d).size() == fs.forest_count);

    const SquareMatrix l = laplacian(g);
    double worst_row = 0.0;
    for (int i = 0; i < 3; ++i) {
      double sum = 0.0;
      for (int j = 0; j < 3; ++j) {
        CHECK(fs.j_matrix(i, j) >= 0.0);
        CHECK(fs.j_matrix(i, j) <= 1.0);
        sum += fs.j_matrix(i, j);
      }
      worst_row = std::max(worst_row, std::abs(sum - 1.0));
    }
    CHECK(worst_row <= 1e-12);

    CHECK(kernels::max_abs_diff(kernels::matmul(fs.j_matrix, fs.j_matrix), fs.j_matrix) <= 1e-9);
    CHECK(kernels::max_abs(kernels::matmul(l, fs.j_matrix)) <= 1e-9);
    CHECK(kernels::max_abs(kernels::matmul(fs.j_matrix, l)) <= 1e-9);
  }
}

TEST_CASE("positive entries are exactly combinatorial root membership") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const Digraph g = random_digraph(rng, n, 0.6, 0.2, 2.0);
    const ForestSummary fs = maximal_forest_matrix(g);
    const auto maximal = enumerate_in_forests(g, fs.d);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        bool member = false;
        for (const InForest& f : maximal) {
          // Root of i's chain within the forest's arc subset.
          int v = i;
          for (bool moved = true; moved;) {
            moved = false;
            for (int k : f.arc_indices)
              if (g.arcs()[k].source == v) {
                v = g.arcs()[k].target;
                moved = true;
                break;
              }
          }
          member = member || v == j;
        }
        CHECK((fs.j_matrix(i, j) > 0.0) == member);
      }
  }
}

TEST_CASE("uniform weight scaling leaves the forest matrix unchanged") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const Digraph g = random_digraph(rng, n, 0.5, 0.2, 2.0);
    std::vector<Arc> scaled = g.arcs();
    for (Arc& a : scaled) a.weight *= 3.7;
    const Digraph g2 = Digraph::build(n, std::move(scaled));
    CHECK(kernels::max_abs_diff(maximal_forest_matrix(g).j_matrix,
                                maximal_forest_matrix(g2).j_matrix) <= 1e-12);
  }
}

TEST_CASE("parallel scan agrees with the serial reference") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 4);
    const Digraph g = random_digraph(rng, n, 0.5, 0.2, 2.0);
    const ForestSummary a = maximal_forest_matrix_serial(g);
    const ForestSummary b = maximal_forest_matrix(g);
    CHECK(a.d == b.d);
    CHECK(a.forest_count == b.forest_count);
    CHECK(a.total_weight == doctest::Approx(b.total_weight).epsilon(1e-12));
    CHECK(kernels::max_abs_diff(a.j_matrix, b.j_matrix) <= 1e-12);
  }
}
