#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lapcon/digraph.hpp"

namespace lapcon {

/// Erdos-style random digraph: each ordered pair gets an arc with probability
/// arc_prob, weight uniform in [w_min, w_max]. Deterministic for a given rng
/// state.
inline Digraph random_digraph(std::mt19937_64& rng, int n, double arc_prob, double w_min,
                              double w_max) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_real_distribution<double> weight(w_min, w_max);
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      double c = coin(rng);
      double w = weight(rng);  // always drawn, keeps the stream position fixed
      if (c < arc_prob) arcs.push_back({i, j, w});
    }
  return Digraph::build(n, std::move(arcs));
}

inline std::vector<double> random_vector(std::mt19937_64& rng, int n, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> x(n);
  for (double& v : x) v = dist(rng);
  return x;
}

}  // namespace lapcon
