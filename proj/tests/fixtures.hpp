#pragma once

#include <random>
#include <vector>

#include "locdom/graph.hpp"

namespace fixture {

inline locdom::Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<locdom::Edge> edges;
  for (locdom::Vertex i = 0; i < n; ++i)
    for (locdom::Vertex j = i + 1; j < n; ++j)
      if (coin(rng)) edges.push_back({i, j});
  return locdom::build_graph(n, edges);
}

inline locdom::Graph from_pairs(std::size_t n, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<locdom::Edge> edges;
  for (auto [a, b] : pairs) edges.push_back({static_cast<locdom::Vertex>(a), static_cast<locdom::Vertex>(b)});
  return locdom::build_graph(n, edges);
}

}  // namespace fixture
