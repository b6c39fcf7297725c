#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "locdom/enumeration.hpp"
#include "oracles.hpp"

using namespace locdom;

TEST_CASE("canonical form is an isomorphism invariant") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 150; ++t) {
    const Graph g = fixture::random_graph(rng, 1 + rng() % 8, 0.45);
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_form(g) == canonical_form(relabel(g, perm)));
    const Graph h = fixture::random_graph(rng, g.order(), 0.45);
    CHECK(isomorphic(g, h) == oracle::isomorphic(oracle::adjacency(g), oracle::adjacency(h)));
  }
  CHECK_THROWS_AS(canonical_form(Graph(12)), GraphError);
}

TEST_CASE("graph counts per order") {
  const std::vector<std::size_t> all{1, 2, 4, 11, 34, 156, 1044};
  const std::vector<std::size_t> connected{1, 1, 2, 6, 21, 112, 853};
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto graphs = all_graphs(n);
    CHECK(graphs.size() == all[n - 1]);
    std::size_t c = 0;
    for (const auto& g : graphs) c += is_connected(g);
    CHECK(c == connected[n - 1]);
  }
}

TEST_CASE("connected bipartite counts per order") {
  const std::vector<std::size_t> expected{1, 1, 1, 3, 5, 17, 44, 182, 730};
  std::vector<std::size_t> got(10, 0);
  for (const auto& inst : bipartite_census_graphs(9)) ++got[inst.graph.order()];
  for (std::size_t n = 1; n <= 9; ++n) CHECK(got[n] == expected[n - 1]);
}

TEST_CASE("census list matches filtering all graphs, up to isomorphism") {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::set<CanonicalForm> from_census, from_filter;
    for (const auto& inst : bipartite_census_graphs(n))
      if (inst.graph.order() == n) {
        CHECK(is_connected(inst.graph));
        CHECK(oracle::bipartite(oracle::adjacency(inst.graph)));
        CHECK(from_census.insert(canonical_form(inst.graph)).second);
      }
    for (const auto& g : all_graphs(n))
      if (is_connected(g) && oracle::bipartite(oracle::adjacency(g))) from_filter.insert(canonical_form(g));
    CHECK(from_census == from_filter);
  }
}

TEST_CASE("census instances are laid out with U first") {
  for (const auto& inst : bipartite_census_graphs(7)) {
    CHECK(inst.r <= inst.s);
    CHECK(inst.w_traces.size() == inst.s);
    for (std::size_t i = 0; i < inst.s; ++i) CHECK(inst.graph.neighbors(inst.r + i) == inst.w_traces[i]);
  }
}
