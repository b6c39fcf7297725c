#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "locdom/graph.hpp"

namespace locdom {

// Isomorphism certificate for graphs with at most 11 vertices: the smallest
// upper-triangle adjacency word over all vertex orders compatible with the
// equitable refinement of the degree partition.
struct CanonicalForm {
  std::size_t n = 0;
  std::uint64_t code = 0;
  auto operator<=>(const CanonicalForm&) const = default;
};

inline constexpr std::size_t max_canonical_order = 11;

namespace detail {

inline std::vector<std::vector<Vertex>> equitable_cells(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> cell_of(n, 0);
  std::size_t cell_count = n == 0 ? 0 : 1;
  for (;;) {
    // Signature: current cell, then neighbour counts per cell.
    std::vector<std::pair<std::vector<std::size_t>, Vertex>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      std::vector<std::size_t> s(cell_count + 1, 0);
      s[0] = cell_of[v];
      for (Vertex w : g.neighbors(v)) ++s[cell_of[w] + 1];
      sig[v] = {std::move(s), v};
    }
    std::sort(sig.begin(), sig.end());
    std::vector<std::size_t> next(n, 0);
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && sig[i].first != sig[i - 1].first) ++count;
      next[sig[i].second] = count;
    }
    if (n > 0) ++count;
    cell_of = std::move(next);
    if (count == cell_count) break;
    cell_count = count;
  }
  std::vector<std::vector<Vertex>> cells(cell_count);
  for (Vertex v = 0; v < n; ++v) cells[cell_of[v]].push_back(v);
  return cells;
}

inline std::uint64_t order_code(const Graph& g, const std::vector<Vertex>& order) {
  std::uint64_t code = 0;
  std::size_t bit = 0;
  for (std::size_t j = 1; j < order.size(); ++j)
    for (std::size_t i = 0; i < j; ++i, ++bit)
      if (g.adjacent(order[i], order[j])) code |= std::uint64_t{1} << bit;
  return code;
}

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > max_canonical_order) throw GraphError("canonical_form supports at most 11 vertices");
  auto cells = detail::equitable_cells(g);
  CanonicalForm best{g.order(), ~std::uint64_t{0}};
  if (g.order() < 2) return {g.order(), 0};
  std::vector<Vertex> order;
  order.reserve(g.order());
  for (;;) {
    order.clear();
    for (const auto& c : cells) order.insert(order.end(), c.begin(), c.end());
    best.code = std::min(best.code, detail::order_code(g, order));
    std::size_t c = cells.size();
    while (c > 0 && !std::next_permutation(cells[c - 1].begin(), cells[c - 1].end())) --c;
    if (c == 0) break;
  }
  return best;
}

inline bool isomorphic(const Graph& a, const Graph& b) { return canonical_form(a) == canonical_form(b); }

// One representative per isomorphism class on n vertices, ordered by certificate.
inline std::vector<Graph> all_graphs(std::size_t n) {
  if (n > 9) throw GraphError("all_graphs: exhaustive generation is limited to n <= 9");
  std::vector<Graph> layer{Graph(0)};
  for (std::size_t order = 1; order <= n; ++order) {
    std::map<CanonicalForm, Graph> seen;
    for (const Graph& h : layer) {
      const VertexSet old = h.vertices();
      for (std::uint64_t bits = 0; bits <= old.bits(); ++bits) {
        const VertexSet attach = VertexSet::from_bits(bits);
        if (!attach.is_subset_of(old)) continue;
        std::vector<VertexSet> rows = h.rows();
        for (Vertex v : attach) rows[v].insert(order - 1);
        rows.push_back(attach);
        Graph g = Graph::from_rows(std::move(rows));
        seen.try_emplace(canonical_form(g), std::move(g));
      }
    }
    layer.clear();
    for (auto& [form, g] : seen) layer.push_back(std::move(g));
  }
  return layer;
}

inline std::vector<Graph> connected_graphs(std::size_t n) {
  std::vector<Graph> out;
  for (Graph& g : all_graphs(n))
    if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

// A connected bipartite graph with U = {0..r-1} and W-vertex r+i adjacent to
// the members of w_traces[i].
struct BipartiteInstance {
  std::size_t r = 0;
  std::size_t s = 0;
  std::vector<VertexSet> w_traces;
  Graph graph;
};

namespace detail {

// Sorted multiset of traces, minimised over all relabellings of the side they live on.
inline std::vector<std::uint64_t> trace_multiset_key(const std::vector<VertexSet>& traces, std::size_t side) {
  std::vector<Vertex> perm(side);
  for (std::size_t i = 0; i < side; ++i) perm[i] = i;
  std::vector<std::uint64_t> best;
  do {
    std::vector<std::uint64_t> key;
    key.reserve(traces.size());
    for (VertexSet t : traces) {
      std::uint64_t mapped = 0;
      for (Vertex v : t) mapped |= std::uint64_t{1} << perm[v];
      key.push_back(mapped);
    }
    std::sort(key.begin(), key.end());
    if (best.empty() || key < best) best = std::move(key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace detail

// Every connected bipartite graph on at most max_n vertices, once per
// isomorphism class. A bipartite graph with sides U, W is fixed by the
// multiset of W-traces (nonempty subsets of U, as W is stable), so classes are
// enumerated as trace multisets modulo permutations of U, and of W when r = s.
// Ordered by (n, r, key).
inline std::vector<BipartiteInstance> bipartite_census_graphs(std::size_t max_n) {
  if (max_n > 10) throw GraphError("bipartite census is limited to n <= 10");
  std::vector<BipartiteInstance> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (std::size_t r = 0; 2 * r <= n; ++r) {
      const std::size_t s = n - r;
      if (r == 0) {
        if (n == 1) out.push_back({0, 1, {VertexSet{}}, Graph(1)});
        continue;
      }
      const std::size_t kinds = (std::size_t{1} << r) - 1;
      std::map<std::vector<std::uint64_t>, BipartiteInstance> seen;
      std::vector<std::size_t> pick(s, 0);  // nondecreasing indices into 1..kinds
      for (;;) {
        std::vector<VertexSet> traces;
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < s; ++i) {
          traces.push_back(VertexSet::from_bits(pick[i] + 1));
          for (Vertex u : traces.back()) edges.push_back({u, r + i});
        }
        Graph g = build_graph(n, edges);
        if (is_connected(g)) {
          auto key = detail::trace_multiset_key(traces, r);
          if (r == s) {
            std::vector<VertexSet> other(r);
            for (std::size_t i = 0; i < s; ++i)
              for (Vertex u : traces[i]) other[u].insert(i);
            key = std::min(key, detail::trace_multiset_key(other, s));
          }
          seen.try_emplace(std::move(key), BipartiteInstance{r, s, traces, std::move(g)});
        }
        std::size_t i = s;
        while (i > 0 && pick[i - 1] + 1 == kinds) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < s; ++j) pick[j] = pick[i - 1];
      }
      for (auto& [key, inst] : seen) out.push_back(std::move(inst));
    }
  }
  return out;
}

}  // namespace locdom
