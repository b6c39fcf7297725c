#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "locdom/vertex_set.hpp"

namespace locdom {

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  auto operator<=>(const Edge&) const = default;
};

// Undirected simple graph on vertices 0..n-1 with n <= 64.
// Row i of the adjacency is N(i); rows are symmetric and irreflexive.
class Graph {
 public:
  static constexpr std::size_t max_order = VertexSet::capacity;

  Graph() = default;

  explicit Graph(std::size_t n) : adj_(n) {
    if (n > max_order)
      throw GraphError("graph order " + std::to_string(n) + " exceeds the supported maximum of " +
                       std::to_string(max_order));
  }

  // Adopts adjacency rows after checking the graph invariants.
  static Graph from_rows(std::vector<VertexSet> rows) {
    Graph g(rows.size());
    const VertexSet all = VertexSet::prefix(rows.size());
    for (Vertex i = 0; i < rows.size(); ++i) {
      if (!rows[i].is_subset_of(all))
        throw GraphError("row " + std::to_string(i) + " references a vertex outside 0.." +
                         std::to_string(rows.size() - 1));
      if (rows[i].contains(i)) throw GraphError("self-loop at vertex " + std::to_string(i));
      for (Vertex j : rows[i])
        if (!rows[j].contains(i))
          throw GraphError("asymmetric adjacency between " + std::to_string(i) + " and " + std::to_string(j));
    }
    g.adj_ = std::move(rows);
    return g;
  }

  std::size_t order() const noexcept { return adj_.size(); }
  VertexSet vertices() const noexcept { return VertexSet::prefix(order()); }

  VertexSet neighbors(Vertex v) const { return adj_.at(v); }
  VertexSet closed_neighbors(Vertex v) const { return adj_.at(v).with(v); }
  // N(v) ∩ s
  VertexSet trace(Vertex v, VertexSet s) const { return adj_.at(v) & s; }
  bool adjacent(Vertex u, Vertex v) const { return adj_.at(u).contains(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  const std::vector<VertexSet>& rows() const noexcept { return adj_; }

  std::size_t size() const noexcept {
    std::size_t twice = 0;
    for (VertexSet row : adj_) twice += row.size();
    return twice / 2;
  }

  // Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.push_back({u, v});
    return out;
  }

  std::vector<std::size_t> degree_sequence() const {
    std::vector<std::size_t> out;
    out.reserve(order());
    for (VertexSet row : adj_) out.push_back(row.size());
    return out;
  }

  bool operator==(const Graph&) const = default;

 private:
  std::vector<VertexSet> adj_;
};

inline Graph build_graph(std::size_t n, const std::vector<Edge>& edges) {
  if (n > Graph::max_order)
    throw GraphError("graph order " + std::to_string(n) + " exceeds the supported maximum of " +
                     std::to_string(Graph::max_order));
  std::vector<VertexSet> rows(n);
  for (const Edge& e : edges) {
    const std::string pair = "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
    if (e.u >= n || e.v >= n)
      throw GraphError("edge " + pair + " has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
    if (e.u == e.v) throw GraphError("edge " + pair + " is a self-loop");
    rows[e.u].insert(e.v);
    rows[e.v].insert(e.u);
  }
  return Graph::from_rows(std::move(rows));
}

inline Graph complement(const Graph& g) {
  const VertexSet all = g.vertices();
  std::vector<VertexSet> rows(g.order());
  for (Vertex v = 0; v < g.order(); ++v) rows[v] = (all - g.neighbors(v)).without(v);
  return Graph::from_rows(std::move(rows));
}

// Drops v from s and renumbers the members above v one step down.
inline VertexSet squeeze_out(VertexSet s, Vertex v) {
  const std::uint64_t low = s.bits() & VertexSet::prefix(v).bits();
  const std::uint64_t high = (s.without(v).bits() >> 1) & ~VertexSet::prefix(v).bits();
  return VertexSet::from_bits(low | high);
}

// G - v, with the vertices above v shifted down by one.
inline Graph remove_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) throw GraphError("vertex " + std::to_string(v) + " out of range");
  std::vector<VertexSet> rows;
  rows.reserve(g.order() - 1);
  for (Vertex x = 0; x < g.order(); ++x)
    if (x != v) rows.push_back(squeeze_out(g.neighbors(x), v));
  return Graph::from_rows(std::move(rows));
}

// Vertex x of g becomes perm[x] in the result.
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw GraphError("permutation length does not match graph order");
  std::vector<VertexSet> rows(g.order());
  for (Vertex x = 0; x < g.order(); ++x)
    for (Vertex y : g.neighbors(x)) rows[perm[x]].insert(perm[y]);
  return Graph::from_rows(std::move(rows));
}

inline Graph induced_subgraph(const Graph& g, VertexSet keep) {
  std::vector<Vertex> old_of_new = keep.to_vector();
  std::vector<Vertex> new_of_old(g.order(), 0);
  for (Vertex i = 0; i < old_of_new.size(); ++i) new_of_old[old_of_new[i]] = i;
  std::vector<VertexSet> rows(old_of_new.size());
  for (Vertex i = 0; i < old_of_new.size(); ++i)
    for (Vertex y : g.neighbors(old_of_new[i]) & keep) rows[i].insert(new_of_old[y]);
  return Graph::from_rows(std::move(rows));
}

// Maximal connected pieces, ordered by smallest member.
inline std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    VertexSet comp = VertexSet::singleton(unseen.first());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= g.neighbors(v);
      frontier = next - comp;
      comp |= frontier;
    }
    out.push_back(comp);
    unseen -= comp;
  }
  return out;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1 && g.order() > 0; }

// Component count of the graph with vertex set `vertices` and the given edges;
// vertices untouched by any edge count as singleton components.
inline std::size_t component_count(VertexSet vertices, std::span<const Edge> edges) {
  std::vector<Vertex> parent(VertexSet::capacity);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t count = vertices.size();
  for (const Edge& e : edges) {
    const Vertex a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --count;
    }
  }
  return count;
}

// The two stable sides of a connected bipartite graph, with r = |u| <= s = |w|.
struct Bipartition {
  VertexSet u;
  VertexSet w;
  std::size_t r = 0;
  std::size_t s = 0;
  bool operator==(const Bipartition&) const = default;
};

// Sides of a proper 2-colouring of each component, or nullopt on an odd cycle.
// side[v] is 0 or 1; the smallest vertex of each component gets 0.
inline std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (VertexSet comp : connected_components(g)) {
    const Vertex root = comp.first();
    side[root] = 0;
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x)) {
        if (side[y] < 0) {
          side[y] = 1 - side[x];
          stack.push_back(y);
        } else if (side[y] == side[x]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

// Throws GraphError for a disconnected graph; returns nullopt if an odd cycle exists.
// Ties r = s put vertex 0 in u.
inline std::optional<Bipartition> bipartition(const Graph& g) {
  if (!is_connected(g)) throw GraphError("bipartition requires a connected graph");
  auto side = two_coloring(g);
  if (!side) return std::nullopt;
  Bipartition bp;
  for (Vertex v = 0; v < g.order(); ++v) ((*side)[v] == 0 ? bp.u : bp.w).insert(v);
  if (bp.u.size() > bp.w.size()) std::swap(bp.u, bp.w);
  bp.r = bp.u.size();
  bp.s = bp.w.size();
  return bp;
}

inline bool is_valid_bipartition(const Graph& g, const Bipartition& bp) {
  if (bp.u.intersects(bp.w) || (bp.u | bp.w) != g.vertices()) return false;
  if (bp.r != bp.u.size() || bp.s != bp.w.size() || bp.r > bp.s) return false;
  for (Vertex x : bp.u)
    if (g.neighbors(x).intersects(bp.u)) return false;
  for (Vertex x : bp.w)
    if (g.neighbors(x).intersects(bp.w)) return false;
  return true;
}

enum class TwinKind { open, closed };

struct TwinPair {
  Vertex u = 0;
  Vertex v = 0;
  TwinKind kind = TwinKind::open;
  bool operator==(const TwinPair&) const = default;
};

// Unordered pairs inside `restrict` with N(u) = N(v) (open) or N[u] = N[v] (closed),
// sorted by (u, v). The two kinds are exclusive: open twins are non-adjacent, closed ones adjacent.
inline std::vector<TwinPair> twin_pairs(const Graph& g, VertexSet restrict) {
  if (!restrict.is_subset_of(g.vertices())) throw GraphError("twin_pairs: restriction is not a subset of V");
  std::vector<TwinPair> out;
  for (Vertex u : restrict)
    for (Vertex v : restrict) {
      if (v <= u) continue;
      if (g.neighbors(u) == g.neighbors(v))
        out.push_back({u, v, TwinKind::open});
      else if (g.closed_neighbors(u) == g.closed_neighbors(v))
        out.push_back({u, v, TwinKind::closed});
    }
  return out;
}

}  // namespace locdom
