#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <tuple>
#include <span>
#include <string>
#include <vector>

#include "locdom/graph.hpp"
#include "locdom/ld_sets.hpp"

namespace locdom {

// Edge xy of G^S, x < y, labelled by the single vertex of S on which the traces of x and y differ.
struct LabeledEdge {
  Vertex x = 0;
  Vertex y = 0;
  Vertex label = 0;
  auto operator<=>(const LabeledEdge&) const = default;
};

// "[134]" for {1,3,4}; comma separated once any member has two digits.
inline std::string trace_label(VertexSet trace) {
  const bool wide = !trace.empty() && trace.last() >= 10;
  std::string out = "[";
  bool first = true;
  for (Vertex v : trace) {
    if (wide && !first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += ']';
  return out;
}

// The S-associated graph G^S of a distinguishing set S: vertices V \ S, an edge
// labelled u between x and y whenever their traces in S differ exactly in u,
// and level(x) = |N(x) ∩ S|.
class AssociatedGraph {
 public:
  static AssociatedGraph build(const Graph& g, VertexSet s) {
    if (!s.is_subset_of(g.vertices())) throw PreconditionError("build_associated: S is not a subset of V");
    if (auto pair = undistinguished_pair(g, s))
      throw PreconditionError("build_associated: S = " + to_string(s) + " does not distinguish " +
                              std::to_string(pair->u) + " and " + std::to_string(pair->v));
    AssociatedGraph ag;
    ag.base_ = g;
    ag.set_ = s;
    ag.vertices_ = g.vertices() - s;
    ag.traces_.assign(g.order(), VertexSet{});
    for (Vertex x : ag.vertices_) ag.traces_[x] = g.trace(x, s);
    for (Vertex x : ag.vertices_)
      for (Vertex y : ag.vertices_) {
        if (y <= x) continue;
        const VertexSet diff = ag.traces_[x] ^ ag.traces_[y];
        if (diff.size() == 1) ag.edges_.push_back({x, y, diff.first()});
      }
    return ag;
  }

  const Graph& base() const noexcept { return base_; }
  VertexSet set() const noexcept { return set_; }
  std::size_t k() const noexcept { return set_.size(); }
  VertexSet vertices() const noexcept { return vertices_; }
  const std::vector<LabeledEdge>& edges() const noexcept { return edges_; }

  VertexSet trace(Vertex x) const {
    require_vertex(x);
    return traces_[x];
  }
  std::size_t level(Vertex x) const { return trace(x).size(); }

  // Vertices at each level 0..k.
  std::vector<VertexSet> levels() const {
    std::vector<VertexSet> out(k() + 1);
    for (Vertex x : vertices_) out[traces_[x].size()].insert(x);
    return out;
  }

  // The labelled edge between x and y, if present.
  std::optional<LabeledEdge> edge_between(Vertex x, Vertex y) const {
    if (x > y) std::swap(x, y);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), LabeledEdge{x, y, 0},
                               [](const LabeledEdge& a, const LabeledEdge& b) {
                                 return std::tie(a.x, a.y) < std::tie(b.x, b.y);
                               });
    if (it != edges_.end() && it->x == x && it->y == y) return *it;
    return std::nullopt;
  }

  // Neighbours of x in G^S.
  VertexSet neighbors(Vertex x) const {
    require_vertex(x);
    VertexSet out;
    for (const LabeledEdge& e : edges_) {
      if (e.x == x) out.insert(e.y);
      if (e.y == x) out.insert(e.x);
    }
    return out;
  }

 private:
  void require_vertex(Vertex x) const {
    if (!vertices_.contains(x)) throw PreconditionError("vertex " + std::to_string(x) + " is not in G^S");
  }

  Graph base_;
  VertexSet set_;
  VertexSet vertices_;
  std::vector<VertexSet> traces_;
  std::vector<LabeledEdge> edges_;
};

inline AssociatedGraph build_associated(const Graph& g, VertexSet s) { return AssociatedGraph::build(g, s); }

// Number of edges carrying each label u in S (zero counts included).
inline std::map<Vertex, std::size_t> label_multiplicity(const AssociatedGraph& ag) {
  std::map<Vertex, std::size_t> out;
  for (Vertex u : ag.set()) out[u] = 0;
  for (const LabeledEdge& e : ag.edges()) ++out[e.label];
  return out;
}

// A subgraph of G^S spanned by a chosen edge subset. Every vertex of G^S is
// kept; vertices without a chosen edge form singleton components.
class LabelSubgraph {
 public:
  LabelSubgraph(AssociatedGraph parent, VertexSet selected_labels, std::vector<LabeledEdge> edges)
      : parent_(std::move(parent)), selected_(selected_labels), edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    for (const LabeledEdge& e : edges_) incident_.insert(e.x).insert(e.y);
    VertexSet unseen = parent_.vertices();
    while (!unseen.empty()) {
      VertexSet comp = VertexSet::singleton(unseen.first());
      for (bool grew = true; grew;) {
        grew = false;
        for (const LabeledEdge& e : edges_)
          if (comp.contains(e.x) != comp.contains(e.y)) {
            comp.insert(e.x).insert(e.y);
            grew = true;
          }
      }
      components_.push_back(comp);
      unseen -= comp;
    }
  }

  const AssociatedGraph& parent() const noexcept { return parent_; }
  VertexSet selected_labels() const noexcept { return selected_; }
  const std::vector<LabeledEdge>& edges() const noexcept { return edges_; }
  const std::vector<VertexSet>& components() const noexcept { return components_; }
  // Vertices touched by a chosen edge.
  VertexSet incident_vertices() const noexcept { return incident_; }

  std::vector<VertexSet> edge_components() const {
    std::vector<VertexSet> out;
    for (VertexSet c : components_)
      if (c.intersects(incident_)) out.push_back(c);
    return out;
  }

  std::vector<Edge> plain_edges() const {
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (const LabeledEdge& e : edges_) out.push_back({e.x, e.y});
    return out;
  }

 private:
  AssociatedGraph parent_;
  VertexSet selected_;
  std::vector<LabeledEdge> edges_;
  VertexSet incident_;
  std::vector<VertexSet> components_;
};

// H_{S'}: the edges of G^S whose label lies in S'.
inline LabelSubgraph label_subgraph(const AssociatedGraph& ag, VertexSet s_prime) {
  if (s_prime.empty()) throw PreconditionError("label_subgraph: S' must be nonempty");
  if (!s_prime.is_subset_of(ag.set()))
    throw PreconditionError("label_subgraph: S' = " + to_string(s_prime) + " is not a subset of S = " +
                            to_string(ag.set()));
  std::vector<LabeledEdge> kept;
  for (const LabeledEdge& e : ag.edges())
    if (s_prime.contains(e.label)) kept.push_back(e);
  return LabelSubgraph(ag, s_prime, std::move(kept));
}

// Subgraph spanned by an arbitrary set of G^S edges; S' is the set of labels used.
inline LabelSubgraph edge_subgraph(const AssociatedGraph& ag, std::vector<LabeledEdge> edges) {
  VertexSet labels;
  for (const LabeledEdge& e : edges) {
    if (!ag.edge_between(e.x, e.y) || ag.edge_between(e.x, e.y)->label != e.label)
      throw PreconditionError("edge_subgraph: (" + std::to_string(e.x) + "," + std::to_string(e.y) +
                              ") is not an edge of G^S with label " + std::to_string(e.label));
    labels.insert(e.label);
  }
  return LabelSubgraph(ag, labels, std::move(edges));
}

// Within each component all vertices share one trace in S \ S', and it is the
// trace of a lowest-level member restricted to S \ S'.
inline bool component_trace_check(const LabelSubgraph& ls) {
  const AssociatedGraph& ag = ls.parent();
  const VertexSet rest = ag.set() - ls.selected_labels();
  for (VertexSet comp : ls.components()) {
    Vertex lowest = comp.first();
    for (Vertex x : comp)
      if (ag.level(x) < ag.level(lowest)) lowest = x;
    const VertexSet common = ag.trace(lowest) & rest;
    for (Vertex x : comp)
      if ((ag.trace(x) & rest) != common) return false;
  }
  return true;
}

// Every cycle carries each label an even number of times. Checked on the
// fundamental cycles of a BFS forest; label parity is additive over the cycle space.
inline bool parity_audit(const AssociatedGraph& ag) {
  // parity[x]: labels seen an odd number of times on the forest path root -> x.
  std::vector<VertexSet> parity(ag.base().order());
  std::vector<bool> seen(ag.base().order(), false);
  std::vector<std::vector<LabeledEdge>> incident(ag.base().order());
  for (const LabeledEdge& e : ag.edges()) {
    incident[e.x].push_back(e);
    incident[e.y].push_back(e);
  }
  std::vector<LabeledEdge> tree_edges;
  for (Vertex root : ag.vertices()) {
    if (seen[root]) continue;
    seen[root] = true;
    std::vector<Vertex> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      for (const LabeledEdge& e : incident[x]) {
        const Vertex y = e.x == x ? e.y : e.x;
        if (seen[y]) continue;
        seen[y] = true;
        parity[y] = parity[x] ^ VertexSet::singleton(e.label);
        tree_edges.push_back(e);
        queue.push_back(y);
      }
    }
  }
  std::sort(tree_edges.begin(), tree_edges.end());
  for (const LabeledEdge& e : ag.edges()) {
    if (std::binary_search(tree_edges.begin(), tree_edges.end(), e)) continue;
    if (!(parity[e.x] ^ parity[e.y] ^ VertexSet::singleton(e.label)).empty()) return false;
  }
  return true;
}

struct CactusStats {
  std::size_t vertices = 0;  // edge-incident vertices
  std::size_t edges = 0;
  std::size_t cc = 0;
  std::size_t cy = 0;
  long ex = 0;  // |E| - 4 cy
  bool is_cactus = true;
};

namespace detail {

// Blocks of a simple graph given by an edge list, as (vertex count, edge count).
inline std::vector<std::pair<std::size_t, std::size_t>> block_sizes(std::span<const Edge> edges) {
  std::vector<std::vector<std::pair<Vertex, std::size_t>>> adj(VertexSet::capacity);
  VertexSet present;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    adj[edges[i].u].emplace_back(edges[i].v, i);
    adj[edges[i].v].emplace_back(edges[i].u, i);
    present.insert(edges[i].u).insert(edges[i].v);
  }
  std::vector<int> disc(VertexSet::capacity, -1), low(VertexSet::capacity, 0);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  int timer = 0;
  std::function<void(Vertex, std::size_t)> dfs = [&](Vertex x, std::size_t via) {
    disc[x] = low[x] = timer++;
    for (auto [y, id] : adj[x]) {
      if (id == via) continue;
      if (disc[y] < 0) {
        stack.push_back(id);
        dfs(y, id);
        low[x] = std::min(low[x], low[y]);
        if (low[y] >= disc[x]) {
          VertexSet verts;
          std::size_t count = 0;
          for (;;) {
            const std::size_t top = stack.back();
            stack.pop_back();
            verts.insert(edges[top].u).insert(edges[top].v);
            ++count;
            if (top == id) break;
          }
          blocks.emplace_back(verts.size(), count);
        }
      } else if (disc[y] < disc[x]) {
        stack.push_back(id);
        low[x] = std::min(low[x], disc[y]);
      }
    }
  };
  for (Vertex v : present)
    if (disc[v] < 0) dfs(v, edges.size());
  return blocks;
}

}  // namespace detail

// cc, cy = |E| - |V| + cc and ex = |E| - 4 cy over the edge-incident part;
// cactus when every block is a single edge or a cycle.
inline CactusStats cactus_stats(const LabelSubgraph& ls) {
  CactusStats st;
  const std::vector<Edge> edges = ls.plain_edges();
  st.vertices = ls.incident_vertices().size();
  st.edges = edges.size();
  st.cc = component_count(ls.incident_vertices(), edges);
  st.cy = st.edges + st.cc - st.vertices;
  st.ex = static_cast<long>(st.edges) - 4 * static_cast<long>(st.cy);
  for (auto [verts, count] : detail::block_sizes(edges))
    if (count != 1 && count != verts) st.is_cactus = false;
  return st;
}

// For a path climbing one level per step: its labels are pairwise distinct and
// each label belongs to the trace of every later vertex.
inline bool path_label_audit(const AssociatedGraph& ag, std::span<const Vertex> path) {
  if (path.empty()) throw PreconditionError("path_label_audit: empty path");
  for (Vertex x : path)
    if (!ag.vertices().contains(x))
      throw PreconditionError("path_label_audit: vertex " + std::to_string(x) + " is not in G^S");
  std::vector<Vertex> labels;
  for (std::size_t i = 1; i < path.size(); ++i) {
    auto e = ag.edge_between(path[i - 1], path[i]);
    if (!e)
      throw PreconditionError("path_label_audit: " + std::to_string(path[i - 1]) + " and " +
                              std::to_string(path[i]) + " are not adjacent in G^S");
    if (ag.level(path[i]) != ag.level(path[i - 1]) + 1)
      throw PreconditionError("path_label_audit: path does not climb one level per step at " +
                              std::to_string(path[i]));
    labels.push_back(e->label);
  }
  std::vector<Vertex> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < path.size(); ++j)
      if (!ag.trace(path[j]).contains(labels[i])) return false;
  return true;
}

}  // namespace locdom
