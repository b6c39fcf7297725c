#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "locdom/bipartite_analysis.hpp"
#include "locdom/graph.hpp"

namespace locdom {

enum class FamilyKind { path, cycle, star, complete_bipartite, bistar, extremal, banner };

inline std::string_view family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::path: return "path";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::star: return "star";
    case FamilyKind::complete_bipartite: return "complete_bipartite";
    case FamilyKind::bistar: return "bistar";
    case FamilyKind::extremal: return "extremal";
    case FamilyKind::banner: return "banner";
  }
  return "?";
}

inline std::optional<FamilyKind> parse_family(std::string_view name) {
  for (FamilyKind k : {FamilyKind::path, FamilyKind::cycle, FamilyKind::star, FamilyKind::complete_bipartite,
                       FamilyKind::bistar, FamilyKind::extremal, FamilyKind::banner})
    if (family_name(k) == name) return k;
  return std::nullopt;
}

// Path, cycle and star take n; complete bipartite, bi-star and extremal take (r, s);
// the banner takes nothing.
struct FamilySpec {
  FamilyKind kind = FamilyKind::path;
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t s = 0;

  static FamilySpec path(std::size_t n) { return {FamilyKind::path, n, 0, 0}; }
  static FamilySpec cycle(std::size_t n) { return {FamilyKind::cycle, n, 0, 0}; }
  static FamilySpec star(std::size_t n) { return {FamilyKind::star, n, 0, 0}; }
  static FamilySpec complete_bipartite(std::size_t r, std::size_t s) {
    return {FamilyKind::complete_bipartite, r + s, r, s};
  }
  static FamilySpec bistar(std::size_t r, std::size_t s) { return {FamilyKind::bistar, r + s, r, s}; }
  static FamilySpec extremal(std::size_t r, std::size_t s) { return {FamilyKind::extremal, r + s, r, s}; }
  static FamilySpec banner() { return {FamilyKind::banner, 5, 0, 0}; }
};

// The graph G(r, s): U = {0..r-1} standing for [r] = {1..r}, and one W-vertex
// per subset, adjacent to the U-vertices it contains. W-vertex i is r + i.
struct ExtremalWitness {
  std::size_t r = 0;
  std::size_t s = 0;
  std::vector<VertexSet> w_subsets;  // over U-indices 0..r-1
  Graph graph;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

inline Graph bipartite_from_subsets(std::size_t r, const std::vector<VertexSet>& subsets) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (Vertex u : subsets[i]) edges.push_back({u, r + i});
  return build_graph(r + subsets.size(), edges);
}

}  // namespace detail

// The base W for s = ceil(3r/2 + 1): [r], every [r] \ {i}, every [r] \ {2i-1, 2i},
// and [r] \ {r-1, r} when r is odd. Further subsets are appended by increasing
// cardinality, then lexicographically, skipping those already present.
inline ExtremalWitness extremal(std::size_t r, std::size_t s) {
  detail::require(r >= 3, "extremal: r = " + std::to_string(r) + " must be at least 3");
  detail::require(r + s <= Graph::max_order, "extremal: order r + s exceeds the supported maximum");
  detail::require(feasibility_window(r, s), "extremal: s = " + std::to_string(s) + " lies outside [" +
                                                std::to_string(feasibility_min_s(r)) + ", 2^" + std::to_string(r) +
                                                " - 1]");
  const VertexSet all = VertexSet::prefix(r);
  std::vector<VertexSet> w{all};
  for (Vertex i = 0; i < r; ++i) w.push_back(all.without(i));
  for (Vertex i = 0; i + 1 < r; i += 2) w.push_back(all.without(i).without(i + 1));
  if (r % 2 == 1) w.push_back(all.without(r - 2).without(r - 1));

  for (std::size_t size = 1; size <= r && w.size() < s; ++size)
    detail::for_each_k_subset(r, size, [&](VertexSet extra) {
      if (std::find(w.begin(), w.end(), extra) == w.end()) w.push_back(extra);
      return w.size() >= s;
    });
  std::vector<VertexSet> sorted = w;
  std::sort(sorted.begin(), sorted.end(), LexLess{});
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::logic_error("extremal: W-subsets are not pairwise distinct");

  ExtremalWitness out;
  out.r = r;
  out.s = s;
  out.graph = detail::bipartite_from_subsets(r, w);
  out.w_subsets = std::move(w);
  return out;
}

// Labelings: path and cycle run 0-1-...-(n-1); the star centre is 0; complete
// bipartite puts the r-side first; the bi-star has centres 0 and 1, then the
// r-1 leaves of 0, then the s-1 leaves of 1; the banner is the 4-cycle 0-1-2-3
// with vertex 4 pendant at 0.
inline Graph generate(const FamilySpec& spec) {
  using detail::require;
  std::vector<Edge> edges;
  switch (spec.kind) {
    case FamilyKind::path:
      require(spec.n >= 1, "path: n must be at least 1");
      for (Vertex i = 0; i + 1 < spec.n; ++i) edges.push_back({i, i + 1});
      return build_graph(spec.n, edges);
    case FamilyKind::cycle:
      require(spec.n >= 3, "cycle: n must be at least 3");
      for (Vertex i = 0; i < spec.n; ++i) edges.push_back({i, (i + 1) % spec.n});
      return build_graph(spec.n, edges);
    case FamilyKind::star:
      require(spec.n >= 2, "star: n must be at least 2");
      for (Vertex i = 1; i < spec.n; ++i) edges.push_back({0, i});
      return build_graph(spec.n, edges);
    case FamilyKind::complete_bipartite:
      require(spec.r >= 1 && spec.s >= 1, "complete_bipartite: r and s must be at least 1");
      for (Vertex i = 0; i < spec.r; ++i)
        for (Vertex j = 0; j < spec.s; ++j) edges.push_back({i, spec.r + j});
      return build_graph(spec.r + spec.s, edges);
    case FamilyKind::bistar: {
      require(spec.r >= 2 && spec.s >= 2, "bistar: r and s must be at least 2");
      edges.push_back({0, 1});
      Vertex next = 2;
      for (std::size_t i = 1; i < spec.r; ++i) edges.push_back({0, next++});
      for (std::size_t i = 1; i < spec.s; ++i) edges.push_back({1, next++});
      return build_graph(spec.r + spec.s, edges);
    }
    case FamilyKind::extremal:
      return extremal(spec.r, spec.s).graph;
    case FamilyKind::banner:
      return build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
  }
  throw PreconditionError("unknown family");
}

inline std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

// Closed-form (λ(G), λ(complement)) for the tabulated families.
inline std::pair<std::size_t, std::size_t> closed_form_lambdas(const FamilySpec& spec) {
  using detail::require;
  const std::size_t n = spec.n;
  switch (spec.kind) {
    case FamilyKind::path:
    case FamilyKind::cycle:
      require(n >= 4, "closed_form_lambdas: order must be at least 4");
      if (n <= 6) return {ceil_div(2 * n, 5), ceil_div(2 * n, 5)};
      return {ceil_div(2 * n, 5), ceil_div(2 * n - 2, 5)};
    case FamilyKind::star:
      require(n >= 4, "closed_form_lambdas: order must be at least 4");
      return {n - 1, n - 1};
    case FamilyKind::complete_bipartite:
      require(2 <= spec.r && spec.r <= spec.s, "closed_form_lambdas: complete bipartite needs 2 <= r <= s");
      return {n - 2, n - 2};
    case FamilyKind::bistar:
      require(3 <= spec.r && spec.r <= spec.s, "closed_form_lambdas: bi-star needs 3 <= r <= s");
      return {n - 2, n - 3};
    default:
      throw PreconditionError("closed_form_lambdas: " + std::string(family_name(spec.kind)) + " is not tabulated");
  }
}

}  // namespace locdom
