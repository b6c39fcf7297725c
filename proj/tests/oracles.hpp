#pragma once

// Slow reference implementations used to check the library. They work on
// plain std::set adjacency and never touch VertexSet arithmetic.

#include <algorithm>
#include <cstdint>
#include <map>
#include <iterator>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "locdom/graph.hpp"

namespace oracle {

using Adj = std::vector<std::set<int>>;
using Set = std::set<int>;

inline Adj adjacency(const locdom::Graph& g) {
  Adj adj(g.order());
  for (const auto& e : g.edges()) {
    adj[e.u].insert(static_cast<int>(e.v));
    adj[e.v].insert(static_cast<int>(e.u));
  }
  return adj;
}

inline Set members(std::uint64_t mask, int n) {
  Set s;
  for (int i = 0; i < n; ++i)
    if ((mask >> i) & 1u) s.insert(i);
  return s;
}

inline Set trace(const Adj& adj, int v, const Set& s) {
  Set out;
  for (int w : adj[v])
    if (s.count(w)) out.insert(w);
  return out;
}

inline bool dominating(const Adj& adj, const Set& s) {
  for (int v = 0; v < static_cast<int>(adj.size()); ++v)
    if (!s.count(v) && trace(adj, v, s).empty()) return false;
  return true;
}

inline bool distinguishing(const Adj& adj, const Set& s) {
  std::set<Set> seen;
  for (int v = 0; v < static_cast<int>(adj.size()); ++v)
    if (!s.count(v) && !seen.insert(trace(adj, v, s)).second) return false;
  return true;
}

inline bool ld(const Adj& adj, const Set& s) { return dominating(adj, s) && distinguishing(adj, s); }

// Smallest LD-set size and the number of LD-sets of that size.
inline std::pair<int, int> lambda(const Adj& adj) {
  const int n = static_cast<int>(adj.size());
  int best = n + 1, count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const Set s = members(mask, n);
    const int k = static_cast<int>(s.size());
    if (k > best || !ld(adj, s)) continue;
    if (k < best) {
      best = k;
      count = 0;
    }
    ++count;
  }
  return {best, count};
}

inline Adj complement(const Adj& adj) {
  const int n = static_cast<int>(adj.size());
  Adj out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && !adj[i].count(j)) out[i].insert(j);
  return out;
}

inline int components(const Adj& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> seen(n, 0);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!seen[w]) seen[w] = 1, stack.push_back(w);
    }
  }
  return count;
}

// Tries every 2-colouring.
inline bool bipartite(const Adj& adj) {
  const int n = static_cast<int>(adj.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      for (int w : adj[v])
        if (((mask >> v) & 1u) == ((mask >> w) & 1u)) ok = false;
    if (ok) return true;
  }
  return n == 0;
}

// Unordered pairs {u,v} with N(u)\{v} == N(v)\{u}.
inline std::set<std::pair<int, int>> twins(const Adj& adj) {
  std::set<std::pair<int, int>> out;
  const int n = static_cast<int>(adj.size());
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      Set a = adj[u], b = adj[v];
      a.erase(v);
      b.erase(u);
      if (a == b) out.insert({u, v});
    }
  return out;
}

// Edges of the associated graph as (x, y, label) with x < y.
inline std::set<std::tuple<int, int, int>> associated_edges(const Adj& adj, const Set& s) {
  std::set<std::tuple<int, int, int>> out;
  const int n = static_cast<int>(adj.size());
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (s.count(x) || s.count(y)) continue;
      const Set tx = trace(adj, x, s), ty = trace(adj, y, s);
      std::vector<int> diff;
      std::set_symmetric_difference(tx.begin(), tx.end(), ty.begin(), ty.end(), std::back_inserter(diff));
      if (diff.size() == 1) out.insert({x, y, diff.front()});
    }
  return out;
}

inline std::uint64_t permuted_code(const Adj& adj, const std::vector<int>& perm) {
  std::uint64_t code = 0;
  std::size_t bit = 0;
  const int n = static_cast<int>(adj.size());
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (adj[perm[i]].count(perm[j])) code |= std::uint64_t{1} << bit;
  return code;
}

// Isomorphism by trying all n! orders. Fine up to n = 8.
inline bool isomorphic(const Adj& a, const Adj& b) {
  if (a.size() != b.size()) return false;
  std::vector<int> id(a.size()), perm(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) id[i] = perm[i] = static_cast<int>(i);
  const auto target = permuted_code(a, id);
  do {
    if (permuted_code(b, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace oracle
