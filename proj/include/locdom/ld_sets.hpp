#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "locdom/graph.hpp"

namespace locdom {

// Every vertex outside s has a neighbour in s.
inline bool is_dominating(const Graph& g, VertexSet s) {
  for (Vertex v : g.vertices() - s)
    if (!g.neighbors(v).intersects(s)) return false;
  return true;
}

// Some pair x < y outside s with N(x) ∩ s = N(y) ∩ s, if any.
inline std::optional<Edge> undistinguished_pair(const Graph& g, VertexSet s) {
  std::vector<std::pair<std::uint64_t, Vertex>> traces;
  for (Vertex v : g.vertices() - s) traces.emplace_back(g.trace(v, s).bits(), v);
  std::sort(traces.begin(), traces.end());
  for (std::size_t i = 1; i < traces.size(); ++i)
    if (traces[i].first == traces[i - 1].first) return Edge{traces[i - 1].second, traces[i].second};
  return std::nullopt;
}

// Traces N(v) ∩ s pairwise distinct over v outside s. Two empty traces count as equal.
inline bool is_distinguishing(const Graph& g, VertexSet s) { return !undistinguished_pair(g, s).has_value(); }

inline bool is_ld_set(const Graph& g, VertexSet s) { return is_dominating(g, s) && is_distinguishing(g, s); }

// A distinguishing set leaves at most one vertex with empty trace. Returns it, if present.
inline std::optional<Vertex> undominated_vertex(const Graph& g, VertexSet s) {
  if (auto pair = undistinguished_pair(g, s))
    throw PreconditionError("undominated_vertex: set " + to_string(s) + " does not distinguish " +
                            std::to_string(pair->u) + " and " + std::to_string(pair->v));
  for (Vertex v : g.vertices() - s)
    if (!g.neighbors(v).intersects(s)) return v;
  return std::nullopt;
}

struct LDReport {
  std::size_t lambda = 0;
  VertexSet witness;
  std::optional<std::vector<VertexSet>> all_codes;
};

inline constexpr std::size_t default_oracle_cap = 20;

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

// Visits the k-subsets of {0..n-1} in lexicographic order of their ascending
// member lists until `visit` returns true.
template <typename Visit>
bool for_each_k_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return false;
  std::vector<Vertex> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    if (visit(VertexSet::from_range(idx))) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

// Exact λ(G) by scanning subsets by cardinality, lexicographically within a
// cardinality. The witness is the first LD-set met; with `enumerate_all` every
// LD-set of size λ is collected, in the same order.
inline LDReport lambda_bruteforce(const Graph& g, bool enumerate_all = false,
                                  std::size_t cap = default_oracle_cap) {
  const std::size_t n = g.order();
  if (n > cap)
    throw CapExceeded("lambda_bruteforce: order " + std::to_string(n) + " exceeds the oracle cap of " +
                      std::to_string(cap) + "; use lambda_bounded for larger graphs");
  LDReport report;
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<VertexSet> codes;
    detail::for_each_k_subset(n, k, [&](VertexSet s) {
      if (!is_ld_set(g, s)) return false;
      codes.push_back(s);
      return !enumerate_all;
    });
    if (!codes.empty()) {
      report.lambda = k;
      report.witness = codes.front();
      if (enumerate_all) report.all_codes = std::move(codes);
      return report;
    }
  }
  return report;  // unreachable: V itself is an LD-set
}

// All LD-codes, lexicographically sorted.
inline std::vector<VertexSet> ld_codes(const Graph& g, std::size_t cap = default_oracle_cap) {
  return *lambda_bruteforce(g, true, cap).all_codes;
}

struct BoundedResult {
  bool found = false;
  // Witness size when found; otherwise the exhausted bound kmax.
  std::size_t size = 0;
  VertexSet witness;
  std::uint64_t nodes = 0;
};

namespace detail {

// Depth-first scan of the k-subsets in the same order as lambda_bruteforce,
// abandoning a prefix once some vertex that can no longer join the set is
// left undominated or inseparable from another such vertex.
class BoundedSearch {
 public:
  BoundedSearch(const Graph& g, std::size_t k) : g_(g), n_(g.order()), k_(k) {}

  std::optional<VertexSet> run() {
    if (k_ > n_) return std::nullopt;
    if (k_ == 0) {
      ++nodes_;
      return is_ld_set(g_, {}) ? std::optional<VertexSet>(VertexSet{}) : std::nullopt;
    }
    VertexSet out;
    return extend(VertexSet{}, 0, out) ? std::optional<VertexSet>(out) : std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool extend(VertexSet chosen, Vertex start, VertexSet& out) {
    const std::size_t depth = chosen.size();
    for (Vertex c = start; c + (k_ - depth) <= n_; ++c) {
      const VertexSet next = chosen.with(c);
      ++nodes_;
      if (depth + 1 == k_) {
        if (is_ld_set(g_, next)) {
          out = next;
          return true;
        }
        continue;
      }
      if (!viable(next, c)) continue;
      if (extend(next, c + 1, out)) return true;
    }
    return false;
  }

  bool viable(VertexSet chosen, Vertex last) const {
    const VertexSet future = g_.vertices() - VertexSet::prefix(last + 1);
    const VertexSet frozen = VertexSet::prefix(last + 1) - chosen;
    const VertexSet reachable = chosen | future;
    for (Vertex v : frozen)
      if (!g_.neighbors(v).intersects(reachable)) return false;

    scratch_.clear();
    for (Vertex v : frozen) scratch_.emplace_back(g_.trace(v, chosen).bits(), v);
    std::sort(scratch_.begin(), scratch_.end());
    for (std::size_t i = 0; i < scratch_.size();) {
      std::size_t j = i + 1;
      while (j < scratch_.size() && scratch_[j].first == scratch_[i].first) ++j;
      for (std::size_t a = i; a < j; ++a)
        for (std::size_t b = a + 1; b < j; ++b) {
          const VertexSet sep = g_.neighbors(scratch_[a].second) ^ g_.neighbors(scratch_[b].second);
          if (!sep.intersects(future)) return false;
        }
      i = j;
    }
    return true;
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t k_;
  std::uint64_t nodes_ = 0;
  mutable std::vector<std::pair<std::uint64_t, Vertex>> scratch_;
};

}  // namespace detail

// Decides whether an LD-set of size <= kmax exists, trying sizes upward. The
// first size that succeeds is λ(G) and the witness matches lambda_bruteforce's.
inline BoundedResult lambda_bounded(const Graph& g, std::size_t kmax) {
  if (kmax > g.order())
    throw PreconditionError("lambda_bounded: kmax " + std::to_string(kmax) + " exceeds graph order " +
                            std::to_string(g.order()));
  BoundedResult result;
  for (std::size_t k = 0; k <= kmax; ++k) {
    detail::BoundedSearch search(g, k);
    auto hit = search.run();
    result.nodes += search.nodes();
    if (hit) {
      result.found = true;
      result.size = k;
      result.witness = *hit;
      return result;
    }
  }
  result.size = kmax;
  return result;
}

// λ(G) via the bruteforce oracle when n fits under the cap, otherwise via the
// bounded search up to `kmax_beyond_cap`. nullopt when neither reaches an answer.
inline std::optional<LDReport> lambda_exact(const Graph& g, std::size_t cap = default_oracle_cap,
                                            std::size_t kmax_beyond_cap = 8) {
  if (g.order() <= cap) return lambda_bruteforce(g, false, cap);
  const auto bounded = lambda_bounded(g, std::min(kmax_beyond_cap, g.order()));
  if (!bounded.found) return std::nullopt;
  LDReport report;
  report.lambda = bounded.size;
  report.witness = bounded.witness;
  return report;
}

}  // namespace locdom
