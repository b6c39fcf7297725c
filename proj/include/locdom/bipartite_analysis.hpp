#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "locdom/associated_graph.hpp"
#include "locdom/graph.hpp"
#include "locdom/ld_sets.hpp"

namespace locdom {

// The three conditions characterising connected bipartite graphs with
// λ(complement) = λ(G) + 1, for stable sides U (size r) and W (size s), 3 <= r < s:
//   c1  W has no twins;
//   c2  some w in W has N(w) = U;
//   c3  every u in U labels at least two edges of G^U;
// and the restatement of c3 as "G - u has at least two twin pairs inside W".
struct ConditionTriple {
  bool c1 = false;
  bool c2 = false;
  bool c3 = false;
  bool c3_twin_form = false;
  // U distinguishes W, so c3 was read off G^U. Otherwise G^U does not exist and
  // c3 counts the pairs of W that U \ {u} fails to separate.
  bool associated_form = false;

  bool all() const noexcept { return c1 && c2 && c3; }
  bool operator==(const ConditionTriple&) const = default;
};

// 2^r - 1, saturating for r >= 64.
constexpr std::uint64_t nonempty_subset_count(std::size_t r) noexcept {
  return r >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
}

inline ConditionTriple condition_triple(const Graph& g, const Bipartition& bp) {
  if (!is_valid_bipartition(g, bp)) throw PreconditionError("condition_triple: not a bipartition of the graph");
  ConditionTriple t;
  t.c1 = twin_pairs(g, bp.w).empty();

  for (Vertex w : bp.w)
    if (g.neighbors(w) == bp.u) t.c2 = true;

  t.associated_form = is_distinguishing(g, bp.u);
  if (t.associated_form) {
    const auto counts = label_multiplicity(build_associated(g, bp.u));
    t.c3 = true;
    for (auto [u, count] : counts)
      if (count < 2) t.c3 = false;
  } else {
    t.c3 = true;
    for (Vertex u : bp.u) {
      const VertexSet rest = bp.u.without(u);
      std::size_t unseparated = 0;
      for (Vertex x : bp.w)
        for (Vertex y : bp.w)
          if (x < y && g.trace(x, rest) == g.trace(y, rest)) ++unseparated;
      if (unseparated < 2) t.c3 = false;
    }
  }

  // Twin form, evaluated on the graph G - u itself.
  t.c3_twin_form = true;
  for (Vertex u : bp.u) {
    const Graph without = remove_vertex(g, u);
    if (twin_pairs(without, squeeze_out(bp.w, u)).size() < 2) t.c3_twin_form = false;
  }
  return t;
}

struct ClassifyOptions {
  std::size_t oracle_cap = default_oracle_cap;
  // Largest size tried by the bounded search once n exceeds the oracle cap.
  std::size_t bounded_kmax = 8;
};

struct ClassificationReport {
  std::size_t n = 0;
  Bipartition sides;
  ConditionTriple conditions;
  bool predicted_plus_one = false;
  // False when λ of G or of its complement lies beyond solver reach; only the
  // conditions and the prediction are meaningful then.
  bool solved = false;
  std::size_t lambda_g = 0;
  std::size_t lambda_gbar = 0;
  int relation = 0;  // lambda_gbar - lambda_g
  VertexSet witness_g;
  VertexSet witness_gbar;

  std::size_t r() const noexcept { return sides.r; }
  std::size_t s() const noexcept { return sides.s; }
};

// Predicted relation +1. K2 is the only small exception; sides with r <= 2 or r = s never give +1.
inline bool predict_plus_one(std::size_t n, const Bipartition& bp, const ConditionTriple& t) {
  if (n < 4) return n == 2;
  if (bp.r <= 2 || bp.r == bp.s) return false;
  return t.all();
}

inline ClassificationReport classify(const Graph& g, const ClassifyOptions& opt = {}) {
  auto bp = bipartition(g);
  if (!bp) throw PreconditionError("classify: graph is not bipartite");
  ClassificationReport rep;
  rep.n = g.order();
  rep.sides = *bp;
  rep.conditions = condition_triple(g, *bp);
  rep.predicted_plus_one = predict_plus_one(rep.n, *bp, rep.conditions);

  const auto lg = lambda_exact(g, opt.oracle_cap, opt.bounded_kmax);
  const auto lgbar = lambda_exact(complement(g), opt.oracle_cap, opt.bounded_kmax);
  if (lg && lgbar) {
    rep.solved = true;
    rep.lambda_g = lg->lambda;
    rep.lambda_gbar = lgbar->lambda;
    rep.witness_g = lg->witness;
    rep.witness_gbar = lgbar->witness;
    rep.relation = static_cast<int>(rep.lambda_gbar) - static_cast<int>(rep.lambda_g);
  }
  return rep;
}

// s lies in [ceil(3r/2 + 1), 2^r - 1].
inline std::size_t feasibility_min_s(std::size_t r) { return (3 * r + 3) / 2; }

inline bool feasibility_window(std::size_t r, std::size_t s) {
  if (r < 3) throw PreconditionError("feasibility_window: r = " + std::to_string(r) + " < 3");
  return feasibility_min_s(r) <= s && s <= nonempty_subset_count(r);
}

// For a graph with relation +1: 3 <= r < s <= 2^r - 1 and U is its only LD-code.
// nullopt when the relation is not +1 (the audit does not apply).
inline std::optional<bool> unique_code_audit(const Graph& g, const ClassificationReport& rep,
                                             std::size_t cap = default_oracle_cap) {
  if (!rep.solved || rep.relation != 1) return std::nullopt;
  const bool sizes = 3 <= rep.r() && rep.r() < rep.s() && rep.s() <= nonempty_subset_count(rep.r());
  const auto codes = ld_codes(g, cap);
  return sizes && codes.size() == 1 && codes.front() == rep.sides.u;
}

inline std::optional<bool> unique_code_audit(const Graph& g) { return unique_code_audit(g, classify(g)); }

// For an LD-code meeting both sides, or equal to W with r < s, or whenever
// 2^r <= s: the relation must be <= 0.
inline bool side_code_audit(const Graph& g, VertexSet code, const ClassificationReport& rep) {
  if (!rep.solved) throw PreconditionError("side_code_audit: relation unknown for this graph");
  if (!is_ld_set(g, code) || code.size() != rep.lambda_g)
    throw PreconditionError("side_code_audit: " + to_string(code) + " is not an LD-code");
  const bool mixed = code.intersects(rep.sides.u) && code.intersects(rep.sides.w);
  const bool is_w = rep.r() < rep.s() && code == rep.sides.w;
  const bool many = rep.r() < 64 && (std::uint64_t{1} << rep.r()) <= rep.s();
  return !(mixed || is_w || many) || rep.relation <= 0;
}

inline bool side_code_audit(const Graph& g, VertexSet code) { return side_code_audit(g, code, classify(g)); }

}  // namespace locdom
