#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "locdom/associated_graph.hpp"
#include "locdom/bipartite_analysis.hpp"
#include "locdom/enumeration.hpp"
#include "locdom/families.hpp"
#include "locdom/graph.hpp"
#include "locdom/io.hpp"
#include "locdom/ld_sets.hpp"

namespace locdom {

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> violations;
  double seconds = 0.0;

  bool ok() const noexcept { return violations.empty(); }
  void expect(bool condition, const std::string& what) {
    ++checks;
    if (!condition) violations.push_back(what);
  }
};

namespace detail {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::string pair_str(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace detail

// ---------------------------------------------------------------- random instances

// A random graph and a distinguishing set in it.
struct GraphWithSet {
  Graph graph;
  VertexSet set;
};

// Random G(n, p) with a random set grown until it distinguishes.
inline GraphWithSet random_sparse_instance(std::mt19937_64& rng, std::size_t max_n) {
  std::uniform_int_distribution<std::size_t> order(2, max_n);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t n = order(rng);
  const double p = 0.15 + 0.7 * unit(rng);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (unit(rng) < p) edges.push_back({i, j});
  Graph g = build_graph(n, edges);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  VertexSet s;
  for (Vertex v : perm) {
    if (is_distinguishing(g, s)) break;
    s.insert(v);
  }
  return {std::move(g), s};
}

// k set vertices and up to max_outside others whose traces are distinct
// random subsets of the set, plus random edges inside each part; relabelled
// at random. Dense in G^S edges.
inline GraphWithSet random_trace_instance(std::mt19937_64& rng, std::size_t max_n, std::size_t min_k = 2,
                                          std::size_t max_k = 6) {
  std::uniform_int_distribution<std::size_t> kdist(min_k, std::min(max_k, max_n - 1));
  const std::size_t k = kdist(rng);
  const std::size_t cap = std::min<std::size_t>(max_n - k, std::size_t{1} << k);
  std::uniform_int_distribution<std::size_t> mdist(1, cap);
  const std::size_t m = mdist(rng);
  std::vector<std::uint64_t> pool(std::size_t{1} << k);
  std::iota(pool.begin(), pool.end(), std::uint64_t{0});
  std::shuffle(pool.begin(), pool.end(), rng);
  // Bias towards nested traces so that G^S has edges: keep a random walk of one-element flips.
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::uint64_t> traces;
  std::uint64_t cur = pool.front();
  std::size_t next_pool = 0;
  while (traces.size() < m) {
    if (std::find(traces.begin(), traces.end(), cur) == traces.end()) traces.push_back(cur);
    if (unit(rng) < 0.8)
      cur ^= std::uint64_t{1} << std::uniform_int_distribution<std::size_t>(0, k - 1)(rng);
    else
      cur = pool[next_pool = (next_pool + 1) % pool.size()];
  }
  const std::size_t n = k + m;
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  const double p = 0.3 * unit(rng);
  for (std::size_t i = 0; i < m; ++i)
    for (Vertex u : VertexSet::from_bits(traces[i])) edges.push_back({perm[u], perm[k + i]});
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) {
      const bool same_side = (i < k) == (j < k);
      if (same_side && unit(rng) < p) edges.push_back({perm[i], perm[j]});
    }
  VertexSet s;
  for (Vertex u = 0; u < k; ++u) s.insert(perm[u]);
  return {build_graph(n, edges), s};
}

inline VertexSet random_nonempty_subset(std::mt19937_64& rng, VertexSet of) {
  const auto members = of.to_vector();
  for (;;) {
    VertexSet out;
    for (Vertex v : members)
      if (rng() & 1u) out.insert(v);
    if (!out.empty()) return out;
  }
}

// ---------------------------------------------------------------- suites

// Table of closed forms for paths, cycles, stars, complete bipartite graphs and bi-stars.
inline SuiteResult verify_closed_forms() {
  detail::Stopwatch clock;
  SuiteResult res;
  res.name = "table1";
  auto check = [&](const FamilySpec& spec, const std::string& label) {
    const Graph g = generate(spec);
    const auto expected = closed_form_lambdas(spec);
    const std::pair<std::size_t, std::size_t> got{lambda_bruteforce(g).lambda,
                                                  lambda_bruteforce(complement(g)).lambda};
    res.expect(got == expected, label + ": got " + detail::pair_str(got.first, got.second) + ", expected " +
                                    detail::pair_str(expected.first, expected.second));
  };
  for (std::size_t n = 4; n <= 14; ++n) {
    check(FamilySpec::path(n), "P" + std::to_string(n));
    check(FamilySpec::cycle(n), "C" + std::to_string(n));
  }
  for (std::size_t n = 4; n <= 12; ++n) check(FamilySpec::star(n), "K1," + std::to_string(n - 1));
  for (std::size_t r = 2; 2 * r <= 12; ++r)
    for (std::size_t s = r; r + s <= 12; ++s)
      check(FamilySpec::complete_bipartite(r, s), "K" + std::to_string(r) + "," + std::to_string(s));
  for (std::size_t r = 3; r <= 6; ++r)
    for (std::size_t s = r; s <= 6; ++s)
      check(FamilySpec::bistar(r, s), "K2(" + std::to_string(r) + "," + std::to_string(s) + ")");
  res.seconds = clock.seconds();
  return res;
}

// |λ(G) - λ(complement)| <= 1 over every connected graph up to max_n vertices.
inline SuiteResult verify_complement_gap(std::size_t max_n) {
  detail::Stopwatch clock;
  SuiteResult res;
  res.name = "thm3";
  for (std::size_t n = 1; n <= max_n; ++n)
    for (const Graph& g : connected_graphs(n)) {
      const long a = static_cast<long>(lambda_bruteforce(g).lambda);
      const long b = static_cast<long>(lambda_bruteforce(complement(g)).lambda);
      res.expect(std::labs(a - b) <= 1, to_graph6(g) + ": lambda " + std::to_string(a) + ", complement " +
                                            std::to_string(b));
    }
  res.seconds = clock.seconds();
  return res;
}

// Structural properties of G^S over random distinguishing sets.
inline SuiteResult verify_associated(std::uint64_t seed, std::size_t trials, std::size_t max_n = 14) {
  detail::Stopwatch clock;
  SuiteResult res;
  res.name = "parity";
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const auto inst = (t % 2 == 0) ? random_trace_instance(rng, max_n) : random_sparse_instance(rng, max_n);
    const Graph& g = inst.graph;
    const VertexSet s = inst.set;
    const std::string tag = "trial " + std::to_string(t) + " " + to_graph6(g) + " S=" + to_string(s);
    const auto ag = build_associated(g, s);

    res.expect(ag.vertices().size() == g.order() - s.size(), tag + ": |V(G^S)| != n - |S|");

    bool level_split = true;
    for (const LabeledEdge& e : ag.edges())
      if ((ag.level(e.x) + ag.level(e.y)) % 2 == 0) level_split = false;
    res.expect(level_split, tag + ": an edge joins two levels of equal parity");

    bool distinct_at_vertex = true;
    for (const LabeledEdge& a : ag.edges())
      for (const LabeledEdge& b : ag.edges()) {
        const bool share = a.x == b.x || a.x == b.y || a.y == b.x || a.y == b.y;
        if (a < b && share && a.label == b.label) distinct_at_vertex = false;
      }
    res.expect(distinct_at_vertex, tag + ": incident edges share a label");

    res.expect(parity_audit(ag), tag + ": a cycle carries some label an odd number of times");

    const auto bar = build_associated(complement(g), s);
    res.expect(bar.vertices() == ag.vertices() && bar.edges() == ag.edges(),
               tag + ": G^S differs from the complement's associated graph");
    bool reversed = true;
    for (Vertex x : ag.vertices())
      if (bar.level(x) != ag.k() - ag.level(x)) reversed = false;
    res.expect(reversed, tag + ": complement levels are not reversed");

    if (!s.empty()) {
      const VertexSet s_prime = random_nonempty_subset(rng, s);
      res.expect(component_trace_check(label_subgraph(ag, s_prime)),
                 tag + ": component traces disagree for S'=" + to_string(s_prime));
    }
  }
  res.seconds = clock.seconds();
  return res;
}

// Two-edges-per-label subgraphs of G^S: components are cacti and the order
// bounds hold; |V| - cc never grows along random deletion chains.
inline SuiteResult verify_cactus(std::uint64_t seed, std::size_t trials, std::size_t max_n = 20) {
  detail::Stopwatch clock;
  SuiteResult res;
  res.name = "cactus";
  std::mt19937_64 rng(seed);
  std::size_t done = 0;
  while (done < trials) {
    const auto inst = random_trace_instance(rng, max_n, 3, 6);
    const auto ag = build_associated(inst.graph, inst.set);
    std::map<Vertex, std::vector<LabeledEdge>> by_label;
    for (const LabeledEdge& e : ag.edges()) by_label[e.label].push_back(e);
    VertexSet rich;
    for (const auto& [label, edges] : by_label)
      if (edges.size() >= 2) rich.insert(label);
    if (rich.empty()) continue;
    const std::string tag = "trial " + std::to_string(done) + " " + to_graph6(inst.graph) + " S=" + to_string(inst.set);

    const VertexSet s_prime = random_nonempty_subset(rng, rich);
    std::vector<LabeledEdge> picked;
    for (Vertex u : s_prime) {
      auto pool = by_label[u];
      std::shuffle(pool.begin(), pool.end(), rng);
      picked.push_back(pool[0]);
      picked.push_back(pool[1]);
    }
    const auto h = edge_subgraph(ag, picked);
    const auto st = cactus_stats(h);
    const std::size_t r_prime = s_prime.size();
    res.expect(st.is_cactus, tag + ": a component is not a cactus");
    res.expect(st.ex >= 0, tag + ": ex < 0");
    res.expect(st.vertices >= 4, tag + ": fewer than four vertices");
    res.expect(4 * st.vertices >= 3 * st.edges + 4 * st.cc,
               tag + ": |V| < 3|E|/4 + cc with |V|=" + std::to_string(st.vertices) + " |E|=" +
                   std::to_string(st.edges) + " cc=" + std::to_string(st.cc));
    res.expect(2 * st.vertices >= 3 * r_prime + 2, tag + ": |V| < 3r'/2 + 1 with r'=" + std::to_string(r_prime));

    // Deletion chain from H_{S'} over all of V(G^S).
    const auto chain_start = label_subgraph(ag, random_nonempty_subset(rng, ag.set()));
    VertexSet verts = ag.vertices();
    std::vector<Edge> edges = chain_start.plain_edges();
    long prev = static_cast<long>(verts.size()) - static_cast<long>(component_count(verts, edges));
    while (!verts.empty()) {
      if (!edges.empty() && (rng() & 1u)) {
        edges.erase(edges.begin() + static_cast<long>(rng() % edges.size()));
      } else {
        const auto members = verts.to_vector();
        const Vertex v = members[rng() % members.size()];
        verts.erase(v);
        std::erase_if(edges, [v](const Edge& e) { return e.u == v || e.v == v; });
      }
      const long cur = static_cast<long>(verts.size()) - static_cast<long>(component_count(verts, edges));
      res.expect(cur <= prev, tag + ": |V| - cc increased along a deletion chain");
      prev = cur;
    }
    ++done;
  }
  res.seconds = clock.seconds();
  return res;
}

// ---------------------------------------------------------------- census

struct CensusEntry {
  std::string graph6;
  ClassificationReport report;
  std::vector<std::string> violations;
};

struct CensusResult {
  std::size_t max_n = 0;
  std::vector<CensusEntry> entries;
  std::map<int, std::size_t> relation_counts;
  std::size_t checks = 0;
  double seconds = 0.0;

  std::vector<std::string> counterexamples() const {
    std::vector<std::string> out;
    for (const auto& e : entries)
      for (const auto& v : e.violations) out.push_back(e.graph6 + ": " + v);
    return out;
  }
  bool ok() const {
    for (const auto& e : entries)
      if (!e.violations.empty()) return false;
    return true;
  }
};

// Classifies one census graph and checks every claim that applies to it.
inline CensusEntry census_check(const Graph& g, std::size_t& checks) {
  CensusEntry entry;
  entry.graph6 = to_graph6(g);
  entry.report = classify(g);
  const auto& rep = entry.report;
  auto expect = [&](bool ok, const std::string& what) {
    ++checks;
    if (!ok) entry.violations.push_back(what);
  };
  const std::size_t n = rep.n, r = rep.r(), s = rep.s();
  const auto& c = rep.conditions;
  expect(rep.solved, "classification unsolved");
  expect(std::abs(rep.relation) <= 1, "|lambda - complement lambda| > 1");
  expect(c.c3 == c.c3_twin_form, "c3 disagrees with its twin form");
  if (3 <= r && r < s) expect(c.all() == (rep.relation == 1), "conditions do not match relation +1");
  if (n >= 4 && r <= 2) expect(rep.relation <= 0, "relation +1 with r <= 2");
  if (n >= 4 && r == s) expect(rep.relation <= 0, "relation +1 with r = s");
  if (n < 4 && rep.relation == 1) expect(n == 2, "relation +1 on a small graph other than K2");
  expect(rep.predicted_plus_one == (rep.relation == 1), "prediction disagrees with relation");
  if (rep.relation == 1 && n >= 4) {
    expect(unique_code_audit(g, rep).value_or(false), "U is not the unique LD-code");
    if (r >= 3) expect(feasibility_window(r, s), "s outside the feasibility window");
  }
  for (VertexSet code : ld_codes(g)) expect(side_code_audit(g, code, rep), "LD-code " + to_string(code) + " meets both sides or equals W, yet the relation is +1");
  return entry;
}

inline CensusResult run_census(std::size_t max_n, std::size_t jobs = 1) {
  detail::Stopwatch clock;
  const auto instances = bipartite_census_graphs(max_n);
  CensusResult result;
  result.max_n = max_n;
  result.entries.resize(instances.size());
  std::vector<std::size_t> checks(instances.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++)
      result.entries[i] = census_check(instances[i].graph, checks[i]);
  };
  std::vector<std::jthread> pool;
  for (std::size_t j = 1; j < std::max<std::size_t>(jobs, 1); ++j) pool.emplace_back(worker);
  worker();
  pool.clear();
  for (std::size_t i = 0; i < instances.size(); ++i) {
    result.checks += checks[i];
    ++result.relation_counts[result.entries[i].report.relation];
  }
  result.seconds = clock.seconds();
  return result;
}

}  // namespace locdom
