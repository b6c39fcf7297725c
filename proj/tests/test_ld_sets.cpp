#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "locdom/families.hpp"
#include "locdom/ld_sets.hpp"
#include "oracles.hpp"

using namespace locdom;

namespace {

oracle::Set as_std(VertexSet s) {
  oracle::Set out;
  for (Vertex v : s) out.insert(static_cast<int>(v));
  return out;
}

}  // namespace

TEST_CASE("predicates agree with the set-based oracle on every subset") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 40; ++t) {
    const Graph g = fixture::random_graph(rng, 1 + rng() % 8, 0.45);
    const auto adj = oracle::adjacency(g);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask) {
      const VertexSet s = VertexSet::from_bits(mask);
      const auto ss = oracle::members(mask, static_cast<int>(g.order()));
      CHECK(is_dominating(g, s) == oracle::dominating(adj, ss));
      CHECK(is_distinguishing(g, s) == oracle::distinguishing(adj, ss));
      CHECK(is_ld_set(g, s) == oracle::ld(adj, ss));
      if (const auto pair = undistinguished_pair(g, s)) {
        CHECK(g.trace(pair->u, s) == g.trace(pair->v, s));
        CHECK_FALSE(s.contains(pair->u));
        CHECK_FALSE(s.contains(pair->v));
        CHECK_THROWS_AS(undominated_vertex(g, s), PreconditionError);
      } else {
        CHECK(undominated_vertex(g, s).has_value() == !is_dominating(g, s));
      }
    }
  }
}

TEST_CASE("lambda and the LD-code count match the oracle") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 120; ++t) {
    const Graph g = fixture::random_graph(rng, 1 + rng() % 9, 0.2 + 0.6 * (t % 3) / 2.0);
    const auto [lam, count] = oracle::lambda(oracle::adjacency(g));
    const auto rep = lambda_bruteforce(g, true);
    CHECK(static_cast<int>(rep.lambda) == lam);
    REQUIRE(rep.all_codes);
    CHECK(static_cast<int>(rep.all_codes->size()) == count);
    CHECK(rep.witness == rep.all_codes->front());
    CHECK(oracle::ld(oracle::adjacency(g), as_std(rep.witness)));
    for (std::size_t i = 1; i < rep.all_codes->size(); ++i)
      CHECK(lex_less((*rep.all_codes)[i - 1], (*rep.all_codes)[i]));
  }
}

TEST_CASE("witness is the first LD-set in cardinality-then-lex order") {
  // P4 0-1-2-3: the 2-subsets in order are 01 02 03 12 13 23. {0,2} leaves 1 and 3
  // with traces {0,2} and {2}; nothing earlier works.
  const Graph p4 = fixture::from_pairs(4, {{0, 1}, {1, 2}, {2, 3}});
  const auto rep = lambda_bruteforce(p4);
  CHECK(rep.lambda == 2);
  CHECK(rep.witness == VertexSet{0, 2});
  CHECK_FALSE(rep.all_codes);
}

TEST_CASE("trivial graphs") {
  CHECK(lambda_bruteforce(Graph(0)).lambda == 0);
  CHECK(lambda_bruteforce(Graph(1)).lambda == 1);
  CHECK(lambda_bruteforce(Graph(2)).lambda == 2);  // two isolated vertices
  CHECK(lambda_bruteforce(fixture::from_pairs(2, {{0, 1}})).lambda == 1);
}

TEST_CASE("oracle cap is enforced") {
  const Graph big = generate(FamilySpec::path(21));
  CHECK_THROWS_AS(lambda_bruteforce(big), CapExceeded);
  CHECK_NOTHROW(lambda_bruteforce(big, false, 21));
  CHECK_THROWS_AS(lambda_bounded(Graph(3), 4), PreconditionError);
}

TEST_CASE("bounded search equals brute force on random graphs") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 300; ++t) {
    const Graph g = fixture::random_graph(rng, 1 + rng() % 9, 0.15 + 0.7 * (rng() % 100) / 100.0);
    const auto exact = lambda_bruteforce(g);
    const auto full = lambda_bounded(g, g.order());
    REQUIRE(full.found);
    CHECK(full.size == exact.lambda);
    CHECK(full.witness == exact.witness);
    if (exact.lambda > 0) {
      const auto below = lambda_bounded(g, exact.lambda - 1);
      CHECK_FALSE(below.found);
      CHECK(below.size == exact.lambda - 1);
    }
  }
}

TEST_CASE("bounded search on paths beyond the oracle cap") {
  for (std::size_t n : {21u, 25u, 30u}) {
    const Graph g = generate(FamilySpec::path(n));
    const std::size_t expected = (2 * n + 4) / 5;
    const auto hit = lambda_bounded(g, expected);
    CHECK(hit.found);
    CHECK(hit.size == expected);
    CHECK(is_ld_set(g, hit.witness));
    CHECK_FALSE(lambda_bounded(g, expected - 1).found);
    const auto viaexact = lambda_exact(g, 20, expected);
    REQUIRE(viaexact);
    CHECK(viaexact->lambda == expected);
  }
  CHECK_FALSE(lambda_exact(generate(FamilySpec::path(30)), 20, 5).has_value());
}

TEST_CASE("every vertex set is LD, so lambda never exceeds n") {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 50; ++t) {
    const Graph g = fixture::random_graph(rng, 1 + rng() % 10, 0.5);
    CHECK(is_ld_set(g, g.vertices()));
    CHECK(lambda_bruteforce(g).lambda <= g.order());
  }
}
