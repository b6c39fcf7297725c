#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "locdom/vertex_set.hpp"

using locdom::VertexSet;

TEST_CASE("basic membership and size") {
  VertexSet s{0, 2, 5};
  CHECK(s.size() == 3);
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(1));
  CHECK_FALSE(s.contains(200));
  CHECK(s.first() == 0);
  CHECK(s.last() == 5);
  CHECK(s.to_vector() == std::vector<locdom::Vertex>{0, 2, 5});
  CHECK(locdom::to_string(s) == "{0,2,5}");
  CHECK(locdom::to_string(VertexSet{}) == "{}");
  CHECK(VertexSet::prefix(64).size() == 64);
  CHECK(VertexSet::prefix(0).empty());
  CHECK(VertexSet{63}.contains(63));
}

TEST_CASE("set algebra agrees with std::set") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a_bits = rng(), b_bits = rng();
    const auto a = VertexSet::from_bits(a_bits), b = VertexSet::from_bits(b_bits);
    std::set<locdom::Vertex> sa, sb;
    for (locdom::Vertex v = 0; v < 64; ++v) {
      if ((a_bits >> v) & 1u) sa.insert(v);
      if ((b_bits >> v) & 1u) sb.insert(v);
    }
    std::vector<locdom::Vertex> uni, inter, diff, sym;
    std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(uni));
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(inter));
    std::set_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(diff));
    std::set_symmetric_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(sym));
    CHECK((a | b).to_vector() == uni);
    CHECK((a & b).to_vector() == inter);
    CHECK((a - b).to_vector() == diff);
    CHECK((a ^ b).to_vector() == sym);
    CHECK(a.is_subset_of(b) == std::includes(sb.begin(), sb.end(), sa.begin(), sa.end()));
    const std::vector<locdom::Vertex> va(sa.begin(), sa.end()), vb(sb.begin(), sb.end());
    CHECK(locdom::lex_less(a, b) == (va < vb));
  }
}

TEST_CASE("with and without leave the original untouched") {
  const VertexSet s{1, 3};
  CHECK(s.with(4) == VertexSet{1, 3, 4});
  CHECK(s.without(1) == VertexSet{3});
  CHECK(s == VertexSet{1, 3});
}
