#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace locdom {

using Vertex = std::size_t;

// Fixed-width set of vertex indices 0..63, one bit per vertex.
class VertexSet {
 public:
  static constexpr std::size_t capacity = 64;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    constexpr iterator() noexcept = default;
    constexpr explicit iterator(std::uint64_t rest) noexcept : rest_(rest) {}

    constexpr Vertex operator*() const noexcept { return static_cast<Vertex>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() noexcept {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) noexcept {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const noexcept = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() noexcept = default;
  constexpr VertexSet(std::initializer_list<Vertex> members) noexcept {
    for (Vertex v : members) insert(v);
  }

  static constexpr VertexSet from_bits(std::uint64_t bits) noexcept {
    VertexSet s;
    s.bits_ = bits;
    return s;
  }
  // {0, 1, ..., n-1}
  static constexpr VertexSet prefix(std::size_t n) noexcept {
    return from_bits(n >= capacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet singleton(Vertex v) noexcept { return from_bits(bit(v)); }
  template <typename Range>
  static VertexSet from_range(const Range& members) {
    VertexSet s;
    for (auto v : members) s.insert(static_cast<Vertex>(v));
    return s;
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool contains(Vertex v) const noexcept { return v < capacity && (bits_ & bit(v)) != 0; }
  constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  // Lowest member; the set must be nonempty.
  constexpr Vertex first() const noexcept {
    assert(!empty());
    return static_cast<Vertex>(std::countr_zero(bits_));
  }
  constexpr Vertex last() const noexcept {
    assert(!empty());
    return static_cast<Vertex>(capacity - 1 - std::countl_zero(bits_));
  }

  constexpr VertexSet& insert(Vertex v) noexcept {
    assert(v < capacity);
    bits_ |= bit(v);
    return *this;
  }
  constexpr VertexSet& erase(Vertex v) noexcept {
    bits_ &= ~bit(v);
    return *this;
  }
  constexpr VertexSet with(Vertex v) const noexcept { return VertexSet(*this).insert(v); }
  constexpr VertexSet without(Vertex v) const noexcept { return VertexSet(*this).erase(v); }

  constexpr bool is_subset_of(VertexSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const noexcept { return (bits_ & other.bits_) != 0; }

  constexpr VertexSet& operator|=(VertexSet o) noexcept { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) noexcept { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) noexcept { bits_ &= ~o.bits_; return *this; }
  constexpr VertexSet& operator^=(VertexSet o) noexcept { bits_ ^= o.bits_; return *this; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) noexcept { return a |= b; }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) noexcept { return a &= b; }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) noexcept { return a -= b; }
  friend constexpr VertexSet operator^(VertexSet a, VertexSet b) noexcept { return a ^= b; }
  constexpr bool operator==(const VertexSet&) const noexcept = default;

  constexpr iterator begin() const noexcept { return iterator(bits_); }
  constexpr iterator end() const noexcept { return iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

 private:
  static constexpr std::uint64_t bit(Vertex v) noexcept { return std::uint64_t{1} << v; }

  std::uint64_t bits_ = 0;
};

// Lexicographic order on the ascending member lists, e.g. {0,1,5} < {0,2} < {1}.
constexpr bool lex_less(VertexSet a, VertexSet b) noexcept {
  const VertexSet diff = a ^ b;
  if (diff.empty()) return false;
  const Vertex x = diff.first();
  const VertexSet above = VertexSet::from_bits(~VertexSet::prefix(x + 1).bits());
  // The lists agree below x; whoever holds x is smaller unless the other list ends there.
  if (a.contains(x)) return b.intersects(above);
  return !a.intersects(above);
}

struct LexLess {
  constexpr bool operator()(VertexSet a, VertexSet b) const noexcept { return lex_less(a, b); }
};

// "{0,2,5}"
inline std::string to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace locdom
