#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace seagull {

/// Subset of the vertices 0..63, one bit per vertex.
struct VertexSet {
  std::uint64_t bits = 0;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t raw) : bits(raw) {}

  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

  // All vertices 0..n-1. n == 64 needs the full word, (1 << 64) is UB.
  static constexpr VertexSet all(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  static constexpr VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.add(v);
    return s;
  }

  constexpr bool empty() const { return bits == 0; }
  constexpr int size() const { return std::popcount(bits); }
  constexpr bool contains(int v) const { return (bits >> v) & 1u; }
  constexpr void add(int v) { bits |= std::uint64_t{1} << v; }
  constexpr void remove(int v) { bits &= ~(std::uint64_t{1} << v); }

  // Lowest set vertex; 64 when the set is empty.
  constexpr int lowest() const { return std::countr_zero(bits); }

  constexpr bool intersects(VertexSet o) const { return (bits & o.bits) != 0; }
  constexpr bool contains_all(VertexSet o) const { return (o.bits & ~bits) == 0; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits | b.bits); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits & b.bits); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits & ~b.bits); }
  constexpr VertexSet& operator|=(VertexSet o) { bits |= o.bits; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits &= o.bits; return *this; }
  friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }
  friend constexpr bool operator<(VertexSet a, VertexSet b) { return a.bits < b.bits; }

  struct iterator {
    std::uint64_t rest;
    int operator*() const { return std::countr_zero(rest); }
    iterator& operator++() { rest &= rest - 1; return *this; }
    bool operator!=(const iterator& o) const { return rest != o.rest; }
  };
  iterator begin() const { return {bits}; }
  iterator end() const { return {0}; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int v : *this) out.push_back(v);
    return out;
  }
};

/// Fixed-capacity bit row over an arbitrary number of nodes. Used for
/// adjacency rows of auxiliary graphs that may exceed 64 nodes.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_(static_cast<std::size_t>((n + 63) / 64), 0) {}

  int capacity() const { return n_; }

  bool test(int i) const { return (w_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u; }
  void set(int i) { w_[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[static_cast<std::size_t>(i >> 6)] &= ~(std::uint64_t{1} << (i & 63)); }

  bool none() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  // Lowest set index; -1 when empty.
  int first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return static_cast<int>(i * 64) + std::countr_zero(w_[i]);
    return -1;
  }

  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) = default;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      for (std::uint64_t w = w_[i]; w; w &= w - 1)
        f(static_cast<int>(i * 64) + std::countr_zero(w));
    }
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace seagull
