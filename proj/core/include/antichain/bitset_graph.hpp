#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace antichain {

/// Fixed-capacity dynamic bitset for vertex sets.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set_all() noexcept;
  bool none() const noexcept;
  bool any() const noexcept { return !none(); }
  std::size_t count() const noexcept;
  /// Index of the lowest set bit, or size() when empty.
  std::size_t first() const noexcept;
  /// Lowest set bit with index >= from, or size().
  std::size_t next(std::size_t from) const noexcept;

  Bitset &operator&=(const Bitset &o) noexcept;
  Bitset &operator|=(const Bitset &o) noexcept;
  /// this &= ~o
  Bitset &subtract(const Bitset &o) noexcept;
  friend Bitset operator&(Bitset a, const Bitset &b) noexcept { return a &= b; }
  friend bool operator==(const Bitset &, const Bitset &) = default;

  /// Clears every bit with index <= i.
  void clear_through(std::size_t i) noexcept;

  const std::vector<std::uint64_t> &words() const noexcept { return words_; }

  template <class Fn> void for_each(Fn &&fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      for (std::uint64_t bits = words_[w]; bits; bits &= bits - 1)
        fn(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
  }

private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Undirected simple graph as a symmetric bit-matrix.
class BitGraph {
public:
  BitGraph() = default;
  explicit BitGraph(std::size_t order);

  std::size_t order() const noexcept { return rows_.size(); }
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const noexcept { return rows_[u].test(v); }
  const Bitset &neighbours(std::size_t v) const noexcept { return rows_[v]; }
  std::size_t degree(std::size_t v) const noexcept { return rows_[v].count(); }
  std::size_t edge_count() const noexcept;

private:
  std::vector<Bitset> rows_;
};

/// Greedy sequential colouring of `candidates` in index order; returns the
/// number of colour classes, an upper bound on the clique number.
std::size_t greedy_colour_bound(const BitGraph &graph, const Bitset &candidates);

} // namespace antichain
