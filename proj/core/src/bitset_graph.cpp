#include "antichain/bitset_graph.hpp"

#include "antichain/error.hpp"

namespace antichain {

void Bitset::set_all() noexcept {
  for (auto &w : words_)
    w = ~std::uint64_t{0};
  if (size_ % 64 && !words_.empty())
    words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
}

bool Bitset::none() const noexcept {
  for (auto w : words_)
    if (w)
      return false;
  return true;
}

std::size_t Bitset::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_)
    c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t Bitset::first() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i])
      return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  return size_;
}

std::size_t Bitset::next(std::size_t from) const noexcept {
  if (from >= size_)
    return size_;
  std::size_t wi = from >> 6;
  std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (w)
      return wi * 64 + static_cast<std::size_t>(std::countr_zero(w));
    if (++wi == words_.size())
      return size_;
    w = words_[wi];
  }
}

Bitset &Bitset::operator&=(const Bitset &o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= o.words_[i];
  return *this;
}

Bitset &Bitset::operator|=(const Bitset &o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] |= o.words_[i];
  return *this;
}

Bitset &Bitset::subtract(const Bitset &o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= ~o.words_[i];
  return *this;
}

void Bitset::clear_through(std::size_t i) noexcept {
  const std::size_t wi = i >> 6;
  for (std::size_t w = 0; w < wi && w < words_.size(); ++w)
    words_[w] = 0;
  if (wi < words_.size()) {
    const std::size_t bit = i & 63;
    words_[wi] &= bit == 63 ? 0 : (~std::uint64_t{0} << (bit + 1));
  }
}

BitGraph::BitGraph(std::size_t order) : rows_(order, Bitset(order)) {}

void BitGraph::add_edge(std::size_t u, std::size_t v) {
  if (u == v)
    throw InvalidArgument("self-loops are not allowed");
  rows_[u].set(v);
  rows_[v].set(u);
}

std::size_t BitGraph::edge_count() const noexcept {
  std::size_t total = 0;
  for (const auto &r : rows_)
    total += r.count();
  return total / 2;
}

std::size_t greedy_colour_bound(const BitGraph &graph, const Bitset &candidates) {
  Bitset uncoloured = candidates;
  std::size_t colours = 0;
  while (uncoloured.any()) {
    ++colours;
    Bitset available = uncoloured;
    for (std::size_t v = available.first(); v < available.size(); v = available.next(v + 1)) {
      uncoloured.reset(v);
      available.subtract(graph.neighbours(v));
    }
  }
  return colours;
}

} // namespace antichain
