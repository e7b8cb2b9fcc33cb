#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace antichain {

inline constexpr int kMaxGroundSet = 64;

/// Mask with bits 0..n-1 set.
constexpr std::uint64_t ground_mask(int n) noexcept {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

constexpr int popcount(std::uint64_t w) noexcept { return std::popcount(w); }

/// Canonical order on subsets: by cardinality, then by numeric value.
constexpr bool canonical_less(std::uint64_t a, std::uint64_t b) noexcept {
  const int ca = std::popcount(a), cb = std::popcount(b);
  return ca != cb ? ca < cb : a < b;
}

/// A subset of [n] = {1..n}; element i is stored in bit i-1.
class SetWord {
public:
  SetWord() = default;
  /// Throws InvalidArgument if n is outside [1, 64] or bits has a bit at >= n.
  SetWord(int n, std::uint64_t bits);

  /// From 1-based elements. Throws on out-of-range elements.
  static SetWord from_elements(int n, std::span<const int> elements);
  static SetWord from_elements(int n, std::initializer_list<int> elements);
  static SetWord empty(int n) { return SetWord(n, 0); }
  static SetWord full(int n) { return SetWord(n, ground_mask(n)); }

  int n() const noexcept { return n_; }
  std::uint64_t bits() const noexcept { return bits_; }
  int size() const noexcept { return std::popcount(bits_); }
  bool contains(int element) const noexcept {
    return element >= 1 && element <= n_ && ((bits_ >> (element - 1)) & 1U);
  }
  std::vector<int> elements() const;
  std::string to_string() const; ///< "{1,3}"

  friend bool operator==(const SetWord &, const SetWord &) = default;

private:
  int n_ = 1;
  std::uint64_t bits_ = 0;
};

/// Sorted, duplicate-free set of admissible intersection sizes.
class IntersectionSpec {
public:
  IntersectionSpec() = default;
  /// Sorts; throws InvalidArgument on negatives, repeats or values >= 64.
  explicit IntersectionSpec(std::vector<int> values);
  IntersectionSpec(std::initializer_list<int> values)
      : IntersectionSpec(std::vector<int>(values)) {}

  /// {0, 1, ..., n}
  static IntersectionSpec everything(int n);

  const std::vector<int> &values() const noexcept { return values_; }
  int size() const noexcept { return static_cast<int>(values_.size()); }
  bool contains(int value) const noexcept {
    return value >= 0 && value < 64 && ((mask_ >> value) & 1U);
  }
  int max() const { return values_.empty() ? -1 : values_.back(); }
  std::string to_string() const;

  friend bool operator==(const IntersectionSpec &a, const IntersectionSpec &b) {
    return a.values_ == b.values_;
  }

private:
  std::vector<int> values_;
  std::uint64_t mask_ = 0;
};

/// Ordered list of distinct subsets of [n]. Order is data.
class Family {
public:
  explicit Family(int n = 1);
  /// Throws InvalidArgument on duplicates or members outside [n].
  Family(int n, std::vector<std::uint64_t> members);
  Family(int n, std::initializer_list<std::initializer_list<int>> sets);

  static Family from_sets(int n, const std::vector<std::vector<int>> &sets);
  /// Every subset of [n] of size exactly k, canonical order.
  static Family layer(int n, int k);
  /// Hamming ball K(n, k): all subsets of size <= k.
  static Family ball(int n, int k);
  /// Punctured ball K_y(n, k): all F with |F \ {y}| <= k (y is 1-based).
  static Family punctured_ball(int n, int k, int y);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  SetWord operator[](std::size_t i) const { return SetWord(n_, words_[i]); }
  std::span<const std::uint64_t> words() const noexcept { return words_; }
  /// Largest member size; -1 when empty.
  int rank() const noexcept { return rank_; }

  bool contains(std::uint64_t word) const;
  Family canonical() const;
  Family reordered(std::span<const std::size_t> order) const;
  std::vector<std::vector<int>> to_sets() const;
  std::string to_string() const;

  friend bool operator==(const Family &a, const Family &b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }
  /// Same members, any order.
  bool same_members(const Family &other) const;

private:
  int n_;
  std::vector<std::uint64_t> words_;
  int rank_ = -1;
};

// Predicates. All vacuously true on the empty family.
bool is_sperner(const Family &family);
bool is_L_intersecting(const Family &family, const IntersectionSpec &allowed);
/// Every pair of distinct members intersects.
bool is_intersecting(const Family &family);
bool is_uniform(const Family &family, int k);

// Aggregates. Throw InvalidArgument on the empty family.
int symmetric_diameter(const Family &family);
int max_setwise_diff(const Family &family);
int family_rank(const Family &family);
SetWord common_core(const Family &family);

/// k-sets of [n] contained in some member, canonical order.
Family shadow(const Family &family, int k);
/// k-sets of [n] contained in no member, canonical order.
Family non_shadow(const Family &family, int k);
/// Member-wise symmetric difference, order preserved.
Family translate(const Family &family, const SetWord &by);
Family complement_family(const Family &family);

/// Canonically least S with |F xor S| <= k for every member, if any.
std::optional<SetWord> ball_cover_center(const Family &family, int k);

struct PuncturedCover {
  SetWord center;
  int y; ///< 1-based
  friend bool operator==(const PuncturedCover &, const PuncturedCover &) = default;
};
/// (S, y) with |(F xor S) \ {y}| <= k for every member; least S, then least y.
std::optional<PuncturedCover> punctured_ball_cover(const Family &family, int k);

/// Calls fn(word) for every k-subset of mask in increasing numeric order.
template <class Fn> void for_each_subset_of_size(std::uint64_t mask, int k, Fn &&fn) {
  const int m = std::popcount(mask);
  if (k < 0 || k > m)
    return;
  std::uint64_t positions[64];
  int count = 0;
  for (std::uint64_t w = mask; w; w &= w - 1)
    positions[count++] = w & (~w + 1);
  // Gosper's hack over the compressed index space, then scatter.
  if (k == 0) {
    fn(std::uint64_t{0});
    return;
  }
  if (m == 64 && k == 64) {
    fn(mask);
    return;
  }
  std::uint64_t c = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = m == 64 ? 0 : (std::uint64_t{1} << m);
  while (true) {
    std::uint64_t word = 0;
    for (std::uint64_t t = c; t; t &= t - 1)
      word |= positions[std::countr_zero(t)];
    fn(word);
    const std::uint64_t low = c & (~c + 1);
    const std::uint64_t ripple = c + low;
    if (ripple == 0 || (limit && ripple >= limit))
      break;
    c = (((ripple ^ c) >> 2) / low) | ripple;
    if (limit && c >= limit)
      break;
  }
}

} // namespace antichain
