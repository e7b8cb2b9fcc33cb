#pragma once

#include "antichain/setfam.hpp"

#include <algorithm>
#include <random>

namespace antichain {

/// Random maximal-ish family: candidates are drawn uniformly from `pool`
/// (a list of words over [n]) and kept while `compatible(new, old)` holds
/// against every kept member.  `attempts` bounds the number of draws.
template <class Pred>
Family sample_family(int n, const std::vector<std::uint64_t> &pool, std::mt19937_64 &rng,
                     std::size_t attempts, Pred &&compatible) {
  std::vector<std::uint64_t> kept;
  if (pool.empty())
    return Family(n);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (std::size_t a = 0; a < attempts; ++a) {
    const std::uint64_t w = pool[pick(rng)];
    bool ok = true;
    for (std::uint64_t u : kept)
      if (u == w || !compatible(w, u)) {
        ok = false;
        break;
      }
    if (ok)
      kept.push_back(w);
  }
  return Family(n, std::move(kept));
}

/// Non-empty intersecting (k+1)-uniform family on [n]; requires n >= k+1.
inline Family sample_intersecting_uniform(int n, int k, std::mt19937_64 &rng) {
  std::vector<std::uint64_t> pool;
  for_each_subset_of_size(ground_mask(n), k + 1, [&](std::uint64_t w) { pool.push_back(w); });
  return sample_family(n, pool, rng, 4 * pool.size(),
                       [](std::uint64_t a, std::uint64_t b) { return (a & b) != 0; });
}

/// L-intersecting Sperner family on [n] drawn from sets of size <= max_size.
inline Family sample_L_sperner(int n, const IntersectionSpec &allowed, int max_size,
                               std::mt19937_64 &rng) {
  std::vector<std::uint64_t> pool;
  for (int s = 0; s <= std::min(max_size, n); ++s)
    for_each_subset_of_size(ground_mask(n), s, [&](std::uint64_t w) { pool.push_back(w); });
  return sample_family(n, pool, rng, 2 * pool.size() + 16, [&](std::uint64_t a, std::uint64_t b) {
    return (a & ~b) && (b & ~a) && allowed.contains(popcount(a & b));
  });
}

} // namespace antichain
