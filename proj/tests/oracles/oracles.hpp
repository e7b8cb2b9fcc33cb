#pragma once

// Slow reference implementations used to cross-check the library.  They share
// no code with it beyond the value types' accessors.

#include <antichain/multilinear.hpp>
#include <antichain/numeric.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace oracle {

using antichain::Integer;
using antichain::Rational;
using Word = std::uint64_t;
using Pair = std::function<bool(Word, Word)>;

inline int bits(Word w) { return std::popcount(w); }

inline Integer pascal(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    return 0;
  std::vector<Integer> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<Integer> next(i + 1, 1);
    for (int j = 1; j < i; ++j)
      next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[k];
}

/// Every subfamily of 2^[n] (n <= 4) is tried; returns the largest size and
/// all families attaining it, each as a sorted word list.
struct Extremal {
  std::size_t best = 0;
  std::vector<std::vector<Word>> maximisers;
};

inline Extremal exhaustive_family_search(int n, const Pair &ok, const std::function<bool(Word)> &keep = {}) {
  std::vector<Word> universe;
  for (Word w = 0; w < (Word{1} << n); ++w)
    if (!keep || keep(w))
      universe.push_back(w);
  Extremal out;
  const std::size_t m = universe.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<Word> fam;
    for (std::size_t i = 0; i < m; ++i)
      if ((mask >> i) & 1U)
        fam.push_back(universe[i]);
    if (fam.size() < out.best)
      continue;
    bool valid = true;
    for (std::size_t i = 0; i < fam.size() && valid; ++i)
      for (std::size_t j = i + 1; j < fam.size() && valid; ++j)
        valid = ok(fam[i], fam[j]);
    if (!valid)
      continue;
    if (fam.size() > out.best) {
      out.best = fam.size();
      out.maximisers.clear();
    }
    out.maximisers.push_back(fam);
  }
  return out;
}

using Matrix = std::vector<std::vector<bool>>;

/// Plain recursive maximum clique with only the size bound.
inline std::size_t simple_max_clique(const Matrix &adj) {
  const std::size_t n = adj.size();
  std::size_t best = 0;
  std::vector<std::size_t> cur;
  std::function<void(std::vector<std::size_t>)> go = [&](std::vector<std::size_t> cand) {
    if (cur.size() > best)
      best = cur.size();
    while (!cand.empty()) {
      if (cur.size() + cand.size() <= best)
        return;
      const std::size_t v = cand.front();
      cand.erase(cand.begin());
      std::vector<std::size_t> next;
      for (std::size_t u : cand)
        if (adj[v][u])
          next.push_back(u);
      cur.push_back(v);
      go(next);
      cur.pop_back();
    }
  };
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i)
    all[i] = i;
  go(all);
  return best;
}

/// Maximal cliques by extension: every clique is grown in increasing vertex
/// order and reported when nothing can be added.
inline std::vector<std::vector<std::size_t>> naive_maximal_cliques(const Matrix &adj) {
  const std::size_t n = adj.size();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> go = [&](std::size_t from) {
    bool extendable = false;
    for (std::size_t v = 0; v < n; ++v) {
      if (std::find(cur.begin(), cur.end(), v) != cur.end())
        continue;
      bool all = true;
      for (std::size_t u : cur)
        all = all && adj[u][v];
      if (!all)
        continue;
      extendable = true;
      if (v >= from) {
        cur.push_back(v);
        go(v + 1);
        cur.pop_back();
      }
    }
    if (!extendable)
      out.push_back(cur);
  };
  go(0);
  return out;
}

/// Value of a polynomial at a 0/1 point straight from its coefficients.
inline Rational value_at(const antichain::Poly &p, Word point) {
  Rational sum = 0;
  for (const auto &[mono, coeff] : p.terms())
    if ((mono & ~point) == 0)
      sum += coeff;
  return sum;
}

/// Product of sum_{i in b} x_i - shift over the factors, evaluated directly.
inline Integer unreduced_value(const std::vector<std::pair<Word, long>> &factors, Word point) {
  Integer v = 1;
  for (const auto &[b, shift] : factors)
    v *= Integer(bits(b & point) - shift);
  return v;
}

/// Rank over Q by naive Gauss-Jordan elimination.
inline std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0)
      ++pivot;
    if (pivot == rows.size())
      continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r][c] != 0) {
        const Rational f = rows[r][c] / rows[rank][c];
        for (std::size_t j = c; j < cols; ++j)
          rows[r][j] -= f * rows[rank][j];
      }
    ++rank;
  }
  return rank;
}

/// Multilinear polynomials are determined by their values on {0,1}^n, so
/// the rank of the value table is the rank of the polynomials.
inline std::size_t rank_by_values(const std::vector<antichain::Poly> &polys, int n) {
  std::vector<std::vector<Rational>> rows;
  for (const auto &p : polys) {
    std::vector<Rational> row;
    for (Word x = 0; x < (Word{1} << n); ++x)
      row.push_back(value_at(p, x));
    rows.push_back(std::move(row));
  }
  return rational_rank(std::move(rows));
}

/// Some centre S has every member within distance k.
inline bool has_ball_cover(int n, const std::vector<Word> &fam, int k) {
  for (Word s = 0; s < (Word{1} << n); ++s) {
    bool ok = true;
    for (Word f : fam)
      ok = ok && bits(f ^ s) <= k;
    if (ok)
      return true;
  }
  return false;
}

inline bool has_punctured_cover(int n, const std::vector<Word> &fam, int k) {
  for (Word s = 0; s < (Word{1} << n); ++s)
    for (int y = 0; y < n; ++y) {
      bool ok = true;
      for (Word f : fam)
        ok = ok && bits((f ^ s) & ~(Word{1} << y)) <= k;
      if (ok)
        return true;
    }
  return false;
}

} // namespace oracle
