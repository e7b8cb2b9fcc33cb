#include "antichain/setfam.hpp"

#include "antichain/error.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace antichain {

namespace {

void check_ground(int n) {
  if (n < 1 || n > kMaxGroundSet)
    throw InvalidArgument("ground set size must be in [1, 64], got " + std::to_string(n));
}

std::string words_to_string(int n, std::span<const std::uint64_t> words) {
  std::string out = "{";
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i)
      out += ",";
    out += SetWord(n, words[i]).to_string();
  }
  return out + "}";
}

void require_nonempty(const Family &family, const char *what) {
  if (family.empty())
    throw InvalidArgument(std::string(what) + " is undefined for the empty family");
}

} // namespace

SetWord::SetWord(int n, std::uint64_t bits) : n_(n), bits_(bits) {
  check_ground(n);
  if (bits & ~ground_mask(n))
    throw InvalidArgument("set has elements outside [" + std::to_string(n) + "]");
}

SetWord SetWord::from_elements(int n, std::span<const int> elements) {
  check_ground(n);
  std::uint64_t bits = 0;
  for (int e : elements) {
    if (e < 1 || e > n)
      throw InvalidArgument("element " + std::to_string(e) + " outside [1, " +
                            std::to_string(n) + "]");
    bits |= std::uint64_t{1} << (e - 1);
  }
  return SetWord(n, bits);
}

SetWord SetWord::from_elements(int n, std::initializer_list<int> elements) {
  return from_elements(n, std::span<const int>(elements.begin(), elements.size()));
}

std::vector<int> SetWord::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t w = bits_; w; w &= w - 1)
    out.push_back(std::countr_zero(w) + 1);
  return out;
}

std::string SetWord::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first)
      out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

IntersectionSpec::IntersectionSpec(std::vector<int> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const int v = values_[i];
    if (v < 0 || v >= 64)
      throw InvalidArgument("intersection sizes must lie in [0, 63]");
    if (i && values_[i - 1] == v)
      throw InvalidArgument("repeated intersection size " + std::to_string(v));
    mask_ |= std::uint64_t{1} << v;
  }
}

IntersectionSpec IntersectionSpec::everything(int n) {
  std::vector<int> values;
  for (int i = 0; i <= std::min(n, 63); ++i)
    values.push_back(i);
  return IntersectionSpec(std::move(values));
}

std::string IntersectionSpec::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i)
      out += ",";
    out += std::to_string(values_[i]);
  }
  return out + "}";
}

Family::Family(int n) : n_(n) { check_ground(n); }

Family::Family(int n, std::vector<std::uint64_t> members) : n_(n), words_(std::move(members)) {
  check_ground(n);
  const std::uint64_t mask = ground_mask(n);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(words_.size() * 2);
  for (std::uint64_t w : words_) {
    if (w & ~mask)
      throw InvalidArgument("member has elements outside [" + std::to_string(n) + "]");
    if (!seen.insert(w).second)
      throw InvalidArgument("duplicate member " + SetWord(n, w).to_string());
    rank_ = std::max(rank_, popcount(w));
  }
}

Family::Family(int n, std::initializer_list<std::initializer_list<int>> sets) : Family(n) {
  std::vector<std::uint64_t> words;
  for (const auto &s : sets)
    words.push_back(SetWord::from_elements(n, s).bits());
  *this = Family(n, std::move(words));
}

Family Family::from_sets(int n, const std::vector<std::vector<int>> &sets) {
  std::vector<std::uint64_t> words;
  words.reserve(sets.size());
  for (const auto &s : sets)
    words.push_back(SetWord::from_elements(n, s).bits());
  return Family(n, std::move(words));
}

Family Family::layer(int n, int k) {
  check_ground(n);
  std::vector<std::uint64_t> words;
  for_each_subset_of_size(ground_mask(n), k, [&](std::uint64_t w) { words.push_back(w); });
  return Family(n, std::move(words));
}

Family Family::ball(int n, int k) {
  check_ground(n);
  std::vector<std::uint64_t> words;
  for (int i = 0; i <= std::min(k, n); ++i)
    for_each_subset_of_size(ground_mask(n), i, [&](std::uint64_t w) { words.push_back(w); });
  return Family(n, std::move(words));
}

Family Family::punctured_ball(int n, int k, int y) {
  check_ground(n);
  if (y < 1 || y > n)
    throw InvalidArgument("puncture element outside [n]");
  const std::uint64_t ybit = std::uint64_t{1} << (y - 1);
  std::vector<std::uint64_t> words;
  for (int i = 0; i <= std::min(k, n - 1); ++i)
    for_each_subset_of_size(ground_mask(n) & ~ybit, i, [&](std::uint64_t w) {
      words.push_back(w);
      words.push_back(w | ybit);
    });
  std::sort(words.begin(), words.end(), canonical_less);
  return Family(n, std::move(words));
}

bool Family::contains(std::uint64_t word) const {
  return std::find(words_.begin(), words_.end(), word) != words_.end();
}

Family Family::canonical() const {
  std::vector<std::uint64_t> sorted = words_;
  std::sort(sorted.begin(), sorted.end(), canonical_less);
  return Family(n_, std::move(sorted));
}

Family Family::reordered(std::span<const std::size_t> order) const {
  if (order.size() != words_.size())
    throw InvalidArgument("reorder permutation has wrong length");
  std::vector<std::uint64_t> out;
  out.reserve(order.size());
  for (std::size_t i : order)
    out.push_back(words_.at(i));
  return Family(n_, std::move(out));
}

std::vector<std::vector<int>> Family::to_sets() const {
  std::vector<std::vector<int>> out;
  out.reserve(words_.size());
  for (std::uint64_t w : words_)
    out.push_back(SetWord(n_, w).elements());
  return out;
}

std::string Family::to_string() const { return words_to_string(n_, words_); }

bool Family::same_members(const Family &other) const {
  return n_ == other.n_ && canonical().words_ == other.canonical().words_;
}

bool is_sperner(const Family &family) {
  const auto w = family.words();
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j)
      if (i != j && (w[i] & ~w[j]) == 0)
        return false;
  return true;
}

bool is_L_intersecting(const Family &family, const IntersectionSpec &allowed) {
  const auto w = family.words();
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (!allowed.contains(popcount(w[i] & w[j])))
        return false;
  return true;
}

bool is_intersecting(const Family &family) {
  const auto w = family.words();
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if ((w[i] & w[j]) == 0)
        return false;
  return true;
}

bool is_uniform(const Family &family, int k) {
  return std::all_of(family.words().begin(), family.words().end(),
                     [k](std::uint64_t w) { return popcount(w) == k; });
}

int symmetric_diameter(const Family &family) {
  require_nonempty(family, "symmetric diameter");
  const auto w = family.words();
  int best = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      best = std::max(best, popcount(w[i] ^ w[j]));
  return best;
}

int max_setwise_diff(const Family &family) {
  require_nonempty(family, "set-wise difference");
  const auto w = family.words();
  int best = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j)
      if (i != j)
        best = std::max(best, popcount(w[i] & ~w[j]));
  return best;
}

int family_rank(const Family &family) {
  require_nonempty(family, "rank");
  return family.rank();
}

SetWord common_core(const Family &family) {
  require_nonempty(family, "common core");
  std::uint64_t core = ground_mask(family.n());
  for (std::uint64_t w : family.words())
    core &= w;
  return SetWord(family.n(), core);
}

Family shadow(const Family &family, int k) {
  if (k < 0 || k > family.n())
    throw InvalidArgument("shadow level must lie in [0, n]");
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> out;
  for (std::uint64_t w : family.words())
    for_each_subset_of_size(w, k, [&](std::uint64_t t) {
      if (seen.insert(t).second)
        out.push_back(t);
    });
  std::sort(out.begin(), out.end(), canonical_less);
  return Family(family.n(), std::move(out));
}

Family non_shadow(const Family &family, int k) {
  if (k < 0 || k > family.n())
    throw InvalidArgument("shadow level must lie in [0, n]");
  const auto w = family.words();
  std::vector<std::uint64_t> out;
  for_each_subset_of_size(ground_mask(family.n()), k, [&](std::uint64_t t) {
    const bool covered =
        std::any_of(w.begin(), w.end(), [t](std::uint64_t f) { return (t & ~f) == 0; });
    if (!covered)
      out.push_back(t);
  });
  return Family(family.n(), std::move(out));
}

Family translate(const Family &family, const SetWord &by) {
  if (by.n() != family.n())
    throw InvalidArgument("translate: ground sets differ");
  std::vector<std::uint64_t> out;
  out.reserve(family.size());
  for (std::uint64_t w : family.words())
    out.push_back(w ^ by.bits());
  return Family(family.n(), std::move(out));
}

Family complement_family(const Family &family) {
  return translate(family, SetWord::full(family.n()));
}

namespace {

constexpr std::uint64_t kCenterCandidateCap = std::uint64_t{1} << 28;

std::uint64_t count_up_to(int n, int k) {
  // sum_{i<=k} C(n, i), saturating at the cap.
  std::uint64_t total = 0, term = 1;
  for (int i = 0; i <= std::min(k, n); ++i) {
    total += term;
    if (total > kCenterCandidateCap)
      return kCenterCandidateCap + 1;
    term = term * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
  }
  return total;
}

bool within(std::span<const std::uint64_t> words, std::uint64_t center, int k) {
  return std::all_of(words.begin(), words.end(),
                     [&](std::uint64_t w) { return popcount(w ^ center) <= k; });
}

// Candidate centres: every S with |F_1 xor S| <= k (a complete list, since
// any valid centre is within k of F_1), or all of 2^[n] when that is smaller
// and n <= 24.  Fn returns true to stop.
template <class Fn> void for_each_center_candidate(int n, std::uint64_t anchor,
                                                   std::uint64_t free_mask, int k, Fn &&fn) {
  const int free_count = popcount(free_mask);
  const std::uint64_t neighbourhood = count_up_to(free_count, k);
  if (n <= 24 && (std::uint64_t{1} << free_count) <= neighbourhood) {
    // Enumerate all subsets of free_mask.
    std::uint64_t s = 0;
    do {
      if (fn(s))
        return;
      s = (s - free_mask) & free_mask;
    } while (s != 0);
    return;
  }
  if (neighbourhood > kCenterCandidateCap)
    throw InvalidArgument("ball_cover_center: candidate space too large (n=" +
                          std::to_string(n) + ", k=" + std::to_string(k) + ")");
  bool stop = false;
  for (int i = 0; i <= std::min(k, free_count) && !stop; ++i)
    for_each_subset_of_size(free_mask, i, [&](std::uint64_t d) {
      if (!stop && fn((anchor ^ d) & free_mask))
        stop = true;
    });
}

} // namespace

std::optional<SetWord> ball_cover_center(const Family &family, int k) {
  if (k < 0 || k > family.n())
    throw InvalidArgument("ball radius must lie in [0, n]");
  if (family.empty())
    return SetWord::empty(family.n());
  const auto w = family.words();
  std::optional<std::uint64_t> best;
  for_each_center_candidate(family.n(), w[0], ground_mask(family.n()), k, [&](std::uint64_t s) {
    if ((!best || canonical_less(s, *best)) && within(w, s, k))
      best = s;
    return false;
  });
  if (!best)
    return std::nullopt;
  return SetWord(family.n(), *best);
}

std::optional<PuncturedCover> punctured_ball_cover(const Family &family, int k) {
  const int n = family.n();
  if (k < 0 || k >= n)
    throw InvalidArgument("punctured ball radius must lie in [0, n)");
  const auto w = family.words();
  std::optional<PuncturedCover> best;
  for (int y = 1; y <= n; ++y) {
    const std::uint64_t ybit = std::uint64_t{1} << (y - 1);
    const std::uint64_t rest = ground_mask(n) & ~ybit;
    auto fits = [&](std::uint64_t s) {
      return std::all_of(w.begin(), w.end(),
                         [&](std::uint64_t f) { return popcount((f ^ s) & rest) <= k; });
    };
    // Membership of y in S is irrelevant; the least centre has y unset.
    const std::uint64_t anchor = w.empty() ? 0 : w[0];
    for_each_center_candidate(n, anchor, rest, k, [&](std::uint64_t s) {
      if (fits(s) && (!best || canonical_less(s, best->center.bits()) ||
                      (s == best->center.bits() && y < best->y)))
        best = PuncturedCover{SetWord(n, s), y};
      return false;
    });
  }
  return best;
}

} // namespace antichain
