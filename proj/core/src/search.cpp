#include "antichain/search.hpp"

#include "antichain/error.hpp"
#include "antichain/family_io.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <mutex>
#include <thread>

namespace antichain {

using nlohmann::json;

Family CompatGraph::family_of(const std::vector<std::size_t> &clique) const {
  std::vector<std::uint64_t> words;
  words.reserve(clique.size());
  for (std::size_t v : clique)
    words.push_back(vertices.at(v));
  return Family(n, std::move(words));
}

CompatGraph build_graph(int n, const VertexFilter &vertex_filter,
                        const PairPredicate &pair_predicate, std::string predicate_name,
                        bool permutation_invariant) {
  if (n < 1 || n > kMaxSearchGroundSet)
    throw SizeCapError("search ground set must satisfy 1 <= n <= " +
                       std::to_string(kMaxSearchGroundSet) + ", got " + std::to_string(n));
  CompatGraph g;
  g.n = n;
  g.predicate_name = std::move(predicate_name);
  g.permutation_invariant = permutation_invariant;
  for (int size = 0; size <= n; ++size)
    for_each_subset_of_size(ground_mask(n), size, [&](std::uint64_t w) {
      if (!vertex_filter || vertex_filter(w)) {
        if (g.vertices.size() >= kMaxGraphOrder)
          throw SizeCapError("compatibility graph exceeds " + std::to_string(kMaxGraphOrder) +
                             " vertices");
        g.vertices.push_back(w);
      }
    });
  g.adjacency = BitGraph(g.vertices.size());
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j)
      if (pair_predicate(g.vertices[i], g.vertices[j]))
        g.adjacency.add_edge(i, j);
  return g;
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
  case Verdict::consistent:
    return "consistent";
  case Verdict::bound_tight:
    return "bound_tight";
  case Verdict::counterexample:
    return "COUNTEREXAMPLE";
  case Verdict::inconclusive:
    return "inconclusive";
  }
  return "unknown";
}

namespace {

struct Aborted {};

class CliqueEngine {
public:
  CliqueEngine(const CompatGraph &graph, std::uint64_t node_cap)
      : graph_(graph), adj_(graph.adjacency), cap_(node_cap) {}

  std::uint64_t nodes() const { return nodes_.load(); }
  bool aborted() const { return aborted_.load(); }
  int best() const { return best_.load(); }

  void raise_best(int value) {
    int current = best_.load();
    while (value > current && !best_.compare_exchange_weak(current, value)) {
    }
  }

  void tick() {
    const auto count = nodes_.fetch_add(1) + 1;
    if (cap_ && count > cap_) {
      aborted_.store(true);
      throw Aborted{};
    }
    if (aborted_.load())
      throw Aborted{};
  }

  // Colour classes of P in greedy order; order[i] has bound colour[i].
  void colour_sort(const Bitset &p, std::vector<std::size_t> &order,
                   std::vector<int> &colour) const {
    order.clear();
    colour.clear();
    Bitset uncoloured = p;
    int c = 0;
    while (uncoloured.any()) {
      ++c;
      Bitset available = uncoloured;
      for (std::size_t v = available.first(); v < available.size(); v = available.next(v + 1)) {
        uncoloured.reset(v);
        available.subtract(adj_.neighbours(v));
        order.push_back(v);
        colour.push_back(c);
      }
    }
  }

  // Branch and bound in the style of MCQ/BBMC.
  void expand(int size, Bitset p) {
    tick();
    std::vector<std::size_t> order;
    std::vector<int> colour;
    colour_sort(p, order, colour);
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (size + colour[idx] <= best_.load())
        return;
      const std::size_t v = order[idx];
      Bitset next = p & adj_.neighbours(v);
      if (next.none())
        raise_best(size + 1);
      else
        expand(size + 1, std::move(next));
      p.reset(v);
    }
  }

  // Lexicographically least clique of the given size among candidates.
  bool lex_least(std::vector<std::size_t> &chosen, Bitset p, std::size_t target) {
    tick();
    if (chosen.size() == target)
      return true;
    const std::size_t need = target - chosen.size();
    if (p.count() < need || greedy_colour_bound(adj_, p) < need)
      return false;
    for (std::size_t v = p.first(); v < p.size(); v = p.next(v + 1)) {
      chosen.push_back(v);
      if (lex_least(chosen, p & adj_.neighbours(v), target))
        return true;
      chosen.pop_back();
      p.reset(v);
      if (p.count() < need)
        return false;
    }
    return false;
  }

  void all_of_size(std::vector<std::size_t> &chosen, Bitset p, std::size_t target,
                   std::vector<std::vector<std::size_t>> &out, std::size_t limit) {
    tick();
    if (chosen.size() == target) {
      out.push_back(chosen);
      return;
    }
    const std::size_t need = target - chosen.size();
    if (p.count() < need || greedy_colour_bound(adj_, p) < need)
      return;
    for (std::size_t v = p.first(); v < p.size() && out.size() < limit; v = p.next(v + 1)) {
      chosen.push_back(v);
      all_of_size(chosen, p & adj_.neighbours(v), target, out, limit);
      chosen.pop_back();
      p.reset(v);
      if (p.count() < need)
        return;
    }
  }

private:
  const CompatGraph &graph_;
  const BitGraph &adj_;
  std::uint64_t cap_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<int> best_{0};
  std::atomic<bool> aborted_{false};
};

struct Task {
  int size;  ///< members already chosen
  int bound; ///< colour bound on the whole branch
  Bitset candidates;
};

// Orbit signature of w under the permutations of [n] fixing each chosen
// member: the size of w inside every atom of the Venn partition.
std::vector<int> orbit_signature(int n, const std::vector<std::uint64_t> &chosen, std::uint64_t w) {
  std::map<std::uint64_t, int> atoms; // membership pattern -> count in w
  for (int e = 0; e < n; ++e) {
    std::uint64_t pattern = 0;
    for (std::size_t i = 0; i < chosen.size(); ++i)
      if ((chosen[i] >> e) & 1U)
        pattern |= std::uint64_t{1} << i;
    atoms[pattern] += static_cast<int>((w >> e) & 1U);
  }
  std::vector<int> sig;
  for (const auto &[pattern, count] : atoms)
    sig.push_back(count);
  return sig;
}

// Top-level tasks.  Without symmetry: the colour-ordered root branches of the
// sequential algorithm, each made independent.  With symmetry: every clique
// is mapped by some permutation onto one containing orbit representatives at
// the first `depth` levels, so branching over representatives only is exact.
std::vector<Task> root_tasks(const CompatGraph &g, CliqueEngine &engine, bool symmetric) {
  const std::size_t order = g.order();
  Bitset all(order);
  all.set_all();
  std::vector<Task> tasks;
  if (!symmetric) {
    std::vector<std::size_t> ord;
    std::vector<int> colour;
    engine.colour_sort(all, ord, colour);
    Bitset before(order);
    std::vector<Bitset> prefix;
    prefix.reserve(ord.size());
    for (std::size_t i = 0; i < ord.size(); ++i) {
      prefix.push_back(before);
      before.set(ord[i]);
    }
    for (std::size_t idx = ord.size(); idx-- > 0;)
      tasks.push_back(Task{1, colour[idx], prefix[idx] & g.adjacency.neighbours(ord[idx])});
    return tasks;
  }
  constexpr int kSymmetricDepth = 2;
  struct Partial {
    std::vector<std::uint64_t> members;
    Bitset candidates;
  };
  std::vector<Partial> frontier{Partial{{}, all}};
  for (int depth = 0; depth < kSymmetricDepth; ++depth) {
    std::vector<Partial> next;
    for (const auto &part : frontier) {
      std::map<std::vector<int>, std::size_t> reps;
      part.candidates.for_each([&](std::size_t v) {
        reps.try_emplace(orbit_signature(g.n, part.members, g.vertices[v]), v);
      });
      if (reps.empty()) {
        engine.raise_best(static_cast<int>(part.members.size()));
        continue;
      }
      std::vector<std::size_t> chosen;
      for (const auto &[sig, v] : reps)
        chosen.push_back(v);
      std::sort(chosen.begin(), chosen.end());
      for (std::size_t v : chosen) {
        Partial child{part.members, part.candidates & g.adjacency.neighbours(v)};
        child.members.push_back(g.vertices[v]);
        next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }
  for (auto &part : frontier) {
    engine.raise_best(static_cast<int>(part.members.size()));
    if (part.candidates.any())
      tasks.push_back(Task{static_cast<int>(part.members.size()), std::numeric_limits<int>::max(),
                           std::move(part.candidates)});
  }
  return tasks;
}

void run_tasks(CliqueEngine &engine, std::vector<Task> &tasks, unsigned workers) {
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      while (true) {
        const std::size_t i = cursor.fetch_add(1);
        if (i >= tasks.size())
          return;
        const Task &task = tasks[i];
        if (task.bound <= engine.best())
          continue;
        if (task.candidates.none())
          engine.raise_best(task.size);
        else
          engine.expand(task.size, task.candidates);
      }
    } catch (const Aborted &) {
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      failure = std::current_exception();
    }
  };
  const unsigned count = std::max(1U, workers);
  if (count == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < count; ++i)
      pool.emplace_back(worker);
    for (auto &t : pool)
      t.join();
  }
  if (failure)
    std::rethrow_exception(failure);
}

} // namespace

SearchResult max_clique(const CompatGraph &graph, const SearchOptions &options) {
  SearchResult result;
  result.predicate_name = graph.predicate_name;
  result.witness = Family(graph.n);
  if (graph.order() == 0)
    return result;

  const bool symmetric = options.symmetry == SymmetryMode::on && graph.permutation_invariant;
  result.symmetry_used = symmetric;
  CliqueEngine engine(graph, options.node_cap);
  try {
    engine.raise_best(1);
    auto tasks = root_tasks(graph, engine, symmetric);
    run_tasks(engine, tasks, options.workers);
  } catch (const Aborted &) {
  }
  if (engine.aborted()) {
    result.optimum = engine.best();
    result.explored_nodes = engine.nodes();
    result.verdict = Verdict::inconclusive;
    return result;
  }
  result.optimum = engine.best();

  std::vector<std::size_t> chosen;
  Bitset all(graph.order());
  all.set_all();
  bool found = false;
  try {
    found = engine.lex_least(chosen, all, static_cast<std::size_t>(result.optimum));
  } catch (const Aborted &) {
    result.explored_nodes = engine.nodes();
    result.verdict = Verdict::inconclusive;
    return result;
  }
  if (!found)
    throw InternalError("no clique of the computed optimum size was found");
  result.witness = graph.family_of(chosen);
  result.explored_nodes = engine.nodes();
  return result;
}

std::vector<Family> maximum_cliques(const CompatGraph &graph, int size, std::size_t limit) {
  std::vector<Family> out;
  if (size < 0)
    return out;
  if (size == 0) {
    out.emplace_back(graph.n);
    return out;
  }
  CliqueEngine engine(graph, 0);
  Bitset all(graph.order());
  all.set_all();
  std::vector<std::vector<std::size_t>> cliques;
  std::vector<std::size_t> chosen;
  engine.all_of_size(chosen, all, static_cast<std::size_t>(size), cliques, limit);
  out.reserve(cliques.size());
  for (const auto &c : cliques)
    out.push_back(graph.family_of(c));
  return out;
}

namespace {

bool bron_kerbosch(const BitGraph &adj, std::vector<std::size_t> &r, Bitset p, Bitset x,
                   const std::function<bool(const std::vector<std::size_t> &)> &fn) {
  if (p.none()) {
    if (x.none()) {
      std::vector<std::size_t> sorted = r;
      std::sort(sorted.begin(), sorted.end());
      return fn(sorted);
    }
    return true;
  }
  // Tomita pivot: maximise |P cap N(u)| over u in P cup X.
  std::size_t pivot = p.first(), best = 0;
  Bitset px = p;
  px |= x;
  px.for_each([&](std::size_t u) {
    const std::size_t c = (p & adj.neighbours(u)).count();
    if (c > best || (c == best && u < pivot)) {
      best = c;
      pivot = u;
    }
  });
  Bitset branch = p;
  branch.subtract(adj.neighbours(pivot));
  for (std::size_t v = branch.first(); v < branch.size(); v = branch.next(v + 1)) {
    r.push_back(v);
    if (!bron_kerbosch(adj, r, p & adj.neighbours(v), x & adj.neighbours(v), fn))
      return false;
    r.pop_back();
    p.reset(v);
    x.set(v);
  }
  return true;
}

} // namespace

bool for_each_maximal_clique(const CompatGraph &graph,
                             const std::function<bool(const std::vector<std::size_t> &)> &fn) {
  std::vector<std::size_t> r;
  Bitset p(graph.order()), x(graph.order());
  p.set_all();
  return bron_kerbosch(graph.adjacency, r, std::move(p), std::move(x), fn);
}

namespace {

void settle_verdict(SearchResult &result) {
  if (result.verdict == Verdict::inconclusive || !result.compared_bound)
    return;
  const Integer opt(result.optimum);
  if (opt > result.compared_bound->value)
    result.verdict = Verdict::counterexample;
  else if (opt == result.compared_bound->value)
    result.verdict = Verdict::bound_tight;
  else
    result.verdict = Verdict::consistent;
}

void add_check(SearchResult &result, BoundValue bound) {
  const bool holds = result.verdict == Verdict::inconclusive || Integer(result.optimum) <= bound.value;
  result.extra_checks.push_back(BoundCheck{std::move(bound), holds});
}

void revalidate(const SearchResult &result, const std::function<bool(const Family &)> &valid) {
  if (result.verdict == Verdict::inconclusive)
    return;
  if (static_cast<int>(result.witness.size()) != result.optimum || !valid(result.witness))
    throw InternalError("search witness failed re-validation for " + result.predicate_name);
}

SymmetryMode resolve(SymmetryMode mode, bool sperner_search, int n) {
  if (mode != SymmetryMode::automatic)
    return mode;
  return sperner_search && n >= 6 ? SymmetryMode::on : SymmetryMode::off;
}

} // namespace

SearchResult extremal_diameter(int n, int d, const SearchOptions &options) {
  if (!(n > d && d >= 0))
    throw InvalidArgument("extremal_diameter needs n > d >= 0");
  const auto g = build_graph(
      n, nullptr, [d](std::uint64_t a, std::uint64_t b) { return popcount(a ^ b) <= d; },
      "pairwise |A xor B| <= " + std::to_string(d), true);
  SearchOptions opts = options;
  opts.symmetry = resolve(options.symmetry, false, n);
  auto result = max_clique(g, opts);
  result.compared_bound = kleitman_bound(n, d);
  settle_verdict(result);
  revalidate(result, [d](const Family &f) { return f.empty() || symmetric_diameter(f) <= d; });
  return result;
}

SearchResult extremal_L_sperner(int n, const IntersectionSpec &allowed, const SearchOptions &options) {
  if (allowed.size() == 0)
    throw InvalidArgument("L must be non-empty");
  if (allowed.max() >= n)
    throw InvalidArgument("every element of L must be < n");
  const auto g = build_graph(
      n, nullptr,
      [allowed](std::uint64_t a, std::uint64_t b) {
        return (a & ~b) != 0 && (b & ~a) != 0 && allowed.contains(popcount(a & b));
      },
      "Sperner, pairwise |A cap B| in " + allowed.to_string(), true);
  SearchOptions opts = options;
  opts.symmetry = resolve(options.symmetry, true, n);
  auto result = max_clique(g, opts);
  auto [general, target] = snevily_bounds(n, allowed.size());
  if (n >= 2 * allowed.size() - 1) {
    result.compared_bound = target;
    settle_verdict(result);
    add_check(result, general);
  } else {
    result.compared_bound = general;
    settle_verdict(result);
  }
  revalidate(result, [&](const Family &f) { return is_sperner(f) && is_L_intersecting(f, allowed); });
  return result;
}

SearchResult extremal_setwise(int n, int k, std::optional<int> t_cap, bool sperner,
                              const SearchOptions &options) {
  if (k < 0)
    throw InvalidArgument("k must be non-negative");
  if (t_cap && (*t_cap < 0 || *t_cap > n))
    throw InvalidArgument("rank cap must lie in [0, n]");
  const int cap = t_cap.value_or(n);
  const auto g = build_graph(
      n, [cap](std::uint64_t w) { return popcount(w) <= cap; },
      [k, sperner](std::uint64_t a, std::uint64_t b) {
        const int ab = popcount(a & ~b), ba = popcount(b & ~a);
        return ab <= k && ba <= k && (!sperner || (ab > 0 && ba > 0));
      },
      std::string(sperner ? "Sperner, " : "") + "pairwise |A \\ B| <= " + std::to_string(k) +
          ", rank <= " + std::to_string(cap),
      true);
  SearchOptions opts = options;
  opts.symmetry = resolve(options.symmetry, sperner, n);
  auto result = max_clique(g, opts);

  if (sperner) {
    result.compared_bound = sperner_setwise_bound(n, k);
    settle_verdict(result);
    add_check(result, frankl_difference_bound(n, k));
  } else if (t_cap && k > 0 && 2 * cap <= k + n) {
    // Rank exactly t' for some t' <= cap: K(n, t') when t' <= k, otherwise
    // the larger of the two set-wise alternatives.
    Integer best = 0;
    for (int t = 0; t <= cap; ++t) {
      const Integer v = t <= k ? binom_sum(n, 0, t)
                               : std::max(formula::setwise_trivial(n, t, k),
                                          formula::setwise_nontrivial(n, t, k));
      best = std::max(best, v);
    }
    result.compared_bound = BoundValue{"setwise_rank_capped",
                                       "bounded set-wise differences, maximised over rank <= cap",
                                       {{"n", n}, {"k", k}, {"t_cap", cap}},
                                       best,
                                       "max over t <= t_cap of the applicable rank-t bound"};
    settle_verdict(result);
    add_check(result, frankl_difference_bound(n, k + 1));
  } else {
    result.compared_bound = frankl_difference_bound(n, k + 1);
    settle_verdict(result);
  }
  revalidate(result, [&](const Family &f) {
    return f.empty() || (max_setwise_diff(f) <= k && f.rank() <= cap && (!sperner || is_sperner(f)));
  });
  return result;
}

json to_json(const SearchResult &r, bool include_nodes) {
  json j{{"predicate", r.predicate_name},
         {"optimum", r.optimum},
         {"witness", to_json(r.witness)},
         {"verdict", to_string(r.verdict)},
         {"symmetry_breaking", r.symmetry_used}};
  if (include_nodes)
    j["explored_nodes"] = r.explored_nodes;
  j["compared_bound"] = r.compared_bound ? to_json(*r.compared_bound) : json(nullptr);
  json extra = json::array();
  for (const auto &c : r.extra_checks)
    extra.push_back({{"bound", to_json(c.bound)}, {"holds", c.holds}});
  j["extra_checks"] = std::move(extra);
  return j;
}

} // namespace antichain
