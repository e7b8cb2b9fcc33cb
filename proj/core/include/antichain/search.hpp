#pragma once

#include "antichain/bitset_graph.hpp"
#include "antichain/bounds.hpp"
#include "antichain/setfam.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace antichain {

inline constexpr int kMaxSearchGroundSet = 20;
inline constexpr std::size_t kMaxGraphOrder = std::size_t{1} << 13;

/// Graph whose cliques are exactly the families satisfying a pairwise
/// constraint; vertices are candidate members in canonical order.
struct CompatGraph {
  int n = 0;
  std::vector<std::uint64_t> vertices;
  BitGraph adjacency;
  std::string predicate_name;
  /// Vertex filter and predicate commute with permutations of [n].
  bool permutation_invariant = false;

  std::size_t order() const noexcept { return vertices.size(); }
  Family family_of(const std::vector<std::size_t> &clique) const;
};

using VertexFilter = std::function<bool(std::uint64_t)>;
using PairPredicate = std::function<bool(std::uint64_t, std::uint64_t)>;

/// Throws SizeCapError if n > 20 or more than 8192 vertices pass the filter.
CompatGraph build_graph(int n, const VertexFilter &vertex_filter,
                        const PairPredicate &pair_predicate, std::string predicate_name,
                        bool permutation_invariant = false);

enum class SymmetryMode { automatic, on, off };

struct SearchOptions {
  std::uint64_t node_cap = 0; ///< 0 = unlimited
  unsigned workers = 1;
  SymmetryMode symmetry = SymmetryMode::automatic; ///< automatic: on for Sperner searches with n >= 6
};

enum class Verdict { consistent, bound_tight, counterexample, inconclusive };
std::string to_string(Verdict verdict);

struct BoundCheck {
  BoundValue bound;
  bool holds = false;
};

struct SearchResult {
  int optimum = 0;
  Family witness;
  std::uint64_t explored_nodes = 0;
  std::optional<BoundValue> compared_bound;
  std::vector<BoundCheck> extra_checks;
  Verdict verdict = Verdict::consistent;
  std::string predicate_name;
  bool symmetry_used = false;

  bool inconclusive() const noexcept { return verdict == Verdict::inconclusive; }
};

nlohmann::json to_json(const SearchResult &result, bool include_nodes = true);

/// Exact maximum clique; the witness is the lexicographically least maximum
/// clique under the canonical vertex order, independent of worker count.
/// With symmetry enabled on a permutation-invariant graph, the top levels
/// branch only over orbit representatives of the stabiliser of the chosen
/// members.  Exceeding node_cap yields verdict inconclusive.
SearchResult max_clique(const CompatGraph &graph, const SearchOptions &options = {});

/// Every maximum clique of size `size` (at most `limit` of them), as families.
std::vector<Family> maximum_cliques(const CompatGraph &graph, int size, std::size_t limit = 1'000'000);

/// Bron-Kerbosch with pivoting; fn receives each maximal clique (vertex
/// indices ascending).  Returns false (stopping early) if fn returns false.
bool for_each_maximal_clique(const CompatGraph &graph,
                             const std::function<bool(const std::vector<std::size_t> &)> &fn);

/// Largest family with pairwise |A xor B| <= d, compared with Kleitman's bound.
SearchResult extremal_diameter(int n, int d, const SearchOptions &options = {});

/// Largest L-intersecting Sperner family.  Compared with C(n, |L|) when
/// n >= 2|L| - 1, and always checked against sum_{i<=|L|} C(n-1, i).
SearchResult extremal_L_sperner(int n, const IntersectionSpec &allowed,
                                const SearchOptions &options = {});

/// Largest family with pairwise |A \ B| <= k and rank <= t_cap (no cap when
/// absent); `sperner` additionally forbids containment.
SearchResult extremal_setwise(int n, int k, std::optional<int> t_cap, bool sperner,
                              const SearchOptions &options = {});

struct AuditViolation {
  Family family;
  std::string reason;
};

struct AuditReport {
  std::string name;
  int n = 0;
  int k = 0;
  int t = 0;
  std::size_t families_checked = 0;
  std::map<std::string, std::size_t> tallies;
  std::vector<BoundValue> bounds_used;
  std::vector<AuditViolation> violations;
  std::size_t certificate_runs = 0;
  std::size_t claim_violations = 0;

  bool ok() const noexcept { return violations.empty() && claim_violations == 0; }
};

nlohmann::json to_json(const AuditReport &report);

/// Odd-diameter stability dichotomy over every maximal family with pairwise
/// |A xor B| <= 2k+1, plus the refinement over every maximal such family
/// inside K(n, k+1).  Each family is also run through the symmetric
/// certificate after normalisation.  Throws SizeCapError for n > 7.
AuditReport dichotomy_audit(int n, int k);

/// Set-wise difference dichotomy over every maximal family with pairwise
/// |A \ B| <= k and rank t, with the structural lemma scan on each.
/// Requires 0 < k < t <= (k+n)/2; throws SizeCapError for n > 7.
AuditReport setwise_dichotomy_audit(int n, int k, int t);

} // namespace antichain
