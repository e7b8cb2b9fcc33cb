#pragma once

#include "antichain/numeric.hpp"
#include "antichain/setfam.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace antichain {

/// C(n, k), zero when n < 0, k < 0 or k > n.
Integer binom(long n, long k);

/// sum_{i=lo}^{hi} C(n, i) with the same convention; 0 when lo > hi.
Integer binom_sum(long n, long lo, long hi);

/// A closed-form bound together with the result it comes from.
struct BoundValue {
  std::string name;   ///< short identifier, e.g. "kleitman"
  std::string source; ///< human-readable name of the result
  std::map<std::string, long> parameters;
  Integer value;
  std::string note;
};

nlohmann::json to_json(const BoundValue &bound);

/// Largest family with all pairwise |A xor B| <= d.  Requires n > d >= 0.
BoundValue kleitman_bound(long n, long d);

/// Frankl's stability bound for families not inside a ball translate.
/// Requires n >= d + 2, d >= 0.
BoundValue frankl_stability_bound(long n, long d);

/// 2 sum_{i<=k} C(n,i) - 2 C(n-5k-1, k), for odd diameter 2k+1 families not
/// inside a translate of K(n, k+1).  Requires n >= 1, k >= 0.
BoundValue symmetric_stability_bound(long n, long k);

/// sum_{i<=k} C(n+1, i) - C(n-5k, k): the even-diameter variant (formula only).
BoundValue symmetric_even_variant_bound(long n, long k);

/// Bounded set-wise differences, rank t: (trivially (t-k)-intersecting case,
/// non-trivial case).  Requires 0 < k < t <= (k+n)/2.
std::pair<BoundValue, BoundValue> setwise_bounds(long n, long t, long k);

/// C(n-(t-k), k), the reference value of the large-n clause whose constant is
/// unspecified.  Reported for comparison only.
BoundValue setwise_large_n_reference(long n, long t, long k);

/// L-intersecting Sperner families, |L| = s: (sum_{i<=s} C(n-1,i), C(n,s)).
std::pair<BoundValue, BoundValue> snevily_bounds(long n, long s);

/// sum_{i<=s} C(n-2, i), trivially intersecting case.  Requires n >= 2.
BoundValue trivially_intersecting_bound(long n, long s);

/// C(n-1,k-1) - C(n-k-1,k-1) + 1.  Requires n > 2k, k >= 1.
BoundValue hilton_milner_bound(long n, long k);

/// C(n, floor(n/2)).
BoundValue sperner_bound(long n);

/// C(n-1, k-1), k-uniform intersecting.  Requires n >= 2k, k >= 1.
BoundValue ekr_bound(long n, long k);

/// sum_{i<=s} C(n, i) for set-wise differences taking s values.
BoundValue frankl_difference_bound(long n, long s);

/// C(n, k) for Sperner families with set-wise differences <= k.
BoundValue sperner_setwise_bound(long n, long k);

/// sum_{A in F} 1 / C(n, |A|).
Rational lym_statistic(const Family &family);

namespace formula {
// Same arithmetic as above without range checks, for audits at small n where
// the zero-binomial convention keeps the statements meaningful.
Integer kleitman(long n, long d);
Integer frankl_stability(long n, long d);
Integer symmetric_stability(long n, long k);
Integer setwise_trivial(long n, long t, long k);
Integer setwise_nontrivial(long n, long t, long k);
} // namespace formula

/// Parameters for `bounds_table`; absent values skip dependent bounds.
struct BoundQuery {
  long n = 0;
  std::optional<long> k, s, t, d;
};

/// Every bound whose range conditions are satisfied by the query.
std::vector<BoundValue> bounds_table(const BoundQuery &query);

} // namespace antichain
