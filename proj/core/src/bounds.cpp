#include "antichain/bounds.hpp"

#include "antichain/error.hpp"

namespace antichain {

using nlohmann::json;

Integer binom(long n, long k) {
  if (n < 0 || k < 0 || k > n)
    return 0;
  k = std::min(k, n - k);
  Integer result = 1;
  for (long i = 1; i <= k; ++i)
    result = result * (n - k + i) / i;
  return result;
}

Integer binom_sum(long n, long lo, long hi) {
  Integer total = 0;
  for (long i = std::max(lo, 0L); i <= hi; ++i) {
    if (n >= 0 && i > n)
      break;
    total += binom(n, i);
  }
  return total;
}

json to_json(const BoundValue &bound) {
  json params = json::object();
  for (const auto &[k, v] : bound.parameters)
    params[k] = v;
  json j{{"name", bound.name},
         {"source", bound.source},
         {"parameters", std::move(params)},
         {"value", bound.value.str()}};
  if (!bound.note.empty())
    j["note"] = bound.note;
  return j;
}

namespace {

void require(bool condition, const std::string &what) {
  if (!condition)
    throw InvalidArgument("bound out of range: " + what);
}

} // namespace

namespace formula {

Integer kleitman(long n, long d) {
  const long k = d / 2;
  return d % 2 == 0 ? binom_sum(n, 0, k) : 2 * binom_sum(n - 1, 0, k);
}

Integer frankl_stability(long n, long d) {
  const long k = d / 2;
  if (d % 2 == 0)
    return binom_sum(n, 0, k) - binom(n - k - 1, k) + 1;
  return 2 * binom_sum(n - 1, 0, k) - binom(n - k - 2, k) + 1;
}

Integer symmetric_stability(long n, long k) {
  return 2 * binom_sum(n, 0, k) - 2 * binom(n - 5 * k - 1, k);
}

Integer setwise_trivial(long n, long t, long k) { return binom_sum(n - (t - k), 0, k); }

Integer setwise_nontrivial(long n, long t, long k) {
  return binom_sum(n, 0, k) - binom(n - t - 2 * k, k);
}

} // namespace formula

BoundValue kleitman_bound(long n, long d) {
  require(n > d && d >= 0, "kleitman needs n > d >= 0");
  return {"kleitman", "Kleitman diameter theorem", {{"n", n}, {"d", d}},
          formula::kleitman(n, d), d % 2 == 0 ? "attained by K(n,k)" : "attained by K_y(n,k)"};
}

BoundValue frankl_stability_bound(long n, long d) {
  require(d >= 0 && n >= d + 2, "frankl_stability needs n >= d + 2, d >= 0");
  return {"frankl_stability", "Frankl stability for Kleitman's theorem",
          {{"n", n}, {"d", d}}, formula::frankl_stability(n, d),
          d % 2 == 0 ? "families in no translate of K(n,k)"
                     : "families in no translate of K_y(n,k)"};
}

BoundValue symmetric_stability_bound(long n, long k) {
  require(n >= 1 && k >= 0, "symmetric_stability needs n >= 1, k >= 0");
  return {"symmetric_stability", "odd-diameter stability via non-shadows",
          {{"n", n}, {"k", k}}, formula::symmetric_stability(n, k),
          "diameter 2k+1, in no translate of K(n,k+1)"};
}

BoundValue symmetric_even_variant_bound(long n, long k) {
  require(n >= 1 && k >= 0, "symmetric_even_variant needs n >= 1, k >= 0");
  return {"symmetric_even_variant", "even-diameter variant of the non-shadow method",
          {{"n", n}, {"k", k}}, binom_sum(n + 1, 0, k) - binom(n - 5 * k, k),
          "formula only; diameter 2k, not a translate of K(n,k)"};
}

std::pair<BoundValue, BoundValue> setwise_bounds(long n, long t, long k) {
  require(0 < k && k < t && 2 * t <= k + n, "setwise needs 0 < k < t <= (k+n)/2");
  BoundValue trivial{"setwise_trivial", "bounded set-wise differences, trivial case",
                     {{"n", n}, {"t", t}, {"k", k}}, formula::setwise_trivial(n, t, k),
                     "trivially (t-k)-intersecting"};
  BoundValue nontrivial{"setwise_nontrivial", "bounded set-wise differences, non-trivial case",
                        {{"n", n}, {"t", t}, {"k", k}}, formula::setwise_nontrivial(n, t, k),
                        "not trivially (t-k)-intersecting"};
  return {std::move(trivial), std::move(nontrivial)};
}

BoundValue setwise_large_n_reference(long n, long t, long k) {
  require(0 < k && k < t && 2 * t <= k + n, "setwise needs 0 < k < t <= (k+n)/2");
  return {"setwise_large_n_reference", "bounded set-wise differences, large n",
          {{"n", n}, {"t", t}, {"k", k}}, binom(n - (t - k), k),
          "reference C(n-(t-k),k); the (1-c) factor and the range of n are unspecified, "
          "comparison only"};
}

std::pair<BoundValue, BoundValue> snevily_bounds(long n, long s) {
  require(n >= 1 && s >= 1, "snevily needs n >= 1, s >= 1");
  BoundValue general{"snevily_general", "L-intersecting Sperner, unconditional",
                     {{"n", n}, {"s", s}}, binom_sum(n - 1, 0, s), ""};
  BoundValue target{"snevily_target", "L-intersecting Sperner, conjectured",
                    {{"n", n}, {"s", s}}, binom(n, s),
                    "proved when 0 in L and n >= 3s^2; conjectured for n >= 2s-1"};
  return {std::move(general), std::move(target)};
}

BoundValue trivially_intersecting_bound(long n, long s) {
  require(n >= 2, "trivially_intersecting needs n >= 2");
  return {"trivially_intersecting", "L-intersecting Sperner, positive L, common core",
          {{"n", n}, {"s", s}}, binom_sum(n - 2, 0, s), ""};
}

BoundValue hilton_milner_bound(long n, long k) {
  require(k >= 1 && n > 2 * k, "hilton_milner needs n > 2k, k >= 1");
  return {"hilton_milner", "Hilton-Milner", {{"n", n}, {"k", k}},
          binom(n - 1, k - 1) - binom(n - k - 1, k - 1) + 1,
          "k-uniform intersecting with empty common intersection"};
}

BoundValue sperner_bound(long n) {
  require(n >= 0, "sperner needs n >= 0");
  return {"sperner", "Sperner", {{"n", n}}, binom(n, n / 2), ""};
}

BoundValue ekr_bound(long n, long k) {
  require(k >= 1 && n >= 2 * k, "ekr needs n >= 2k, k >= 1");
  return {"ekr", "Erdos-Ko-Rado", {{"n", n}, {"k", k}}, binom(n - 1, k - 1), ""};
}

BoundValue frankl_difference_bound(long n, long s) {
  require(n >= 0 && s >= 0, "frankl_difference needs n, s >= 0");
  return {"frankl_difference", "set-wise differences in a set of size s",
          {{"n", n}, {"s", s}}, binom_sum(n, 0, s), ""};
}

BoundValue sperner_setwise_bound(long n, long k) {
  require(n >= 1 && k >= 0, "sperner_setwise needs n >= 1, k >= 0");
  return {"sperner_setwise", "Sperner with set-wise differences <= k",
          {{"n", n}, {"k", k}}, binom(n, k), "large n; equality for the k-th layer"};
}

Rational lym_statistic(const Family &family) {
  Rational sum = 0;
  for (std::uint64_t w : family.words())
    sum += Rational(Integer(1), binom(family.n(), popcount(w)));
  return sum;
}

std::vector<BoundValue> bounds_table(const BoundQuery &q) {
  std::vector<BoundValue> out;
  auto attempt = [&](auto &&make) {
    try {
      make();
    } catch (const InvalidArgument &) {
      // outside the result's stated range: omitted from the table
    }
  };
  const long n = q.n;
  attempt([&] { out.push_back(sperner_bound(n)); });
  if (q.d) {
    attempt([&] { out.push_back(kleitman_bound(n, *q.d)); });
    attempt([&] { out.push_back(frankl_stability_bound(n, *q.d)); });
  }
  if (q.k) {
    attempt([&] { out.push_back(symmetric_stability_bound(n, *q.k)); });
    attempt([&] { out.push_back(symmetric_even_variant_bound(n, *q.k)); });
    attempt([&] { out.push_back(hilton_milner_bound(n, *q.k)); });
    attempt([&] { out.push_back(ekr_bound(n, *q.k)); });
    attempt([&] { out.push_back(frankl_difference_bound(n, *q.k)); });
    attempt([&] { out.push_back(sperner_setwise_bound(n, *q.k)); });
    if (q.t) {
      attempt([&] {
        auto [a, b] = setwise_bounds(n, *q.t, *q.k);
        out.push_back(std::move(a));
        out.push_back(std::move(b));
      });
      attempt([&] { out.push_back(setwise_large_n_reference(n, *q.t, *q.k)); });
    }
  }
  if (q.s) {
    attempt([&] {
      auto [a, b] = snevily_bounds(n, *q.s);
      out.push_back(std::move(a));
      out.push_back(std::move(b));
    });
    attempt([&] { out.push_back(trivially_intersecting_bound(n, *q.s)); });
  }
  return out;
}

} // namespace antichain
