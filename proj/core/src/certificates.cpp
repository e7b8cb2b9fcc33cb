#include "antichain/certificates.hpp"

#include "antichain/bounds.hpp"
#include "antichain/error.hpp"

#include <algorithm>
#include <numeric>

namespace antichain {

using nlohmann::json;

namespace {

Integer factorial(long k) {
  Integer f = 1;
  for (long i = 2; i <= k; ++i)
    f *= i;
  return f;
}

Rational signed_factorial(long base, long k) {
  // base^k * k!
  Integer p = 1;
  for (long i = 0; i < k; ++i)
    p *= base;
  return Rational(p * factorial(k));
}

void check_level(const Family &family, int k) {
  if (k < 0 || k > family.n())
    throw InvalidArgument("certificate level k must lie in [0, n]");
}

/// Fills the shared rank / triangular / inequality bookkeeping.
void finish(CertificateReport &report) {
  report.triangular_ok = verify_triangular(report.polys, report.points);
  report.rank = system_rank(report.polys, report.degree_cap);
  report.rank_ok = report.rank == report.polys.size();
}

Poly member_difference_poly(int n, std::uint64_t member, int k) {
  // prod_{j=1}^{k} (x . b - j), b the complement of the member
  std::vector<LinearForm> forms;
  forms.reserve(static_cast<std::size_t>(k));
  for (int j = 1; j <= k; ++j)
    forms.push_back(LinearForm{SetWord(n, ground_mask(n) & ~member), j});
  return product_reduced(n, std::span<const LinearForm>(forms));
}

void append_non_shadows(CertificateReport &report, const Family &nonshadow) {
  for (std::uint64_t t : nonshadow.words()) {
    const SetWord T(report.n, t);
    report.polys.push_back(monomial(T));
    report.points.push_back(T);
  }
  report.non_shadows = nonshadow.size();
}

std::string render(const char *lhs, std::size_t m, const char *rhs, const Integer &bound) {
  return std::string(lhs) + " = " + std::to_string(m) + " <= " + rhs + " = " + bound.str();
}

} // namespace

NonShadowSet non_shadow_set(const Family &family, int k) {
  return NonShadowSet{k, non_shadow(family, k)};
}

CertificateReport katona_certificate(const Family &family, int k) {
  check_level(family, k);
  if (!is_uniform(family, k + 1))
    throw PreconditionError("uniform", "every member must have exactly k+1 = " +
                                           std::to_string(k + 1) + " elements");
  if (!is_intersecting(family))
    throw PreconditionError("intersecting", "two members are disjoint");

  const int n = family.n();
  CertificateReport report;
  report.system_name = "katona";
  report.n = n;
  report.degree_cap = k;
  report.ordered_family = family;
  report.expected_diagonal = signed_factorial(-1, k);

  for (std::uint64_t f : family.words()) {
    report.polys.push_back(member_difference_poly(n, f, k));
    report.points.emplace_back(n, f);
  }
  report.members = family.size();

  // Fillers (x . 1 - k - 1) prod_{l in S} x_l over |S| <= k-1, size then value.
  const AffineForm total{ground_mask(n), 0, Integer(-(k + 1))};
  for (int size = 0; size <= k - 1; ++size)
    for_each_subset_of_size(ground_mask(n), size, [&](std::uint64_t s) {
      report.polys.push_back(monomial(SetWord(n, s)).times(total));
      report.points.emplace_back(n, s);
      ++report.fillers;
    });

  const Family sh = shadow(family, k);
  append_non_shadows(report, non_shadow(family, k));
  finish(report);

  bool diagonal = true;
  for (std::size_t i = 0; i < report.polys.size(); ++i) {
    const Rational value = evaluate(report.polys[i], report.points[i]);
    Rational expected;
    if (i < report.members)
      expected = report.expected_diagonal;
    else if (i < report.members + report.fillers)
      expected = report.points[i].size() - k - 1;
    else
      expected = 1;
    diagonal = diagonal && value == expected;
  }
  report.diagonal_ok = diagonal;

  report.space_dimension = binom_sum(n, 0, k);
  report.implied_bound = report.space_dimension - Integer(report.fillers) - Integer(report.non_shadows);
  const bool counts_match = Integer(report.fillers) == binom_sum(n, 0, k - 1) &&
                            Integer(report.non_shadows) == binom(n, k) - Integer(sh.size()) &&
                            report.implied_bound == Integer(sh.size());
  report.inequality_ok = counts_match &&
                         Integer(report.poly_count()) <= report.space_dimension &&
                         Integer(report.members) <= report.implied_bound;
  report.witnessed_inequality = render("|F|", report.members, "|shadow_k F|", report.implied_bound);
  return report;
}

CertificateReport symmetric_certificate(const Family &even_family, int k) {
  check_level(even_family, k);
  for (std::uint64_t f : even_family.words())
    if (popcount(f) % 2 != 0)
      throw PreconditionError("even-size", "member " + SetWord(even_family.n(), f).to_string() +
                                               " has odd size");
  if (!even_family.empty() && symmetric_diameter(even_family) > 2 * k)
    throw PreconditionError("diameter", "some pair has |A xor B| > 2k = " + std::to_string(2 * k));

  const int n = even_family.n();
  CertificateReport report;
  report.system_name = "symmetric";
  report.n = n;
  report.degree_cap = k;
  report.ordered_family = even_family;
  report.expected_diagonal = signed_factorial(-2, k);

  std::vector<long> shifts;
  for (int l = 1; l <= k; ++l)
    shifts.push_back(2L * l);
  for (std::uint64_t f : even_family.words()) {
    const SetWord a(n, f), b(n, ground_mask(n) & ~f);
    report.polys.push_back(mixed_form_product(a, b, shifts));
    report.points.push_back(a);
  }
  report.members = even_family.size();
  append_non_shadows(report, non_shadow(even_family, k));
  finish(report);

  bool diagonal = true;
  for (std::size_t i = 0; i < report.polys.size(); ++i) {
    const Rational expected = i < report.members ? report.expected_diagonal : Rational(1);
    diagonal = diagonal && evaluate(report.polys[i], report.points[i]) == expected;
  }
  report.diagonal_ok = diagonal;

  report.space_dimension = binom_sum(n, 0, k);
  report.implied_bound = report.space_dimension - Integer(report.non_shadows);
  report.inequality_ok = Integer(report.poly_count()) <= report.space_dimension &&
                         Integer(report.members) <= report.implied_bound;
  report.witnessed_inequality =
      render("|F_even|", report.members, "sum_{i<=k} C(n,i) - |non-shadows|", report.implied_bound);
  return report;
}

SymmetricNormalisation normalise_for_symmetric(const Family &family) {
  if (family.empty())
    throw InvalidArgument("cannot normalise the empty family");
  const int n = family.n();
  std::uint64_t shift = family.canonical().words().front();
  auto split = [&](std::uint64_t by, Family &translated, Family &even, Family &odd) {
    translated = translate(family, SetWord(n, by));
    std::vector<std::uint64_t> e, o;
    const Family sorted = translated.canonical();
    for (std::uint64_t w : sorted.words())
      (popcount(w) % 2 == 0 ? e : o).push_back(w);
    even = Family(n, std::move(e));
    odd = Family(n, std::move(o));
  };
  SymmetricNormalisation out{SetWord(n, shift), Family(n), Family(n), Family(n)};
  split(shift, out.translated, out.even_part, out.odd_part);
  if (out.odd_part.size() > out.even_part.size()) {
    // Toggling element 1 swaps the parity classes.
    shift ^= 1U;
    out.translation = SetWord(n, shift);
    split(shift, out.translated, out.even_part, out.odd_part);
  }
  return out;
}

CertificateReport setwise_certificate(const Family &family, int k) {
  check_level(family, k);
  if (!family.empty() && max_setwise_diff(family) > k)
    throw PreconditionError("setwise-difference",
                            "some ordered pair has |A \\ B| > k = " + std::to_string(k));

  const int n = family.n();
  std::vector<std::size_t> order(family.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return family[a].size() > family[b].size();
  });
  const Family ordered = family.reordered(order);

  CertificateReport report;
  report.system_name = "setwise";
  report.n = n;
  report.degree_cap = k;
  report.ordered_family = ordered;
  report.expected_diagonal = signed_factorial(-1, k);
  for (std::uint64_t f : ordered.words()) {
    report.polys.push_back(member_difference_poly(n, f, k));
    report.points.emplace_back(n, f);
  }
  report.members = ordered.size();
  append_non_shadows(report, non_shadow(ordered, k));
  finish(report);

  bool diagonal = true;
  for (std::size_t i = 0; i < report.polys.size(); ++i) {
    const Rational expected = i < report.members ? report.expected_diagonal : Rational(1);
    diagonal = diagonal && evaluate(report.polys[i], report.points[i]) == expected;
  }
  report.diagonal_ok = diagonal;

  report.space_dimension = binom_sum(n, 0, k);
  report.implied_bound = report.space_dimension - Integer(report.non_shadows);
  report.inequality_ok = Integer(report.poly_count()) <= report.space_dimension &&
                         Integer(report.members) <= report.implied_bound;
  report.witnessed_inequality =
      render("|F|", report.members, "sum_{i<=k} C(n,i) - |non-shadows|", report.implied_bound);
  return report;
}

CertificateReport snevily_certificate(const Family &family, const IntersectionSpec &allowed) {
  const int n = family.n();
  if (allowed.size() == 0)
    throw InvalidArgument("intersection spec must be non-empty");
  if (allowed.max() >= n)
    throw InvalidArgument("intersection sizes must be < n");
  if (!is_sperner(family))
    throw PreconditionError("Sperner", "one member contains another");
  if (!is_L_intersecting(family, allowed))
    throw PreconditionError("L-intersecting",
                            "some pairwise intersection size is outside L = " + allowed.to_string());

  // Members through element 1 first; relative order otherwise kept.
  std::vector<std::size_t> order(family.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_partition(order.begin(), order.end(),
                        [&](std::size_t i) { return family[i].contains(1); });
  const Family ordered = family.reordered(order);

  const int s = allowed.size();
  CertificateReport report;
  report.system_name = "snevily";
  report.n = n;
  report.degree_cap = s;
  report.ordered_family = ordered;
  report.expected_diagonal = 0; // member-dependent, checked individually

  bool diagonal = true;
  for (std::uint64_t f : ordered.words()) {
    const int size = popcount(f);
    std::vector<LinearForm> forms;
    Rational expected = 1;
    for (int l : allowed.values())
      if (l != size) {
        forms.push_back(LinearForm{SetWord(n, f), l});
        expected *= size - l;
      }
    const Poly g = product_reduced(n, std::span<const LinearForm>(forms));
    const Poly reduced = substitute_one(g, 1);
    // Evaluation convention: member j is read as F_j plus element 1.
    const SetWord point(n, f | 1U);
    diagonal = diagonal && evaluate(reduced, point) == expected;
    report.polys.push_back(reduced);
    report.points.push_back(point);
  }
  report.members = ordered.size();
  report.diagonal_ok = diagonal;
  finish(report);

  report.space_dimension = binom_sum(n - 1, 0, s);
  report.implied_bound = report.space_dimension;
  const bool no_first_variable = std::all_of(report.polys.begin(), report.polys.end(), [](const Poly &p) {
    return std::none_of(p.terms().begin(), p.terms().end(),
                        [](const auto &term) { return (term.first & 1U) != 0; });
  });
  report.inequality_ok = no_first_variable && Integer(report.members) <= report.implied_bound;
  report.witnessed_inequality =
      render("|F|", report.members, "sum_{i<=s} C(n-1,i)", report.implied_bound);
  return report;
}

json to_json(const CertificateReport &r, bool include_polys) {
  json j{{"system", r.system_name},
         {"n", r.n},
         {"groups", {{"members", r.members}, {"fillers", r.fillers}, {"non_shadows", r.non_shadows}}},
         {"poly_count", r.poly_count()},
         {"degree_cap", r.degree_cap},
         {"space_dimension", r.space_dimension.str()},
         {"rank", r.rank},
         {"triangular_ok", r.triangular_ok},
         {"rank_ok", r.rank_ok},
         {"diagonal_ok", r.diagonal_ok},
         {"inequality_ok", r.inequality_ok},
         {"implied_bound", r.implied_bound.str()},
         {"witnessed_inequality", r.witnessed_inequality},
         {"ok", r.ok()},
         {"order", r.ordered_family.to_sets()}};
  if (r.expected_diagonal != 0)
    j["expected_member_diagonal"] = to_fraction_string(r.expected_diagonal);
  if (r.translation)
    j["translation"] = r.translation->elements();
  if (include_polys) {
    json polys = json::array();
    for (std::size_t i = 0; i < r.polys.size(); ++i)
      polys.push_back({{"point", r.points[i].elements()}, {"poly", to_json(r.polys[i])}});
    j["polys"] = std::move(polys);
  }
  return j;
}

// ---------------------------------------------------------------------------
// Structural lemma scan

std::size_t StructureReport::violation_count() const {
  std::size_t total = 0;
  for (const auto &c : claims)
    total += c.violations.size();
  return total;
}

namespace {

ClaimCheck &claim(StructureReport &report, const std::string &name, const std::string &statement) {
  for (auto &c : report.claims)
    if (c.name == name)
      return c;
  report.claims.push_back(ClaimCheck{name, statement, 0, 0, {}});
  return report.claims.back();
}

std::string show(int n, std::uint64_t w) { return SetWord(n, w).to_string(); }

void scan_symmetric(const Family &family, int k, StructureReport &report) {
  const int n = family.n();
  auto &radius = claim(report, "even_part_radius",
                       "with F1 a largest even member: |Fi \\ F1| <= k and |F1| <= 2k");
  auto &balance = claim(report, "even_difference_balance",
                        "|Fi \\ F1| = k implies |F1 \\ Fi| = k and |F1| = |Fi|");
  auto &ball = claim(report, "ball_around_core",
                     "few non-shadows: every F has |F xor (F1 cap E)| <= k+1");
  const Integer threshold = binom(n - 5L * k - 1, k);

  for (std::uint64_t u : family.words()) {
    const Family g = translate(family, SetWord(n, u));
    std::vector<std::uint64_t> even;
    for (std::uint64_t w : g.words())
      if (popcount(w) % 2 == 0)
        even.push_back(w);
    if (even.empty())
      continue;
    int largest = 0;
    for (std::uint64_t w : even)
      largest = std::max(largest, popcount(w));
    const Family even_family(n, even);
    const bool few_non_shadows = Integer(non_shadow(even_family, k).size()) < threshold;

    for (std::uint64_t f1 : even) {
      if (popcount(f1) != largest)
        continue;
      ++radius.tuples_checked;
      ++radius.hypothesis_held;
      if (popcount(f1) > 2 * k)
        radius.violations.push_back("translate by " + show(n, u) + ": |F1| = " +
                                    std::to_string(popcount(f1)) + " > 2k");
      for (std::uint64_t fi : even) {
        if (fi == f1)
          continue;
        ++balance.tuples_checked;
        if (popcount(fi & ~f1) > k)
          radius.violations.push_back("translate by " + show(n, u) + ": |" + show(n, fi) + " \\ " +
                                      show(n, f1) + "| > k");
        if (popcount(fi & ~f1) == k) {
          ++balance.hypothesis_held;
          if (popcount(f1 & ~fi) != k || popcount(f1) != popcount(fi))
            balance.violations.push_back("translate by " + show(n, u) + ": F1 = " + show(n, f1) +
                                         ", Fi = " + show(n, fi));
        }
      }
      if (!few_non_shadows)
        continue;
      ++ball.tuples_checked;
      ++ball.hypothesis_held;
      bool found = false;
      for (std::uint64_t e : even) {
        if (popcount(e & ~f1) != k)
          continue;
        found = true;
        const std::uint64_t core = f1 & e;
        for (std::uint64_t x : g.words())
          if (popcount(x ^ core) > k + 1)
            ball.violations.push_back("translate by " + show(n, u) + ": A = " + show(n, core) +
                                      ", F = " + show(n, x));
      }
      if (!found)
        ball.violations.push_back("translate by " + show(n, u) +
                                  ": no even E with |E \\ F1| = k despite few non-shadows");
    }
  }
}

void scan_setwise(const Family &family, int k, StructureReport &report) {
  const int n = family.n();
  const int t = family.rank();
  const auto w = family.words();
  auto &symmetry = claim(report, "max_rank_difference_symmetry",
                         "|F| = t and |E \\ F| = k imply |E| = t and |F \\ E| = k");
  auto &aligned = claim(report, "aligned_core",
                        "few non-shadows: all F' with |F' \\ F1| = k share F' cap F1 = A");
  auto &core = claim(report, "common_core_conclusion",
                     "few non-shadows: A (|A| = t-k) lies in every member");

  for (std::uint64_t f : w) {
    if (popcount(f) != t)
      continue;
    for (std::uint64_t e : w) {
      if (e == f)
        continue;
      ++symmetry.tuples_checked;
      if (popcount(e & ~f) == k) {
        ++symmetry.hypothesis_held;
        if (popcount(e) != t || popcount(f & ~e) != k)
          symmetry.violations.push_back("F = " + show(n, f) + ", E = " + show(n, e));
      }
    }
  }

  const bool few = Integer(non_shadow(family, k).size()) < binom(n - t - 2L * k, k);
  for (std::uint64_t f1 : w) {
    if (popcount(f1) != t)
      continue;
    ++aligned.tuples_checked;
    ++core.tuples_checked;
    if (!few)
      continue;
    ++aligned.hypothesis_held;
    ++core.hypothesis_held;
    std::optional<std::uint64_t> a;
    for (std::uint64_t x : w) {
      if (popcount(x & ~f1) != k)
        continue;
      if (!a)
        a = x & f1;
      else if ((x & f1) != *a)
        aligned.violations.push_back("F1 = " + show(n, f1) + ": " + show(n, x) + " meets F1 in " +
                                     show(n, x & f1) + ", expected " + show(n, *a));
    }
    if (!a) {
      aligned.violations.push_back("F1 = " + show(n, f1) +
                                   ": no member with |F \\ F1| = k despite few non-shadows");
      continue;
    }
    if (popcount(*a) != t - k)
      core.violations.push_back("F1 = " + show(n, f1) + ": |A| = " + std::to_string(popcount(*a)));
    for (std::uint64_t x : w)
      if ((*a & ~x) != 0)
        core.violations.push_back("F1 = " + show(n, f1) + ": A = " + show(n, *a) +
                                  " not inside " + show(n, x));
  }
}

} // namespace

StructureReport check_claim_structures(const Family &family, int k) {
  if (family.empty())
    throw InvalidArgument("structural scan needs a non-empty family");
  if (k < 0)
    throw InvalidArgument("k must be non-negative");
  StructureReport report;
  report.k = k;
  report.claims.reserve(8); // claim() hands out references into this vector
  const int n = family.n();
  report.symmetric_context = symmetric_diameter(family) <= 2 * k + 1;
  report.setwise_context = max_setwise_diff(family) <= k;

  if (report.symmetric_context)
    scan_symmetric(family, k, report);
  else
    report.precondition_failures.push_back("symmetric: diameter " +
                                           std::to_string(symmetric_diameter(family)) +
                                           " exceeds 2k+1 = " + std::to_string(2 * k + 1));

  const int t = family.rank();
  if (!report.setwise_context)
    report.precondition_failures.push_back("setwise: max |A \\ B| = " +
                                           std::to_string(max_setwise_diff(family)) +
                                           " exceeds k = " + std::to_string(k));
  else if (!(0 < k && k < t && 2 * t <= k + n))
    report.precondition_failures.push_back("setwise: rank t = " + std::to_string(t) +
                                           " outside 0 < k < t <= (k+n)/2");
  else
    scan_setwise(family, k, report);
  return report;
}

json to_json(const StructureReport &r) {
  json claims = json::array();
  for (const auto &c : r.claims)
    claims.push_back({{"name", c.name},
                      {"statement", c.statement},
                      {"tuples_checked", c.tuples_checked},
                      {"hypothesis_held", c.hypothesis_held},
                      {"violations", c.violations}});
  return json{{"k", r.k},
              {"symmetric_context", r.symmetric_context},
              {"setwise_context", r.setwise_context},
              {"precondition_failures", r.precondition_failures},
              {"claims", std::move(claims)},
              {"violation_count", r.violation_count()}};
}

} // namespace antichain
