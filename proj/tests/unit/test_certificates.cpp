#include <antichain/bounds.hpp>
#include <antichain/certificates.hpp>
#include <antichain/error.hpp>
#include <antichain/sampling.hpp>

#include "oracles.hpp"

#include <doctest.h>

using namespace antichain;

namespace {

Family fam(int n, std::initializer_list<std::initializer_list<int>> sets) { return Family(n, sets); }

std::string hypothesis_of(const std::function<void()> &fn) {
  try {
    fn();
  } catch (const PreconditionError &e) {
    return e.hypothesis();
  }
  return "";
}

void independent_rank_matches(const CertificateReport &r) {
  CHECK(oracle::rank_by_values(r.polys, r.n) == r.poly_count());
  CHECK(r.polys.size() == r.points.size());
}

} // namespace

TEST_CASE("Katona system on the triangle") {
  const auto r = katona_certificate(fam(3, {{1, 2}, {1, 3}, {2, 3}}), 1);
  CHECK(r.members == 3);
  CHECK(r.fillers == 1);
  CHECK(r.non_shadows == 0);
  CHECK(r.ok());
  CHECK(r.space_dimension == 4);
  CHECK(r.implied_bound == 3);
  CHECK(r.expected_diagonal == -1);
  independent_rank_matches(r);
}

TEST_CASE("Katona system with non-shadows") {
  const auto r = katona_certificate(fam(4, {{1, 2}}), 1);
  CHECK(r.members == 1);
  CHECK(r.fillers == 1);
  CHECK(r.non_shadows == 2);
  CHECK(r.ok());
  CHECK(r.implied_bound == 2); // |shadow| = |{1},{2}|
  independent_rank_matches(r);
}

TEST_CASE("Katona preconditions") {
  CHECK(hypothesis_of([] { katona_certificate(fam(4, {{1, 2}, {3, 4}}), 1); }) == "intersecting");
  CHECK(hypothesis_of([] { katona_certificate(fam(4, {{1, 2}, {1, 3, 4}}), 1); }) == "uniform");
}

TEST_CASE("Katona diagonal at k = 2") {
  const auto r = katona_certificate(fam(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}}), 2);
  CHECK(r.ok());
  CHECK(r.expected_diagonal == 2);
  for (std::size_t i = 0; i < r.members; ++i)
    CHECK(evaluate(r.polys[i], r.points[i]) == 2);
  independent_rank_matches(r);
}

TEST_CASE("Katona on random intersecting families") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const int k = 1 + static_cast<int>(rng() % 2);
    const Family f = sample_intersecting_uniform(n, k, rng);
    const auto r = katona_certificate(f, k);
    CHECK(r.ok());
    CHECK(r.implied_bound == Integer(shadow(f, k).size()));
    CHECK(Integer(r.members + r.fillers + r.non_shadows) <= binom_sum(n, 0, k));
    CHECK(shadow(f, k).size() >= f.size());
  }
}

TEST_CASE("symmetric system examples") {
  const auto a = symmetric_certificate(fam(3, {{}}), 1);
  CHECK(a.members == 1);
  CHECK(a.non_shadows == 3);
  CHECK(a.rank == 4);
  CHECK(a.ok());
  CHECK(a.expected_diagonal == -2);
  CHECK(a.polys[0] == mixed_form_product(SetWord::empty(3), SetWord::full(3), std::vector<long>{2}));

  const auto b = symmetric_certificate(fam(3, {{}, {1, 2}}), 1);
  CHECK(b.members == 2);
  CHECK(b.non_shadows == 1);
  CHECK(b.rank == 3);
  CHECK(b.ok());
  independent_rank_matches(b);

  CHECK(hypothesis_of([] { symmetric_certificate(fam(3, {{}, {1}}), 1); }) == "even-size");
  CHECK(hypothesis_of([] { symmetric_certificate(fam(4, {{}, {1, 2, 3, 4}}), 1); }) == "diameter");
}

TEST_CASE("symmetric diagonal at k = 2") {
  const auto r = symmetric_certificate(fam(5, {{}, {1, 2}, {3, 4}, {1, 2, 3, 4}}), 2);
  CHECK(r.ok());
  CHECK(r.expected_diagonal == 8); // (-2)^2 2!
  independent_rank_matches(r);
}

TEST_CASE("normalisation puts a member at the origin with the larger parity class even") {
  const auto f = fam(4, {{1}, {1, 2}, {1, 3}, {2, 3}});
  const auto norm = normalise_for_symmetric(f);
  CHECK(norm.even_part.size() >= norm.odd_part.size());
  CHECK(norm.even_part.size() + norm.odd_part.size() == f.size());
  CHECK(norm.translated.same_members(translate(f, norm.translation)));
  CHECK(symmetric_certificate(norm.even_part, 1).ok());
}

TEST_CASE("set-wise system examples") {
  const auto a = setwise_certificate(fam(3, {{1, 2}, {1, 3}}), 1);
  CHECK(a.members == 2);
  CHECK(a.non_shadows == 0);
  CHECK(a.implied_bound == 4);
  CHECK(a.ok());

  const auto b = setwise_certificate(fam(2, {{1}}), 1);
  CHECK(b.members == 1);
  CHECK(b.non_shadows == 1);
  CHECK(b.rank == 2);
  CHECK(b.ok());

  // Members are reordered by non-increasing size internally.
  const auto c = setwise_certificate(fam(4, {{1}, {1, 2}, {2}}), 1);
  CHECK(c.ordered_family[0].size() == 2);
  CHECK(c.ok());
  CHECK(hypothesis_of([] { setwise_certificate(fam(4, {{1, 2}, {3, 4}}), 1); }) == "setwise-difference");
}

TEST_CASE("L-intersecting Sperner system") {
  const auto a = snevily_certificate(Family::layer(4, 1), {0});
  CHECK(a.members == 4);
  CHECK(a.implied_bound == 4);
  CHECK(a.ok());

  const auto b = snevily_certificate(Family::layer(3, 1), {0});
  CHECK(b.members == 3);
  CHECK(b.rank == 3);
  for (const auto &p : b.polys)
    for (const auto &[mono, c] : p.terms())
      CHECK((mono & 1U) == 0);
  CHECK(b.ok());

  // Members through element 1 come first.
  const auto c = snevily_certificate(fam(4, {{2, 3}, {1, 2}, {3, 4}, {1, 4}}), {0, 1});
  CHECK(c.ordered_family[0].contains(1));
  CHECK(c.ordered_family[1].contains(1));
  CHECK(c.ok());

  CHECK(hypothesis_of([] { snevily_certificate(fam(3, {{1}, {1, 2}}), {1}); }) == "Sperner");
  CHECK(hypothesis_of([] { snevily_certificate(fam(4, {{1, 2}, {3, 4}}), {1}); }) == "L-intersecting");
  CHECK_THROWS_AS(snevily_certificate(fam(3, {{1}}), {3}), InvalidArgument);
}

TEST_CASE("L-intersecting Sperner system on random families") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const int a = static_cast<int>(rng() % n);
    const int b = static_cast<int>(rng() % n);
    const IntersectionSpec L = a == b ? IntersectionSpec{a} : IntersectionSpec{a, b};
    const Family f = sample_L_sperner(n, L, n, rng);
    if (f.empty())
      continue;
    const auto r = snevily_certificate(f, L);
    CHECK(r.ok());
    CHECK(Integer(f.size()) <= r.implied_bound);
    independent_rank_matches(r);
  }
}

TEST_CASE("structural scan") {
  const auto bad = check_claim_structures(fam(4, {{1, 2}, {3, 4}}), 1);
  CHECK(bad.violation_count() == 0);
  CHECK_FALSE(bad.precondition_failures.empty());

  const auto single = check_claim_structures(fam(4, {{1, 2}}), 1);
  CHECK(single.violation_count() == 0);

  const auto star = check_claim_structures(fam(7, {{1, 2}, {1, 3}, {1, 4}, {1, 5}}), 1);
  CHECK(star.setwise_context);
  CHECK(star.violation_count() == 0);
  CHECK_THROWS_AS(check_claim_structures(Family(3), 1), InvalidArgument);
}

TEST_CASE("certificate json") {
  const auto r = katona_certificate(fam(3, {{1, 2}, {1, 3}, {2, 3}}), 1);
  const auto j = to_json(r, true);
  CHECK(j["polys"].size() == 4);
  CHECK(to_json(r, false).count("polys") == 0);
}
