#pragma once

#include "antichain/multilinear.hpp"
#include "antichain/numeric.hpp"
#include "antichain/setfam.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace antichain {

/// A constructed polynomial system, its independence verdicts and the bound it
/// implies through dimension counting.
struct CertificateReport {
  std::string system_name;
  int n = 0;
  std::size_t members = 0;     ///< m: one polynomial per family member
  std::size_t fillers = 0;     ///< r
  std::size_t non_shadows = 0; ///< h
  int degree_cap = 0;
  Integer space_dimension;     ///< number of monomials of degree <= cap
  std::size_t rank = 0;
  bool triangular_ok = false;
  bool rank_ok = false;
  /// Every diagonal value f_i(a_i) equals the closed form of the construction.
  bool diagonal_ok = false;
  Rational expected_diagonal;  ///< for member polynomials; 0 when it varies
  Integer implied_bound;
  std::string witnessed_inequality;
  /// The arithmetic consequence (e.g. m + r + h <= dim) holds.
  bool inequality_ok = false;

  Family ordered_family;       ///< members in the order used
  std::vector<Poly> polys;     ///< members, fillers, non-shadows
  std::vector<SetWord> points; ///< evaluation points, same order
  std::optional<SetWord> translation; ///< symmetric system normalisation

  std::size_t poly_count() const { return members + fillers + non_shadows; }
  bool ok() const { return triangular_ok && rank_ok && diagonal_ok && inequality_ok; }
};

nlohmann::json to_json(const CertificateReport &report, bool include_polys = false);

/// The k-sets not contained in any member.
struct NonShadowSet {
  int k = 0;
  Family members;
};
NonShadowSet non_shadow_set(const Family &family, int k);

/// Polynomial proof of |F| <= |shadow_k F| for an intersecting
/// (k+1)-uniform family.  Throws PreconditionError otherwise.
CertificateReport katona_certificate(const Family &family, int k);

/// Independence of g_i = prod_l (x.b_i + (1-x).a_i - 2l) together with the
/// level-k non-shadow monomials, for an even-size family of diameter <= 2k.
CertificateReport symmetric_certificate(const Family &even_family, int k);

/// Translation applied to a diameter <= 2k+1 family before the symmetric
/// certificate: puts a member at the origin and keeps the even part at least
/// as large as the odd part.
struct SymmetricNormalisation {
  SetWord translation;
  Family translated;
  Family even_part;
  Family odd_part;
};
SymmetricNormalisation normalise_for_symmetric(const Family &family);

/// Bounded set-wise differences: members reordered by non-increasing size.
CertificateReport setwise_certificate(const Family &family, int k);

/// L-intersecting Sperner family: members through element 1 first, x_1 := 1.
CertificateReport snevily_certificate(const Family &family, const IntersectionSpec &allowed);

struct ClaimCheck {
  std::string name;
  std::string statement;
  std::size_t tuples_checked = 0;
  std::size_t hypothesis_held = 0;
  std::vector<std::string> violations;
};

struct StructureReport {
  int k = 0;
  bool symmetric_context = false; ///< all pairwise |A xor B| <= 2k+1
  bool setwise_context = false;   ///< all pairwise |A \ B| <= k
  std::vector<std::string> precondition_failures;
  std::vector<ClaimCheck> claims;

  std::size_t violation_count() const;
};

nlohmann::json to_json(const StructureReport &report);

/// Exhaustive scan of the structural lemmas behind the two stability
/// theorems on every applicable tuple of members.
/// Throws InvalidArgument on an empty family.
StructureReport check_claim_structures(const Family &family, int k);

} // namespace antichain
