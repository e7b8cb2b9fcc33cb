#pragma once

#include "antichain/numeric.hpp"
#include "antichain/setfam.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace antichain {

/// Orders monomials by (degree, numeric value of their support).
struct MonomialOrder {
  bool operator()(std::uint64_t a, std::uint64_t b) const noexcept {
    return canonical_less(a, b);
  }
};

/// x . b - shift, where b is a 0/1 coefficient vector given as a set.
struct LinearForm {
  SetWord b;
  long shift = 0;
};

/// sum_{i in plus} x_i - sum_{i in minus} x_i + constant, plus and minus disjoint.
struct AffineForm {
  std::uint64_t plus = 0;
  std::uint64_t minus = 0;
  Integer constant = 0;

  static AffineForm from(const LinearForm &form);
  Integer evaluate(std::uint64_t point) const;
};

/// Multilinear polynomial over Q in variables x_1..x_n.
/// Monomials are subsets of [n]; zero coefficients are never stored.
class Poly {
public:
  using Terms = std::map<std::uint64_t, Rational, MonomialOrder>;

  explicit Poly(int n = 1);
  static Poly constant(int n, const Rational &value);

  int n() const noexcept { return n_; }
  const Terms &terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept;
  Rational coefficient(std::uint64_t monomial) const;

  /// Adds value to the coefficient of monomial, dropping it if it cancels.
  void add_term(std::uint64_t monomial, const Rational &value);

  Poly operator+(const Poly &other) const;
  Poly operator*(const Rational &scalar) const;
  /// Product followed by multilinear reduction (monomial supports union).
  Poly operator*(const Poly &other) const;
  Poly times(const AffineForm &form) const;

  friend bool operator==(const Poly &a, const Poly &b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

private:
  int n_;
  Terms terms_;
};

/// Multilinear reduction of prod (x . b_j - shift_j); the empty product is 1.
Poly product_reduced(int n, std::span<const LinearForm> factors);
Poly product_reduced(int n, std::span<const AffineForm> factors);

/// Multilinear reduction of prod_l (x . b + (1 - x) . a - shift_l).
/// Throws InvalidArgument when a and b overlap.
Poly mixed_form_product(const SetWord &a, const SetWord &b, std::span<const long> shifts);

/// Value at the 0/1 point whose support is `point`.
Rational evaluate(const Poly &poly, const SetWord &point);
Rational evaluate(const Poly &poly, std::uint64_t point);

/// Sets x_variable = 1 (1-based), merging colliding monomials.
Poly substitute_one(const Poly &poly, int variable);

/// prod_{i in support} x_i
Poly monomial(const SetWord &support);

/// Exact rank of the coefficient matrix over the monomial basis of degree
/// <= degree_cap, by fraction-free (Bareiss) elimination.
/// Throws InvalidArgument if some polynomial has degree > degree_cap.
std::size_t system_rank(std::span<const Poly> polys, int degree_cap);

/// Triangular criterion: polys[i](points[i]) != 0 and polys[i](points[j]) == 0
/// for every i > j.
bool verify_triangular(std::span<const Poly> polys, std::span<const SetWord> points);

/// The full evaluation matrix M[i][j] = polys[i](points[j]).
std::vector<std::vector<Rational>> evaluation_matrix(std::span<const Poly> polys,
                                                    std::span<const SetWord> points);

nlohmann::json to_json(const Poly &poly);
Poly poly_from_json(const nlohmann::json &j);

} // namespace antichain
