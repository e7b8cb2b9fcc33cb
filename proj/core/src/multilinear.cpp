#include "antichain/multilinear.hpp"

#include "antichain/error.hpp"

#include <algorithm>
#include <unordered_map>

namespace antichain {

using nlohmann::json;

std::string to_fraction_string(const Rational &value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

Rational parse_fraction(const std::string &text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos)
      return Rational(Integer(text));
    const Integer num(text.substr(0, slash));
    const Integer den(text.substr(slash + 1));
    if (den == 0)
      throw InvalidArgument("zero denominator in \"" + text + "\"");
    return Rational(num, den);
  } catch (const InvalidArgument &) {
    throw;
  } catch (const std::exception &) {
    throw InvalidArgument("malformed rational \"" + text + "\"");
  }
}

AffineForm AffineForm::from(const LinearForm &form) {
  return AffineForm{form.b.bits(), 0, Integer(-form.shift)};
}

Integer AffineForm::evaluate(std::uint64_t point) const {
  return constant + popcount(plus & point) - popcount(minus & point);
}

Poly::Poly(int n) : n_(n) {
  if (n < 1 || n > kMaxGroundSet)
    throw InvalidArgument("polynomial variable count must lie in [1, 64]");
}

Poly Poly::constant(int n, const Rational &value) {
  Poly p(n);
  p.add_term(0, value);
  return p;
}

int Poly::degree() const noexcept {
  int d = -1;
  for (const auto &[m, c] : terms_)
    d = std::max(d, popcount(m));
  return d;
}

Rational Poly::coefficient(std::uint64_t monomial) const {
  const auto it = terms_.find(monomial);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(std::uint64_t monomial, const Rational &value) {
  if (value == 0)
    return;
  if (monomial & ~ground_mask(n_))
    throw InvalidArgument("monomial uses a variable outside [n]");
  auto [it, inserted] = terms_.try_emplace(monomial, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0)
      terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly &other) const {
  if (other.n_ != n_)
    throw InvalidArgument("polynomials over different variable counts");
  Poly out = *this;
  for (const auto &[m, c] : other.terms_)
    out.add_term(m, c);
  return out;
}

Poly Poly::operator*(const Rational &scalar) const {
  Poly out(n_);
  if (scalar == 0)
    return out;
  for (const auto &[m, c] : terms_)
    out.terms_.emplace(m, c * scalar);
  return out;
}

Poly Poly::operator*(const Poly &other) const {
  if (other.n_ != n_)
    throw InvalidArgument("polynomials over different variable counts");
  std::unordered_map<std::uint64_t, Rational> acc;
  for (const auto &[ma, ca] : terms_)
    for (const auto &[mb, cb] : other.terms_)
      acc[ma | mb] += ca * cb;
  Poly out(n_);
  for (auto &[m, c] : acc)
    if (c != 0)
      out.terms_.emplace(m, std::move(c));
  return out;
}

Poly Poly::times(const AffineForm &form) const {
  if ((form.plus | form.minus) & ~ground_mask(n_))
    throw InvalidArgument("linear form uses a variable outside [n]");
  std::unordered_map<std::uint64_t, Rational> acc;
  for (const auto &[m, c] : terms_) {
    if (form.constant != 0)
      acc[m] += c * form.constant;
    for (std::uint64_t w = form.plus; w; w &= w - 1)
      acc[m | (w & (~w + 1))] += c;
    for (std::uint64_t w = form.minus; w; w &= w - 1)
      acc[m | (w & (~w + 1))] -= c;
  }
  Poly out(n_);
  for (auto &[m, c] : acc)
    if (c != 0)
      out.terms_.emplace(m, std::move(c));
  return out;
}

Poly product_reduced(int n, std::span<const AffineForm> factors) {
  Poly p = Poly::constant(n, 1);
  for (const auto &f : factors) {
    if (f.plus & f.minus)
      throw InvalidArgument("affine form has a variable with both signs");
    p = p.times(f);
  }
  return p;
}

Poly product_reduced(int n, std::span<const LinearForm> factors) {
  std::vector<AffineForm> forms;
  forms.reserve(factors.size());
  for (const auto &f : factors) {
    if (f.b.n() != n)
      throw InvalidArgument("linear form over a different ground set");
    forms.push_back(AffineForm::from(f));
  }
  return product_reduced(n, std::span<const AffineForm>(forms));
}

Poly mixed_form_product(const SetWord &a, const SetWord &b, std::span<const long> shifts) {
  if (a.n() != b.n())
    throw InvalidArgument("mixed form: supports over different ground sets");
  if (a.bits() & b.bits())
    throw InvalidArgument("mixed form: supports of a and b must be disjoint");
  // x.b + (1 - x).a - s  =  x.b - x.a + (|a| - s)
  std::vector<AffineForm> forms;
  forms.reserve(shifts.size());
  for (long s : shifts)
    forms.push_back(AffineForm{b.bits(), a.bits(), Integer(a.size() - s)});
  return product_reduced(a.n(), std::span<const AffineForm>(forms));
}

Rational evaluate(const Poly &poly, std::uint64_t point) {
  Rational sum = 0;
  for (const auto &[m, c] : poly.terms())
    if ((m & ~point) == 0)
      sum += c;
  return sum;
}

Rational evaluate(const Poly &poly, const SetWord &point) {
  if (point.n() != poly.n())
    throw InvalidArgument("evaluation point over a different ground set");
  return evaluate(poly, point.bits());
}

Poly substitute_one(const Poly &poly, int variable) {
  if (variable < 1 || variable > poly.n())
    throw InvalidArgument("substitute_one: variable outside [n]");
  const std::uint64_t bit = std::uint64_t{1} << (variable - 1);
  Poly out(poly.n());
  for (const auto &[m, c] : poly.terms())
    out.add_term(m & ~bit, c);
  return out;
}

Poly monomial(const SetWord &support) {
  Poly p(support.n());
  p.add_term(support.bits(), 1);
  return p;
}

namespace {

// Rank of an integer matrix by Bareiss elimination with column skipping.
std::size_t bareiss_rank(std::vector<std::vector<Integer>> rows) {
  if (rows.empty())
    return 0;
  const std::size_t cols = rows.front().size();
  Integer previous = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0)
      ++pivot;
    if (pivot == rows.size())
      continue;
    std::swap(rows[pivot], rows[rank]);
    const auto &prow = rows[rank];
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      auto &row = rows[i];
      const Integer factor = row[c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer value = prow[c] * row[j] - factor * prow[j];
        Integer quotient, remainder;
        boost::multiprecision::divide_qr(value, previous, quotient, remainder);
        if (remainder != 0)
          throw InternalError("Bareiss step produced a non-exact division");
        row[j] = std::move(quotient);
      }
      row[c] = 0;
    }
    previous = prow[c];
    ++rank;
  }
  return rank;
}

} // namespace

std::size_t system_rank(std::span<const Poly> polys, int degree_cap) {
  if (polys.empty())
    return 0;
  // Columns: monomials that actually occur, in basis order.  Monomials of the
  // degree <= cap basis that never occur contribute zero columns.
  std::vector<std::uint64_t> columns;
  for (const auto &p : polys) {
    if (p.n() != polys.front().n())
      throw InvalidArgument("system_rank: polynomials over different variable counts");
    if (p.degree() > degree_cap)
      throw InvalidArgument("system_rank: polynomial of degree " + std::to_string(p.degree()) +
                            " exceeds the cap " + std::to_string(degree_cap));
    for (const auto &[m, c] : p.terms())
      columns.push_back(m);
  }
  std::sort(columns.begin(), columns.end(), canonical_less);
  columns.erase(std::unique(columns.begin(), columns.end()), columns.end());

  std::unordered_map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < columns.size(); ++i)
    index.emplace(columns[i], i);

  std::vector<std::vector<Integer>> rows;
  rows.reserve(polys.size());
  for (const auto &p : polys) {
    Integer scale = 1;
    for (const auto &[m, c] : p.terms())
      scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(c));
    std::vector<Integer> row(columns.size(), Integer(0));
    for (const auto &[m, c] : p.terms())
      row[index.at(m)] = boost::multiprecision::numerator(c) *
                         (scale / boost::multiprecision::denominator(c));
    rows.push_back(std::move(row));
  }
  return bareiss_rank(std::move(rows));
}

bool verify_triangular(std::span<const Poly> polys, std::span<const SetWord> points) {
  if (polys.size() != points.size())
    throw InvalidArgument("verify_triangular: need one point per polynomial");
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (evaluate(polys[i], points[i]) == 0)
      return false;
    for (std::size_t j = 0; j < i; ++j)
      if (evaluate(polys[i], points[j]) != 0)
        return false;
  }
  return true;
}

std::vector<std::vector<Rational>> evaluation_matrix(std::span<const Poly> polys,
                                                    std::span<const SetWord> points) {
  std::vector<std::vector<Rational>> m(polys.size());
  for (std::size_t i = 0; i < polys.size(); ++i) {
    m[i].reserve(points.size());
    for (const auto &pt : points)
      m[i].push_back(evaluate(polys[i], pt));
  }
  return m;
}

json to_json(const Poly &poly) {
  json terms = json::array();
  for (const auto &[m, c] : poly.terms())
    terms.push_back({{"monomial", SetWord(poly.n(), m).elements()},
                     {"coeff", to_fraction_string(c)}});
  return json{{"n", poly.n()}, {"terms", std::move(terms)}};
}

Poly poly_from_json(const json &j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() ||
      !j.contains("terms") || !j["terms"].is_array())
    throw InvalidArgument("poly: expected {\"n\": int, \"terms\": [...]}");
  Poly p(j["n"].get<int>());
  for (const auto &t : j["terms"]) {
    if (!t.contains("monomial") || !t.contains("coeff") || !t["coeff"].is_string())
      throw InvalidArgument("poly: each term needs \"monomial\" and \"coeff\"");
    const auto elements = t["monomial"].get<std::vector<int>>();
    p.add_term(SetWord::from_elements(p.n(), elements).bits(),
               parse_fraction(t["coeff"].get<std::string>()));
  }
  return p;
}

} // namespace antichain
