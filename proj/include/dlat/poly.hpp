#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dlat/field.hpp"

namespace dlat {

/// Degree of a polynomial; std::nullopt stands for the degree of the zero
/// polynomial (minus infinity), which never aliases a constant's degree 0.
using Degree = std::optional<long>;

/// Univariate polynomial over F_q, coefficients low-degree-first with the
/// top entry nonzero.
class Poly {
 public:
  explicit Poly(FieldPtr field);
  Poly(FieldPtr field, std::vector<Symbol> coeffs);

  static Poly constant(FieldPtr field, Symbol c);
  static Poly monomial(FieldPtr field, std::size_t deg, Symbol c = 1);

  const FieldPtr& field() const { return field_; }
  const std::vector<Symbol>& coeffs() const { return coeffs_; }
  Symbol coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  Degree degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<long>(coeffs_.size()) - 1;
  }
  bool is_zero() const { return coeffs_.empty(); }

  /// Horner evaluation.
  Symbol eval(Symbol x) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(Symbol c) const;
  /// Quotient and remainder; throws on division by the zero polynomial.
  std::pair<Poly, Poly> divmod(const Poly& d) const;

  bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

 private:
  void trim();
  const Field& same_field(const Poly& o) const;

  FieldPtr field_;
  std::vector<Symbol> coeffs_;
};

Symbol poly_eval(const Poly& f, Symbol x);
FieldElem poly_eval(const Poly& f, const FieldElem& x);

/// Bivariate polynomial sum c_{ij} X^i Y^j stored densely by Y-degree:
/// rows[j] holds the X-coefficients of Y^j. Trailing zeros are trimmed on
/// every mutation through the public interface.
class BiPoly {
 public:
  explicit BiPoly(FieldPtr field);
  BiPoly(FieldPtr field, std::vector<std::vector<Symbol>> rows);

  const FieldPtr& field() const { return field_; }
  const std::vector<std::vector<Symbol>>& rows() const { return rows_; }
  Symbol coeff(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, Symbol c);

  bool is_zero() const { return rows_.empty(); }
  Degree y_degree() const;
  Degree x_degree() const;
  /// (1, w)-weighted degree: max over terms of i + w*j.
  Degree weighted_degree(long w) const;
  std::map<std::pair<std::size_t, std::size_t>, Symbol> terms() const;
  std::size_t term_count() const;

  Symbol eval(Symbol x, Symbol y) const;
  /// Q(X, f(X)).
  Poly substitute(const Poly& f) const;
  /// Coefficient of X^a Y^b in Q(X + x, Y + y), computed by expanding the
  /// shift term by term. Slow; meant for verification.
  Symbol shifted_coeff(Symbol x, Symbol y, std::size_t a, std::size_t b) const;

  BiPoly scaled(Symbol c) const;
  bool operator==(const BiPoly& o) const { return rows_ == o.rows_; }

 private:
  void trim();

  FieldPtr field_;
  std::vector<std::vector<Symbol>> rows_;
};

/// Monomial X^x Y^y; ordered by (1, w)-weighted degree, ties by lower Y-degree.
struct Monomial {
  long x = 0;
  long y = 0;
};

inline bool monomial_less(const Monomial& a, const Monomial& b, long w) {
  long wa = a.x + w * a.y, wb = b.x + w * b.y;
  if (wa != wb) return wa < wb;
  return a.y < b.y;
}

/// Number of monomials with (1, w)-weighted degree <= delta (w >= 1).
std::uint64_t monomial_count(long delta, long w);
/// Smallest delta with monomial_count(delta, w) > cost: the weighted degree
/// a nonzero interpolation polynomial is guaranteed not to exceed.
long weighted_degree_bound(std::uint64_t cost, long w);

/// C(n, k) mod p via Lucas' theorem.
unsigned binom_mod_p(std::uint64_t n, std::uint64_t k, unsigned p);

}  // namespace dlat
