#include "dlat/poly.hpp"

#include <algorithm>

namespace dlat {

Poly::Poly(FieldPtr field) : field_(std::move(field)) {}

Poly::Poly(FieldPtr field, std::vector<Symbol> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (Symbol c : coeffs_)
    if (c >= field_->q()) throw FieldError("Poly: coefficient out of range");
  trim();
}

Poly Poly::constant(FieldPtr field, Symbol c) { return Poly(std::move(field), {c}); }

Poly Poly::monomial(FieldPtr field, std::size_t deg, Symbol c) {
  std::vector<Symbol> v(deg + 1, 0);
  v[deg] = c;
  return Poly(std::move(field), std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Field& Poly::same_field(const Poly& o) const {
  if (field_ != o.field_ && !(*field_ == *o.field_)) throw FieldError("Poly: mismatched fields");
  return *field_;
}

Symbol Poly::eval(Symbol x) const {
  const Field& f = *field_;
  Symbol acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = f.add(f.mul(acc, x), coeffs_[i]);
  return acc;
}

Poly Poly::operator+(const Poly& o) const {
  const Field& f = same_field(o);
  std::vector<Symbol> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(coeff(i), o.coeff(i));
  return Poly(field_, std::move(v));
}

Poly Poly::operator-(const Poly& o) const {
  const Field& f = same_field(o);
  std::vector<Symbol> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.sub(coeff(i), o.coeff(i));
  return Poly(field_, std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
  const Field& f = same_field(o);
  if (is_zero() || o.is_zero()) return Poly(field_);
  std::vector<Symbol> v(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] = f.add(v[i + j], f.mul(coeffs_[i], o.coeffs_[j]));
  }
  return Poly(field_, std::move(v));
}

Poly Poly::scaled(Symbol c) const {
  std::vector<Symbol> v(coeffs_);
  for (auto& x : v) x = field_->mul(x, c);
  return Poly(field_, std::move(v));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  const Field& f = same_field(d);
  if (d.is_zero()) throw FieldError("Poly: division by the zero polynomial");
  std::vector<Symbol> r(coeffs_);
  if (r.size() < d.coeffs_.size()) return {Poly(field_), *this};
  std::vector<Symbol> quot(r.size() - d.coeffs_.size() + 1, 0);
  Symbol lead_inv = f.inv(d.coeffs_.back());
  for (std::size_t s = quot.size(); s-- > 0;) {
    Symbol c = f.mul(r[s + d.coeffs_.size() - 1], lead_inv);
    quot[s] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < d.coeffs_.size(); ++j) r[s + j] = f.sub(r[s + j], f.mul(c, d.coeffs_[j]));
  }
  return {Poly(field_, std::move(quot)), Poly(field_, std::move(r))};
}

Symbol poly_eval(const Poly& f, Symbol x) { return f.eval(x); }

FieldElem poly_eval(const Poly& f, const FieldElem& x) {
  if (f.field() != x.field() && !(*f.field() == *x.field())) throw FieldError("poly_eval: mismatched fields");
  return {f.field(), f.eval(x.value())};
}

BiPoly::BiPoly(FieldPtr field) : field_(std::move(field)) {}

BiPoly::BiPoly(FieldPtr field, std::vector<std::vector<Symbol>> rows) : field_(std::move(field)), rows_(std::move(rows)) {
  trim();
}

void BiPoly::trim() {
  for (auto& r : rows_)
    while (!r.empty() && r.back() == 0) r.pop_back();
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
}

Symbol BiPoly::coeff(std::size_t i, std::size_t j) const {
  if (j >= rows_.size() || i >= rows_[j].size()) return 0;
  return rows_[j][i];
}

void BiPoly::set(std::size_t i, std::size_t j, Symbol c) {
  if (j >= rows_.size()) rows_.resize(j + 1);
  if (i >= rows_[j].size()) rows_[j].resize(i + 1, 0);
  rows_[j][i] = c;
  trim();
}

Degree BiPoly::y_degree() const {
  if (rows_.empty()) return std::nullopt;
  return static_cast<long>(rows_.size()) - 1;
}

Degree BiPoly::x_degree() const {
  Degree d;
  for (const auto& r : rows_)
    if (!r.empty() && (!d || static_cast<long>(r.size()) - 1 > *d)) d = static_cast<long>(r.size()) - 1;
  return d;
}

Degree BiPoly::weighted_degree(long w) const {
  Degree d;
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    if (rows_[j].empty()) continue;
    long v = static_cast<long>(rows_[j].size()) - 1 + w * static_cast<long>(j);
    if (!d || v > *d) d = v;
  }
  return d;
}

std::map<std::pair<std::size_t, std::size_t>, Symbol> BiPoly::terms() const {
  std::map<std::pair<std::size_t, std::size_t>, Symbol> t;
  for (std::size_t j = 0; j < rows_.size(); ++j)
    for (std::size_t i = 0; i < rows_[j].size(); ++i)
      if (rows_[j][i] != 0) t[{i, j}] = rows_[j][i];
  return t;
}

std::size_t BiPoly::term_count() const {
  std::size_t c = 0;
  for (const auto& r : rows_)
    for (Symbol s : r) c += s != 0;
  return c;
}

Symbol BiPoly::eval(Symbol x, Symbol y) const {
  const Field& f = *field_;
  Symbol acc = 0;
  for (std::size_t j = rows_.size(); j-- > 0;) acc = f.add(f.mul(acc, y), Poly(field_, rows_[j]).eval(x));
  return acc;
}

Poly BiPoly::substitute(const Poly& fx) const {
  Poly acc(field_);
  for (std::size_t j = rows_.size(); j-- > 0;) acc = acc * fx + Poly(field_, rows_[j]);
  return acc;
}

Symbol BiPoly::shifted_coeff(Symbol x, Symbol y, std::size_t a, std::size_t b) const {
  // Expand (X + x)^i and (Y + y)^j with polynomial arithmetic, independent of
  // the binomial-table path used by the interpolator.
  const Field& f = *field_;
  Poly xlin(field_, {x, 1}), ylin(field_, {y, 1});
  std::size_t max_i = 0;
  for (const auto& r : rows_) max_i = std::max(max_i, r.size());
  std::vector<Poly> xp{Poly::constant(field_, 1)}, yp{Poly::constant(field_, 1)};
  for (std::size_t i = 1; i < max_i; ++i) xp.push_back(xp.back() * xlin);
  for (std::size_t j = 1; j < rows_.size(); ++j) yp.push_back(yp.back() * ylin);
  Symbol acc = 0;
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    Symbol yc = yp[j].coeff(b);
    if (yc == 0) continue;
    for (std::size_t i = 0; i < rows_[j].size(); ++i) {
      if (rows_[j][i] == 0) continue;
      acc = f.add(acc, f.mul(rows_[j][i], f.mul(xp[i].coeff(a), yc)));
    }
  }
  return acc;
}

BiPoly BiPoly::scaled(Symbol c) const {
  auto rows = rows_;
  for (auto& r : rows)
    for (auto& s : r) s = field_->mul(s, c);
  return BiPoly(field_, std::move(rows));
}

std::uint64_t monomial_count(long delta, long w) {
  if (delta < 0) return 0;
  if (w <= 0) throw std::invalid_argument("monomial_count: weight must be positive");
  std::uint64_t B = static_cast<std::uint64_t>(delta / w);
  std::uint64_t d = static_cast<std::uint64_t>(delta);
  return (B + 1) * (d + 1) - static_cast<std::uint64_t>(w) * B * (B + 1) / 2;
}

long weighted_degree_bound(std::uint64_t cost, long w) {
  long lo = 0, hi = 1;
  while (monomial_count(hi, w) <= cost) hi *= 2;
  while (lo < hi) {
    long mid = lo + (hi - lo) / 2;
    if (monomial_count(mid, w) > cost)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

unsigned binom_mod_p(std::uint64_t n, std::uint64_t k, unsigned p) {
  if (k > n) return 0;
  if (p == 2) return (n & k) == k ? 1 : 0;
  unsigned result = 1;
  while (k > 0 || n > 0) {
    unsigned ni = n % p, ki = k % p;
    if (ki > ni) return 0;
    // small binomial mod p by direct product with modular inverse
    std::uint64_t num = 1, den = 1;
    for (unsigned t = 0; t < ki; ++t) {
      num = num * (ni - t) % p;
      den = den * (t + 1) % p;
    }
    std::uint64_t inv = 1, base = den, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    result = static_cast<unsigned>(result * (num * inv % p) % p);
    n /= p;
    k /= p;
  }
  return result;
}

}  // namespace dlat
