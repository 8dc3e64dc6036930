#include "dlat/field.hpp"

#include <string>

namespace dlat {

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

namespace {

// Powers of X modulo `f` (monic, low-first, degree r). Returns the sequence
// X^0..X^{q-2} as symbols when X has order exactly q-1, else empty.
std::vector<Symbol> primitive_powers(unsigned p, unsigned r, std::uint32_t q,
                                     const std::vector<unsigned>& f) {
  std::vector<unsigned> cur(r, 0);
  cur[0] = 1;
  std::vector<Symbol> out;
  out.reserve(q - 1);
  auto encode = [&](const std::vector<unsigned>& c) {
    Symbol s = 0;
    for (unsigned i = r; i-- > 0;) s = s * p + c[i];
    return s;
  };
  for (std::uint32_t t = 0; t + 1 < q; ++t) {
    Symbol s = encode(cur);
    if (t > 0 && s == 1) return {};
    out.push_back(s);
    unsigned top = cur[r - 1];
    for (unsigned i = r - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (unsigned i = 0; i < r; ++i) cur[i] = (cur[i] + (p - (top * f[i]) % p)) % p;
  }
  if (encode(cur) != 1) return {};
  return out;
}

}  // namespace

Field::Field(unsigned p, unsigned r) : p_(p), r_(r) {
  if (!is_prime(p)) throw FieldError("field_make: p = " + std::to_string(p) + " is not prime");
  if (r < 1) throw FieldError("field_make: extension degree must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < r; ++i) {
    q *= p;
    if (q > kMaxOrder) throw FieldError("field_make: q = p^r exceeds 2^16");
  }
  q_ = static_cast<std::uint32_t>(q);

  // Scan monic degree-r candidates in increasing integer value.
  std::vector<unsigned> f(r + 1, 0);
  f[r] = 1;
  std::vector<Symbol> powers;
  for (std::uint32_t v = 0; v < q_ && powers.empty(); ++v) {
    std::uint32_t t = v;
    for (unsigned i = 0; i < r; ++i) {
      f[i] = t % p;
      t /= p;
    }
    if (f[0] == 0) continue;
    powers = primitive_powers(p, r, q_, f);
  }
  if (powers.empty()) throw std::logic_error("field_make: no primitive polynomial found");
  modulus_ = f;

  exp_.resize(2 * (q_ - 1));
  log_.assign(q_, 0);
  for (std::uint32_t i = 0; i + 1 < q_; ++i) {
    exp_[i] = powers[i];
    exp_[i + q_ - 1] = powers[i];
    log_[powers[i]] = i;
  }
}

Symbol Field::add_digits(Symbol a, Symbol b, bool subtract) const {
  Symbol out = 0, scale = 1;
  for (unsigned i = 0; i < r_; ++i) {
    unsigned da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    unsigned d = subtract ? (da + p_ - db) % p_ : (da + db) % p_;
    out += d * scale;
    scale *= p_;
  }
  return out;
}

Symbol Field::inv(Symbol a) const {
  if (a == 0) throw FieldError("field: inverse of zero");
  std::uint32_t l = log_[a];
  return exp_[(q_ - 1 - l) % (q_ - 1)];
}

Symbol Field::div(Symbol a, Symbol b) const {
  if (b == 0) throw FieldError("field: division by zero");
  if (a == 0) return 0;
  return exp_[log_[a] + (q_ - 1 - log_[b])];
}

Symbol Field::pow(Symbol a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw FieldError("field: negative power of zero");
    return e == 0 ? 1 : 0;
  }
  std::int64_t n = q_ - 1;
  std::int64_t l = (static_cast<std::int64_t>(log_[a]) * (e % n)) % n;
  if (l < 0) l += n;
  return exp_[l];
}

std::uint32_t Field::log(Symbol a) const {
  if (a == 0) throw FieldError("field: log of zero");
  return log_[a];
}

Symbol Field::exp(std::int64_t e) const {
  std::int64_t n = q_ - 1;
  e %= n;
  if (e < 0) e += n;
  return exp_[e];
}

Symbol Field::embed(unsigned c) const {
  if (c >= p_) throw FieldError("subfield_embed: value out of range [0, p)");
  return c;
}

Symbol Field::scale(Symbol a, std::uint64_t times) const {
  return mul(a, static_cast<Symbol>(times % p_));
}

std::vector<unsigned> Field::coeffs(Symbol a) const {
  std::vector<unsigned> c(r_);
  for (unsigned i = 0; i < r_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

Symbol Field::from_coeffs(std::span<const unsigned> c) const {
  if (c.size() != r_) throw FieldError("field: coefficient vector has wrong length");
  Symbol s = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= p_) throw FieldError("field: coefficient out of range");
    s = s * p_ + c[i];
  }
  return s;
}

FieldPtr field_make(unsigned p, unsigned r) { return std::make_shared<const Field>(p, r); }

FieldElem::FieldElem(FieldPtr field, Symbol value) : field_(std::move(field)), value_(value) {
  if (!field_) throw FieldError("FieldElem: null field");
  if (value_ >= field_->q()) throw FieldError("FieldElem: value out of range");
}

const Field& FieldElem::same_field(const FieldElem& o) const {
  if (field_ != o.field_ && !(*field_ == *o.field_))
    throw FieldError("field: operands belong to different fields");
  return *field_;
}

FieldElem FieldElem::operator+(const FieldElem& o) const { return {field_, same_field(o).add(value_, o.value_)}; }
FieldElem FieldElem::operator-(const FieldElem& o) const { return {field_, same_field(o).sub(value_, o.value_)}; }
FieldElem FieldElem::operator*(const FieldElem& o) const { return {field_, same_field(o).mul(value_, o.value_)}; }
FieldElem FieldElem::operator/(const FieldElem& o) const { return {field_, same_field(o).div(value_, o.value_)}; }
FieldElem FieldElem::operator-() const { return {field_, field_->neg(value_)}; }
FieldElem FieldElem::inv() const { return {field_, field_->inv(value_)}; }
FieldElem FieldElem::pow(std::int64_t e) const { return {field_, field_->pow(value_, e)}; }

bool FieldElem::operator==(const FieldElem& o) const {
  same_field(o);
  return value_ == o.value_;
}

FieldElem subfield_embed(const FieldPtr& field, unsigned c) { return {field, field->embed(c)}; }

}  // namespace dlat
