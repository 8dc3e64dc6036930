#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

namespace dlat {

/// Field elements are encoded as integers in [0, q): the coefficient vector
/// (c_0, ..., c_{r-1}) of the polynomial-basis representation maps to
/// sum c_i p^i. Elements of the prime subfield are exactly the values < p.
using Symbol = std::uint32_t;

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_prime(std::uint64_t v);

/// F_q = F_p[X]/(f) for the primitive monic f of degree r that is smallest
/// when read as the integer sum f_i p^i (highest-degree coefficient most
/// significant). Immutable after construction; log/antilog tables are built
/// eagerly, so q is capped at 2^16.
class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  Field(unsigned p, unsigned r);

  unsigned p() const { return p_; }
  unsigned r() const { return r_; }
  std::uint32_t q() const { return q_; }
  /// Monic modulus, low-degree-first, length r + 1.
  const std::vector<unsigned>& modulus() const { return modulus_; }

  Symbol zero() const { return 0; }
  Symbol one() const { return 1; }
  /// Root of the modulus; has multiplicative order q - 1.
  Symbol generator() const { return exp_[1]; }

  Symbol add(Symbol a, Symbol b) const {
    if (p_ == 2) return a ^ b;
    return add_digits(a, b, false);
  }
  Symbol sub(Symbol a, Symbol b) const {
    if (p_ == 2) return a ^ b;
    return add_digits(a, b, true);
  }
  Symbol neg(Symbol a) const { return sub(0, a); }
  Symbol mul(Symbol a, Symbol b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Symbol inv(Symbol a) const;
  Symbol div(Symbol a, Symbol b) const;
  Symbol pow(Symbol a, std::int64_t e) const;

  /// Discrete log base generator(); a must be nonzero.
  std::uint32_t log(Symbol a) const;
  /// generator()^e for any integer e.
  Symbol exp(std::int64_t e) const;

  bool in_prime_subfield(Symbol a) const { return a < p_; }
  /// Constant-polynomial embedding of F_p into F_q.
  Symbol embed(unsigned c) const;
  /// Multiplication of an element by an integer (repeated addition).
  Symbol scale(Symbol a, std::uint64_t times) const;

  std::vector<unsigned> coeffs(Symbol a) const;
  Symbol from_coeffs(std::span<const unsigned> c) const;

  bool operator==(const Field& o) const { return p_ == o.p_ && r_ == o.r_ && modulus_ == o.modulus_; }

 private:
  Symbol add_digits(Symbol a, Symbol b, bool subtract) const;

  unsigned p_;
  unsigned r_;
  std::uint32_t q_;
  std::vector<unsigned> modulus_;
  std::vector<Symbol> exp_;         // length 2(q-1), exp_[i] = g^i
  std::vector<std::uint32_t> log_;  // log_[0] unused
};

using FieldPtr = std::shared_ptr<const Field>;

/// Builds F_{p^r}; throws FieldError for non-prime p, r < 1 or q > 2^16.
FieldPtr field_make(unsigned p, unsigned r);

/// Value-semantic field element bound to its field. Arithmetic between
/// elements of different fields throws.
class FieldElem {
 public:
  FieldElem(FieldPtr field, Symbol value);

  const FieldPtr& field() const { return field_; }
  Symbol value() const { return value_; }
  std::vector<unsigned> coeffs() const { return field_->coeffs(value_); }
  bool is_zero() const { return value_ == 0; }

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem inv() const;
  FieldElem pow(std::int64_t e) const;

  bool operator==(const FieldElem& o) const;

 private:
  const Field& same_field(const FieldElem& o) const;

  FieldPtr field_;
  Symbol value_;
};

/// F_p -> F_q embedding as a FieldElem; throws if c >= p.
FieldElem subfield_embed(const FieldPtr& field, unsigned c);

}  // namespace dlat
