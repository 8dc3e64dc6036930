#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dlat/field.hpp"
#include "dlat/fp_linalg.hpp"
#include "dlat/poly.hpp"

namespace dlat {

class CodeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Word = std::vector<Symbol>;

/// Evaluation-encoded Reed-Solomon code: f |-> (f(a_1), ..., f(a_n)), deg f < k.
struct RsCode {
  FieldPtr field;
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<Symbol> eval_points;

  std::size_t d() const { return n - k + 1; }
  double r_star() const { return static_cast<double>(k - 1) / static_cast<double>(n); }
};

/// Empty eval_points selects the canonical order g^0, g^1, ..., g^{n-1}.
RsCode rs_make(FieldPtr field, std::size_t n, std::size_t k, std::vector<Symbol> eval_points = {});
Word rs_encode(const RsCode& code, const Poly& message);
/// Newton interpolation through (a_i, word_i); degree < n.
Poly rs_interpolate(const RsCode& code, std::span<const Symbol> word);
bool code_contains(const RsCode& code, std::span<const Symbol> word);

/// Primitive narrow-sense BCH code: the F_p-subfield subcode of the RS code
/// of length q - 1 with designed distance d.
struct BchCode {
  RsCode rs;
  unsigned p = 0;
  std::size_t n = 0;
  std::size_t designed_d = 0;
  /// Generator polynomial over F_p, low-degree-first.
  FpVec generator;
  /// Rows X^s g(X), s = 0..k_p-1; row s leads at column s.
  FpMatrix gen_matrix;
  std::size_t k_p = 0;
};

BchCode bch_make(FieldPtr field, std::size_t designed_d);
bool code_contains(const BchCode& code, std::span<const unsigned> word);
Word embed_word(const FieldPtr& field, std::span<const unsigned> word);

/// ceil(((p-1)/p)(d-1)) * log_p q.
std::size_t bch_codim_bound(unsigned p, unsigned r, std::size_t designed_d);

/// Tower F_p^n = C_0 >= C_1 >= ... >= C_ell with a distinguished basis.
struct CodeTower {
  unsigned p = 0;
  std::size_t n = 0;
  std::size_t ell = 0;
  /// generators[i] spans C_i; generators[0] is the identity.
  std::vector<FpMatrix> generators;
  std::vector<std::size_t> dims;
  /// b_1..b_n: prefixes of length dims[i] span C_i.
  FpMatrix basis;
  /// BCH data when built from a field; bch[i - 1] is C_i.
  FieldPtr field;
  std::vector<std::size_t> designed;
  std::vector<BchCode> bch;
};

/// C_i = BCH(F_q, 4^i), i = 0..ell, for q a power of two.
CodeTower tower_make(FieldPtr field, std::size_t ell);
/// Tower from generator sets for C_1..C_ell, basis via the extension procedure.
CodeTower tower_from_generators(unsigned p, std::size_t n, const std::vector<FpMatrix>& level_generators);
/// Tower with an explicitly supplied basis; dims[i] = dim C_i, dims[0] = n.
CodeTower tower_from_basis(unsigned p, std::size_t n, std::vector<std::size_t> dims, FpMatrix basis);

/// Extends a basis of C_ell level by level to F_p^n, then forward-eliminates
/// so the leading columns are distinct and each leading entry is 1.
FpMatrix tower_basis(unsigned p, std::size_t n, const std::vector<FpMatrix>& generators);
const FpMatrix& tower_basis(const CodeTower& tower);

/// Checks the prefix-basis, triangular-permutation and nesting conditions.
bool tower_valid(const CodeTower& tower, std::string* why = nullptr);

}  // namespace dlat
