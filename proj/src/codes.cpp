#include "dlat/codes.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace dlat {

RsCode rs_make(FieldPtr field, std::size_t n, std::size_t k, std::vector<Symbol> eval_points) {
  if (!field) throw CodeError("rs_make: null field");
  if (n == 0 || n > field->q()) throw CodeError("rs_make: need 1 <= n <= q");
  if (k > n) throw CodeError("rs_make: k > n");
  if (eval_points.empty()) {
    if (n > field->q() - 1) throw CodeError("rs_make: canonical points cover only F_q*, need n <= q - 1");
    for (std::size_t i = 0; i < n; ++i) eval_points.push_back(field->exp(static_cast<std::int64_t>(i)));
  }
  if (eval_points.size() != n) throw CodeError("rs_make: eval_points size differs from n");
  std::set<Symbol> seen;
  for (Symbol a : eval_points) {
    if (a >= field->q()) throw CodeError("rs_make: evaluation point out of range");
    if (!seen.insert(a).second) throw CodeError("rs_make: duplicate evaluation points");
  }
  return RsCode{std::move(field), n, k, std::move(eval_points)};
}

Word rs_encode(const RsCode& code, const Poly& message) {
  if (message.degree() && static_cast<std::size_t>(*message.degree()) >= code.k)
    throw CodeError("rs_encode: message degree must be < k");
  Word w(code.n);
  for (std::size_t i = 0; i < code.n; ++i) w[i] = message.eval(code.eval_points[i]);
  return w;
}

Poly rs_interpolate(const RsCode& code, std::span<const Symbol> word) {
  if (word.size() != code.n) throw CodeError("rs_interpolate: length mismatch");
  const Field& f = *code.field;
  const auto& x = code.eval_points;
  std::vector<Symbol> dd(word.begin(), word.end());
  // divided differences in place: dd[i] = [y_0..y_i]
  for (std::size_t lvl = 1; lvl < code.n; ++lvl)
    for (std::size_t i = code.n - 1; i >= lvl; --i)
      dd[i] = f.div(f.sub(dd[i], dd[i - 1]), f.sub(x[i], x[i - lvl]));
  Poly acc(code.field);
  for (std::size_t i = code.n; i-- > 0;) acc = acc * Poly(code.field, {f.neg(x[i]), 1}) + Poly::constant(code.field, dd[i]);
  return acc;
}

bool code_contains(const RsCode& code, std::span<const Symbol> word) {
  if (word.size() != code.n) throw CodeError("code_contains: length mismatch");
  Poly f = rs_interpolate(code, word);
  return !f.degree() || static_cast<std::size_t>(*f.degree()) < code.k;
}

Word embed_word(const FieldPtr& field, std::span<const unsigned> word) {
  Word w(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) w[i] = field->embed(word[i]);
  return w;
}

std::size_t bch_codim_bound(unsigned p, unsigned r, std::size_t designed_d) {
  std::size_t num = (p - 1) * (designed_d - 1);
  return (num + p - 1) / p * r;
}

BchCode bch_make(FieldPtr field, std::size_t designed_d) {
  const std::size_t n = field->q() - 1;
  if (designed_d < 1 || designed_d > n) throw CodeError("bch_make: designed distance must lie in [1, q - 1]");
  const unsigned p = field->p();
  // zeros g^j for j in the union of p-cyclotomic cosets of 1..d-1
  std::vector<bool> zero(n, false);
  for (std::size_t j = 1; j < designed_d; ++j)
    for (std::size_t t = j; !zero[t]; t = t * p % n) zero[t] = true;
  Poly g = Poly::constant(field, 1);
  for (std::size_t j = 0; j < n; ++j)
    if (zero[j]) g = g * Poly(field, {field->neg(field->exp(static_cast<std::int64_t>(j))), 1});
  FpVec gen(g.coeffs().size());
  for (std::size_t i = 0; i < gen.size(); ++i) {
    if (!field->in_prime_subfield(g.coeff(i))) throw std::logic_error("bch_make: generator not defined over F_p");
    gen[i] = g.coeff(i);
  }
  BchCode code;
  code.rs = rs_make(field, n, n - designed_d + 1);
  code.p = p;
  code.n = n;
  code.designed_d = designed_d;
  code.generator = gen;
  code.k_p = n - (gen.size() - 1);
  for (std::size_t s = 0; s < code.k_p; ++s) {
    FpVec row(n, 0);
    std::copy(gen.begin(), gen.end(), row.begin() + s);
    if (!code_contains(code.rs, embed_word(field, row))) throw std::logic_error("bch_make: generator row outside the RS code");
    code.gen_matrix.push_back(std::move(row));
  }
  return code;
}

bool code_contains(const BchCode& code, std::span<const unsigned> word) {
  if (word.size() != code.n) throw CodeError("code_contains: length mismatch");
  for (unsigned c : word)
    if (c >= code.p) return false;
  return solve_triangular_combination(code.gen_matrix, word, code.p).has_value();
}

FpMatrix tower_basis(unsigned p, std::size_t n, const std::vector<FpMatrix>& generators) {
  // generators[0] spans C_0 = F_p^n (may be empty); the rest are C_1..C_ell.
  const std::size_t ell = generators.empty() ? 0 : generators.size() - 1;
  FpSpan span(p, n);
  FpMatrix basis;
  auto extend = [&](const FpMatrix& gens) {
    for (const auto& g : gens)
      if (span.insert(g)) basis.push_back(g);
  };
  for (std::size_t i = ell; i >= 1; --i) extend(generators[i]);
  FpMatrix units;
  for (std::size_t t = 0; t < n; ++t) {
    FpVec e(n, 0);
    e[t] = 1;
    units.push_back(std::move(e));
  }
  extend(units);
  if (basis.size() != n) throw std::logic_error("tower_basis: rank defect");

  // row j is reduced only by earlier rows, so every prefix keeps its span
  std::vector<long> owner(n, -1);
  for (std::size_t j = 0; j < n; ++j) {
    FpVec& b = basis[j];
    long lead = leading_index(b);
    while (lead >= 0 && owner[lead] >= 0) {
      const FpVec& r = basis[owner[lead]];
      unsigned f = b[lead];
      for (std::size_t t = lead; t < n; ++t) b[t] = (b[t] + (p - f) * r[t]) % p;
      lead = leading_index(b);
    }
    if (lead < 0) throw std::logic_error("tower_basis: rank defect");
    unsigned inv = fp_inv(b[lead], p);
    for (auto& x : b) x = static_cast<unsigned>(std::uint64_t(x) * inv % p);
    owner[lead] = static_cast<long>(j);
  }
  return basis;
}

const FpMatrix& tower_basis(const CodeTower& tower) { return tower.basis; }

namespace {

FpMatrix identity(std::size_t n) {
  FpMatrix m(n, FpVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

CodeTower tower_from_generators(unsigned p, std::size_t n, const std::vector<FpMatrix>& level_generators) {
  if (!is_prime(p)) throw CodeError("tower: p must be prime");
  CodeTower t;
  t.p = p;
  t.n = n;
  t.ell = level_generators.size();
  t.generators.push_back(identity(n));
  for (const auto& g : level_generators) {
    for (const auto& row : g) {
      if (row.size() != n) throw CodeError("tower: generator length mismatch");
      for (unsigned c : row)
        if (c >= p) throw CodeError("tower: generator entry out of range");
    }
    t.generators.push_back(g);
  }
  for (const auto& g : t.generators) t.dims.push_back(fp_rank(g, p));
  t.basis = tower_basis(p, n, t.generators);
  std::string why;
  if (!tower_valid(t, &why)) throw CodeError("tower: " + why);
  return t;
}

CodeTower tower_from_basis(unsigned p, std::size_t n, std::vector<std::size_t> dims, FpMatrix basis) {
  if (!is_prime(p)) throw CodeError("tower: p must be prime");
  if (dims.empty() || dims[0] != n) throw CodeError("tower: dims[0] must equal n");
  if (basis.size() != n) throw CodeError("tower: basis must have n rows");
  CodeTower t;
  t.p = p;
  t.n = n;
  t.ell = dims.size() - 1;
  t.dims = dims;
  t.basis = std::move(basis);
  for (std::size_t i = 0; i <= t.ell; ++i) t.generators.emplace_back(t.basis.begin(), t.basis.begin() + dims[i]);
  std::string why;
  if (!tower_valid(t, &why)) throw CodeError("tower: " + why);
  return t;
}

CodeTower tower_make(FieldPtr field, std::size_t ell) {
  if (field->p() != 2) throw CodeError("tower_make: q must be a power of two");
  const std::size_t n = field->q() - 1;
  std::size_t d = 1;
  for (std::size_t i = 0; i < ell; ++i) d *= 4;
  if (d > n) throw CodeError("tower_make: ell too large, need 4^ell <= q - 1");
  CodeTower t;
  t.p = 2;
  t.n = n;
  t.ell = ell;
  t.field = field;
  t.generators.push_back(identity(n));
  t.designed.push_back(1);
  t.dims.push_back(n);
  d = 1;
  for (std::size_t i = 1; i <= ell; ++i) {
    d *= 4;
    t.bch.push_back(bch_make(field, d));
    t.generators.push_back(t.bch.back().gen_matrix);
    t.designed.push_back(d);
    t.dims.push_back(t.bch.back().k_p);
  }
  t.basis = tower_basis(2, n, t.generators);
  std::string why;
  if (!tower_valid(t, &why)) throw std::logic_error("tower_make: " + why);
  return t;
}

bool tower_valid(const CodeTower& t, std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (t.basis.size() != t.n) return fail("basis must have n rows");
  if (t.dims.size() != t.ell + 1 || t.generators.size() != t.ell + 1) return fail("level count mismatch");
  if (t.dims[0] != t.n) return fail("C_0 must be the full space");
  for (std::size_t i = 1; i <= t.ell; ++i)
    if (t.dims[i] > t.dims[i - 1]) return fail("dimensions must be non-increasing");
  std::set<long> leads;
  for (const auto& b : t.basis) {
    if (b.size() != t.n) return fail("basis row length mismatch");
    long l = leading_index(b);
    if (l < 0 || !leads.insert(l).second) return fail("basis rows do not permute to an upper-triangular matrix");
  }
  for (std::size_t i = 0; i <= t.ell; ++i) {
    FpSpan prefix(t.p, t.n);
    for (std::size_t j = 0; j < t.dims[i]; ++j) prefix.insert(t.basis[j]);
    if (prefix.dim() != t.dims[i]) return fail("basis prefix is not independent");
    for (const auto& g : t.generators[i])
      if (!prefix.contains(g)) return fail("basis prefix does not span C_" + std::to_string(i));
    if (fp_rank(t.generators[i], t.p) != t.dims[i]) return fail("generator rank differs from dims");
    if (i > 0) {
      FpSpan prev(t.p, t.n);
      for (const auto& g : t.generators[i - 1]) prev.insert(g);
      for (const auto& g : t.generators[i])
        if (!prev.contains(g)) return fail("codes are not nested");
    }
  }
  return true;
}

}  // namespace dlat
