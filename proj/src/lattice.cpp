#include "dlat/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dlat/enumerate.hpp"
#include "dlat/rng.hpp"

namespace dlat {

namespace {

std::int64_t ipow(std::int64_t b, std::size_t e) {
  std::int64_t r = 1;
  while (e--) r *= b;
  return r;
}

IntMatrix to_int(const std::vector<std::vector<mpz_class>>& m) {
  IntMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const auto& x : m[i]) {
      if (!x.fits_slong_p()) throw std::overflow_error("lattice: basis entry exceeds 64 bits");
      out[i].push_back(x.get_si());
    }
  return out;
}

}  // namespace

IntMatrix hermite_normal_form(const IntMatrix& gens, std::size_t n) {
  std::vector<std::vector<mpz_class>> a;
  for (const auto& g : gens) {
    if (g.size() != n) throw std::invalid_argument("hermite_normal_form: row length mismatch");
    std::vector<mpz_class> r(n);
    for (std::size_t t = 0; t < n; ++t) r[t] = static_cast<long>(g[t]);
    a.push_back(std::move(r));
  }
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < a.size(); ++col) {
    // gcd-reduce column `col` among rows >= row
    for (;;) {
      std::size_t piv = a.size();
      for (std::size_t i = row; i < a.size(); ++i)
        if (a[i][col] != 0 && (piv == a.size() || abs(a[i][col]) < abs(a[piv][col]))) piv = i;
      if (piv == a.size()) break;
      std::swap(a[row], a[piv]);
      bool clean = true;
      for (std::size_t i = row + 1; i < a.size(); ++i) {
        if (a[i][col] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[row][col].get_mpz_t());
        for (std::size_t t = col; t < n; ++t) a[i][t] -= q * a[row][t];
        if (a[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (a[row][col] == 0) continue;
    if (a[row][col] < 0)
      for (auto& x : a[row]) x = -x;
    for (std::size_t i = 0; i < row; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[row][col].get_mpz_t());
      for (std::size_t t = col; t < n; ++t) a[i][t] -= q * a[row][t];
    }
    ++row;
  }
  a.resize(row);
  return to_int(a);
}

mpz_class determinant_exact(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("determinant_exact: matrix must be square");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m[i][j]);
  }
  // unimodular row operations (Euclid on each column) keep |det| fixed
  mpz_class det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    for (;;) {
      std::size_t piv = n;
      for (std::size_t i = col; i < n; ++i)
        if (a[i][col] != 0 && (piv == n || abs(a[i][col]) < abs(a[piv][col]))) piv = i;
      if (piv == n) return 0;
      std::swap(a[col], a[piv]);
      bool clean = true;
      for (std::size_t i = col + 1; i < n; ++i) {
        if (a[i][col] == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[col][col].get_mpz_t());
        for (std::size_t t = col; t < n; ++t) a[i][t] -= q * a[col][t];
        if (a[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    det *= a[col][col];
  }
  return abs(det);
}

ConstructionDLattice lattice_make(const CodeTower& tower) {
  std::string why;
  if (!tower_valid(tower, &why)) throw CodeError("lattice_make: " + why);
  ConstructionDLattice lat;
  lat.tower = tower;
  const std::size_t n = tower.n, ell = tower.ell;
  const unsigned p = tower.p;
  lat.level_shift.assign(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t top = 0;
    for (std::size_t i = 0; i <= ell; ++i)
      if (j < tower.dims[i]) top = i;
    lat.level_shift[j] = ell - top;
  }
  IntMatrix rows(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::int64_t s = ipow(p, lat.level_shift[j]);
    for (unsigned c : tower.basis[j]) rows[j].push_back(s * static_cast<std::int64_t>(c));
    long l = leading_index(tower.basis[j]);
    if (tower.basis[j][l] != 1) lat.unit_pivots = false;
  }
  if (lat.unit_pivots) {
    lat.basis_int = std::move(rows);
  } else {
    const std::int64_t top = ipow(p, ell);
    for (std::size_t t = 0; t < n; ++t) {
      IntVec e(n, 0);
      e[t] = top;
      rows.push_back(std::move(e));
    }
    lat.basis_int = hermite_normal_form(rows, n);
  }
  lat.det_exact = determinant_exact(lat.basis_int);
  return lat;
}

std::optional<FpVec> tower_coefficients(const CodeTower& tower, std::span<const unsigned> c, std::size_t level) {
  if (level > tower.ell) throw std::invalid_argument("tower_coefficients: level out of range");
  if (c.size() != tower.n) throw std::invalid_argument("tower_coefficients: length mismatch");
  FpMatrix prefix(tower.basis.begin(), tower.basis.begin() + static_cast<long>(tower.dims[level]));
  return solve_triangular_combination(prefix, c, tower.p);
}

IntVec representative(const CodeTower& tower, std::span<const unsigned> c, std::size_t level) {
  auto a = tower_coefficients(tower, c, level);
  if (!a) throw CodeError("representative: word is not in C_" + std::to_string(level));
  IntVec v(tower.n, 0);
  for (std::size_t j = 0; j < a->size(); ++j) {
    if ((*a)[j] == 0) continue;
    for (std::size_t t = 0; t < tower.n; ++t) v[t] += static_cast<std::int64_t>((*a)[j]) * tower.basis[j][t];
  }
  return v;
}

std::optional<MemberWitness> member(const ConstructionDLattice& lat, std::span<const std::int64_t> v, std::size_t level) {
  if (v.size() != lat.n()) throw std::invalid_argument("member: length mismatch");
  if (level > lat.ell()) throw std::invalid_argument("member: level out of range");
  const std::int64_t p = lat.p();
  MemberWitness w;
  IntVec cur(v.begin(), v.end());
  for (std::size_t i = level; i >= 1; --i) {
    FpVec c(cur.size());
    for (std::size_t t = 0; t < cur.size(); ++t) c[t] = static_cast<unsigned>(((cur[t] % p) + p) % p);
    if (!tower_coefficients(lat.tower, c, i)) return std::nullopt;
    IntVec ct = representative(lat.tower, c, i);
    for (std::size_t t = 0; t < cur.size(); ++t) cur[t] = (cur[t] - ct[t]) / p;
    w.codewords.push_back(std::move(c));
  }
  w.z = std::move(cur);
  return w;
}

IntVec reconstruct(const ConstructionDLattice& lat, const MemberWitness& w, std::size_t level) {
  IntVec v = w.z;
  // innermost codeword is c_1, the last entry
  for (std::size_t i = 1; i <= level; ++i) {
    IntVec ct = representative(lat.tower, w.codewords[level - i], i);
    for (std::size_t t = 0; t < v.size(); ++t) v[t] = ct[t] + static_cast<std::int64_t>(lat.p()) * v[t];
  }
  return v;
}

mpz_class determinant_closed_form(const ConstructionDLattice& lat) {
  std::size_t e = 0;
  for (std::size_t i = 1; i <= lat.ell(); ++i) e += lat.n() - lat.tower.dims[i];
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), lat.p(), e);
  return r;
}

mpz_class determinant(const ConstructionDLattice& lat) { return lat.det_exact; }

double norm(std::span<const std::int64_t> v) {
  double s = 0;
  for (auto x : v) s += static_cast<double>(x) * static_cast<double>(x);
  return std::sqrt(s);
}

double basis_max_norm(const ConstructionDLattice& lat) {
  double m = 0;
  for (const auto& r : lat.basis_int) m = std::max(m, norm(r));
  return m;
}

MinDistanceReport min_distance(const ConstructionDLattice& lat, std::size_t samples, std::uint64_t seed) {
  if (lat.p() != 2) throw CodeError("min_distance: claimed only for binary towers");
  if (lat.tower.designed.size() != lat.ell() + 1) throw CodeError("min_distance: tower carries no designed distances");
  for (std::size_t i = 0; i <= lat.ell(); ++i)
    if (lat.tower.designed[i] < static_cast<std::size_t>(ipow(4, i))) throw CodeError("min_distance: tower violates d_i >= 4^i");
  const std::size_t n = lat.n();
  const std::int64_t top = ipow(2, lat.ell());
  MinDistanceReport rep;
  rep.lambda1 = static_cast<double>(top);
  rep.witness.assign(n, 0);
  rep.witness[0] = top;
  if (!member(lat, rep.witness, lat.ell())) throw std::logic_error("min_distance: witness is not a lattice vector");
  // squared norms are integers, so "shorter than p^ell" means at most top^2 - 1
  const std::int64_t bound2 = top * top - 1;

  if (n <= 16) {
    rep.method = "exhaustive enumeration";
    rep.exhaustive = true;
    std::vector<double> zero(n, 0.0);
    for (auto& v : enumerate_ball_parallel(lat.basis_int, zero, std::sqrt(static_cast<double>(bound2) + 0.5))) {
      std::int64_t s2 = 0;
      for (auto x : v) s2 += x * x;
      if (s2 == 0 || s2 > bound2) continue;
      rep.refuted = true;
      rep.shorter = v;
      break;
    }
    return rep;
  }

  rep.method = "theorem-asserted, sampling-refuted-only";
  rep.samples = samples;
  // sparse signed sums of basis rows, centred modulo p^ell Z^n (a sublattice)
  auto draw = [&](long s) {
    auto g = stream_rng(seed, static_cast<std::uint64_t>(s));
    IntVec v(n, 0);
    const int terms = static_cast<int>(uniform_int(g, 1, 3));
    for (int t = 0; t < terms; ++t) {
      const auto& row = lat.basis_int[static_cast<std::size_t>(uniform_int(g, 0, static_cast<std::int64_t>(n) - 1))];
      const std::int64_t sign = (g() & 1) ? 1 : -1;
      for (std::size_t c = 0; c < n; ++c) v[c] += sign * row[c];
    }
    for (auto& x : v) {
      x = ((x % top) + top) % top;
      if (2 * x > top) x -= top;
    }
    return v;
  };
  const long ns = static_cast<long>(samples);
  long first_hit = std::numeric_limits<long>::max();
#pragma omp parallel for schedule(static) reduction(min : first_hit)
  for (long s = 0; s < ns; ++s) {
    IntVec v = draw(s);
    std::int64_t s2 = 0;
    for (auto x : v) s2 += x * x;
    if (s2 > 0 && s2 <= bound2) first_hit = std::min(first_hit, s);
  }
  if (first_hit != std::numeric_limits<long>::max()) {
    rep.refuted = true;
    rep.shorter = draw(first_hit);
  }
  return rep;
}

HermiteReport hermite_report(const ConstructionDLattice& lat) {
  if (!lat.tower.field) throw CodeError("hermite_report: lattice is not from a BCH tower");
  HermiteReport h;
  h.n = lat.n();
  h.h = static_cast<std::size_t>(ipow(2, lat.ell()));
  h.lambda1 = static_cast<double>(h.h);
  h.det = lat.det_exact;
  long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, h.det.get_mpz_t());
  double log2det = std::log2(mant) + static_cast<double>(exp2);
  h.normalized = h.lambda1 / std::exp2(log2det / static_cast<double>(h.n));
  h.bound = h.n > 1 ? std::sqrt(static_cast<double>(h.n) / std::log2(static_cast<double>(h.n))) : 1.0;
  // det <= q^{2h^2/3}  <=>  det^3 <= q^{2h^2}
  mpz_class lhs, rhs;
  mpz_pow_ui(lhs.get_mpz_t(), h.det.get_mpz_t(), 3);
  mpz_ui_pow_ui(rhs.get_mpz_t(), lat.tower.field->q(), 2 * h.h * h.h);
  h.det_within_bound = lhs <= rhs;
  return h;
}

IntVec sample_lattice_vector(const ConstructionDLattice& lat, int coeff_bound, std::mt19937_64& rng) {
  if (coeff_bound < 1) throw std::invalid_argument("sample_lattice_vector: coeff_bound must be >= 1");
  IntVec v(lat.n(), 0);
  for (const auto& row : lat.basis_int) {
    std::int64_t z = uniform_int(rng, -coeff_bound, coeff_bound);
    if (z == 0) continue;
    for (std::size_t t = 0; t < v.size(); ++t) v[t] += z * row[t];
  }
  if (!member(lat, v, lat.ell())) throw std::logic_error("sample_lattice_vector: sample failed membership");
  return v;
}

}  // namespace dlat
