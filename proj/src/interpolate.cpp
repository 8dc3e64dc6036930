#include <algorithm>
#include <stdexcept>

#include "dlat/softdecode.hpp"

namespace dlat {

namespace {

using Rows = std::vector<std::vector<Symbol>>;

// Work (in touched coefficients) above which the per-polynomial loops fork.
constexpr std::size_t kParallelWork = 1u << 15;

inline Symbol binom_symbol(std::size_t n, std::size_t k, unsigned p) {
  if (p == 2) return (n & k) == k ? 1 : 0;
  return binom_mod_p(n, k, p);
}

// sum_{t>=b} sum_{i>=a} C(i,a) C(t,b) q_{ti} x^{i-a} y^{t-b}
Symbol hasse_rows(const Field& f, const Rows& rows, Symbol x, Symbol y, std::size_t a, std::size_t b) {
  const unsigned p = f.p();
  Symbol acc = 0, ypow = 1;
  for (std::size_t t = b; t < rows.size(); ++t) {
    Symbol cb = binom_symbol(t, b, p);
    if (cb != 0 && ypow != 0) {
      const auto& r = rows[t];
      Symbol inner = 0;
      if (x == 0) {
        if (a < r.size()) inner = r[a];
      } else {
        Symbol xpow = 1;
        for (std::size_t i = a; i < r.size(); ++i) {
          if (r[i] != 0) {
            Symbol ca = binom_symbol(i, a, p);
            if (ca != 0) inner = f.add(inner, f.mul(f.mul(ca, r[i]), xpow));
          }
          xpow = f.mul(xpow, x);
        }
      }
      acc = f.add(acc, f.mul(f.mul(cb, inner), ypow));
    }
    if (y == 0) break;
    ypow = f.mul(ypow, y);
  }
  return acc;
}

std::uint64_t total_cost(std::span<const InterpPoint> points) {
  std::uint64_t c = 0;
  for (const auto& pt : points) c += std::uint64_t(pt.m) * (pt.m + 1) / 2;
  return c;
}

void check_args(const FieldPtr& field, std::span<const InterpPoint> points, std::size_t k) {
  if (!field) throw std::invalid_argument("interpolate: null field");
  if (k < 2) throw std::invalid_argument("interpolate: need k >= 2 so the Y weight is positive");
  for (const auto& pt : points)
    if (pt.x >= field->q() || pt.y >= field->q()) throw std::invalid_argument("interpolate: point outside the field");
  if (total_cost(points) == 0) throw std::invalid_argument("interpolate: total cost must be >= 1");
}

}  // namespace

Symbol hasse(const BiPoly& q, Symbol x, Symbol y, std::size_t a, std::size_t b) {
  return hasse_rows(*q.field(), q.rows(), x, y, a, b);
}

bool vanishes_to_order(const BiPoly& q, Symbol x, Symbol y, unsigned m) {
  for (std::size_t b = 0; b < m; ++b)
    for (std::size_t a = 0; a + b < m; ++a)
      if (hasse(q, x, y, a, b) != 0) return false;
  return true;
}

BiPoly interpolate(const FieldPtr& field, std::span<const InterpPoint> points, std::size_t k) {
  check_args(field, points, k);
  const Field& f = *field;
  const long w = static_cast<long>(k) - 1;
  const long delta = weighted_degree_bound(total_cost(points), w);
  const std::size_t L = static_cast<std::size_t>(delta / w);

  // g_j starts as Y^j; its leading monomial stays X^{lead[j]} Y^j throughout.
  std::vector<Rows> g(L + 1);
  std::vector<long> lead(L + 1, 0);
  for (std::size_t j = 0; j <= L; ++j) {
    g[j].assign(j + 1, {});
    g[j][j] = {1};
  }
  std::vector<Symbol> disc(L + 1);
  const long nj = static_cast<long>(L + 1);

  auto work = [&] {
    std::size_t s = 0;
    for (const auto& rows : g)
      for (const auto& r : rows) s += r.size();
    return s;
  };

  for (const auto& pt : points) {
    for (std::size_t b = 0; b < pt.m; ++b) {
      for (std::size_t a = 0; a + b < pt.m; ++a) {
        const bool par = work() > kParallelWork;
#pragma omp parallel for schedule(static) if (par)
        for (long j = 0; j < nj; ++j) disc[j] = hasse_rows(f, g[j], pt.x, pt.y, a, b);

        long piv = -1;
        for (long j = 0; j < nj; ++j) {
          if (disc[j] == 0) continue;
          if (piv < 0 || monomial_less({lead[j], j}, {lead[piv], piv}, w)) piv = j;
        }
        if (piv < 0) continue;
        const Rows& gp = g[piv];
        const Symbol dp = disc[piv];

#pragma omp parallel for schedule(static) if (par)
        for (long j = 0; j < nj; ++j) {
          if (j == piv || disc[j] == 0) continue;
          Rows& gj = g[j];
          if (gj.size() < gp.size()) gj.resize(gp.size());
          for (std::size_t t = 0; t < gj.size(); ++t) {
            auto& r = gj[t];
            for (auto& c : r) c = f.mul(c, dp);
            if (t < gp.size()) {
              const auto& s = gp[t];
              if (r.size() < s.size()) r.resize(s.size(), 0);
              for (std::size_t i = 0; i < s.size(); ++i) r[i] = f.sub(r[i], f.mul(disc[j], s[i]));
            }
          }
        }

        // g* <- (X - x) g*
        Rows& gs = g[piv];
        const Symbol nx = f.neg(pt.x);
        for (auto& r : gs) {
          if (r.empty()) continue;
          r.push_back(0);
          for (std::size_t i = r.size() - 1; i > 0; --i) r[i] = f.add(r[i - 1], f.mul(nx, r[i]));
          r[0] = f.mul(nx, r[0]);
        }
        ++lead[piv];
      }
    }
  }

  long best = 0;
  for (long j = 1; j < nj; ++j)
    if (monomial_less({lead[j], j}, {lead[best], best}, w)) best = j;
  BiPoly q(field, g[best]);
  Symbol lc = q.coeff(static_cast<std::size_t>(lead[best]), static_cast<std::size_t>(best));
  if (lc == 0) throw std::logic_error("interpolate: leading monomial bookkeeping broken");
  return q.scaled(f.inv(lc));
}

BiPoly interpolate_reference(const FieldPtr& field, std::span<const InterpPoint> points, std::size_t k) {
  check_args(field, points, k);
  const Field& f = *field;
  const unsigned p = f.p();
  const long w = static_cast<long>(k) - 1;

  struct Constraint {
    Symbol x, y;
    std::size_t a, b;
  };
  std::vector<Constraint> cons;
  for (const auto& pt : points)
    for (std::size_t b = 0; b < pt.m; ++b)
      for (std::size_t a = 0; a + b < pt.m; ++a) cons.push_back({pt.x, pt.y, a, b});
  const std::size_t rows = cons.size();

  struct Basis {
    std::vector<Symbol> col;
    std::size_t pivot;
    std::vector<Symbol> combo;  // over monomials seen so far
  };
  std::vector<Basis> basis;
  std::vector<Monomial> monos;

  for (long D = 0;; ++D) {
    for (long y = 0; w * y <= D; ++y) {
      Monomial mono{D - w * y, y};
      const std::size_t idx = monos.size();
      monos.push_back(mono);
      std::vector<Symbol> v(rows, 0);
      for (std::size_t r = 0; r < rows; ++r) {
        const auto& c = cons[r];
        if (static_cast<std::size_t>(mono.x) < c.a || static_cast<std::size_t>(mono.y) < c.b) continue;
        Symbol coef = f.mul(binom_mod_p(mono.x, c.a, p), binom_mod_p(mono.y, c.b, p));
        if (coef == 0) continue;
        v[r] = f.mul(coef, f.mul(f.pow(c.x, mono.x - static_cast<long>(c.a)), f.pow(c.y, mono.y - static_cast<long>(c.b))));
      }
      std::vector<Symbol> combo(idx + 1, 0);
      combo[idx] = 1;
      for (const auto& bv : basis) {
        Symbol s = v[bv.pivot];
        if (s == 0) continue;
        for (std::size_t r = 0; r < rows; ++r) v[r] = f.sub(v[r], f.mul(s, bv.col[r]));
        for (std::size_t t = 0; t < bv.combo.size(); ++t) combo[t] = f.sub(combo[t], f.mul(s, bv.combo[t]));
      }
      std::size_t piv = rows;
      for (std::size_t r = 0; r < rows; ++r)
        if (v[r] != 0) {
          piv = r;
          break;
        }
      if (piv == rows) {
        BiPoly q(field);
        for (std::size_t t = 0; t <= idx; ++t)
          if (combo[t] != 0) q.set(monos[t].x, monos[t].y, combo[t]);
        return q;  // coefficient of the newest monomial is 1
      }
      Symbol inv = f.inv(v[piv]);
      for (auto& s : v) s = f.mul(s, inv);
      for (auto& s : combo) s = f.mul(s, inv);
      basis.push_back({std::move(v), piv, std::move(combo)});
    }
  }
}

}  // namespace dlat
