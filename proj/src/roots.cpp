#include <algorithm>

#include "dlat/softdecode.hpp"

namespace dlat {

namespace {

using Rows = std::vector<std::vector<Symbol>>;

void trim(Rows& q) {
  for (auto& r : q)
    while (!r.empty() && r.back() == 0) r.pop_back();
  while (!q.empty() && q.back().empty()) q.pop_back();
}

// Divide by the largest power of X dividing every row.
void strip_x(Rows& q) {
  std::size_t s = SIZE_MAX;
  for (const auto& r : q) {
    for (std::size_t i = 0; i < r.size() && i < s; ++i)
      if (r[i] != 0) {
        s = i;
        break;
      }
  }
  if (s == 0 || s == SIZE_MAX) return;
  for (auto& r : q)
    if (!r.empty()) r.erase(r.begin(), r.begin() + static_cast<long>(std::min(s, r.size())));
}

// Q(X, XY + gamma)
Rows shift(const Field& f, const Rows& q, Symbol gamma) {
  const unsigned p = f.p();
  Rows out(q.size());
  for (std::size_t s = 0; s < q.size(); ++s) {
    std::vector<Symbol> acc;
    Symbol gpow = 1;  // gamma^{t-s}
    for (std::size_t t = s; t < q.size(); ++t) {
      Symbol c = f.mul(binom_mod_p(t, s, p), gpow);
      if (c != 0 && !q[t].empty()) {
        if (acc.size() < q[t].size()) acc.resize(q[t].size(), 0);
        for (std::size_t i = 0; i < q[t].size(); ++i) acc[i] = f.add(acc[i], f.mul(c, q[t][i]));
      }
      gpow = f.mul(gpow, gamma);
      if (gpow == 0) break;
    }
    if (!acc.empty()) acc.insert(acc.begin(), s, 0);
    out[s] = std::move(acc);
  }
  trim(out);
  return out;
}

void rr(const Field& f, Rows q, std::size_t k, std::vector<Symbol>& prefix, std::vector<std::vector<Symbol>>& out) {
  if (prefix.size() == k) {
    out.push_back(prefix);
    return;
  }
  strip_x(q);
  if (q.empty()) return;
  if (q[0].empty()) {
    // Y | Q: the remaining coefficients may all be zero
    auto cand = prefix;
    cand.resize(k, 0);
    out.push_back(std::move(cand));
  }
  // roots of Q(0, Y) by exhaustive search
  for (Symbol g = 0; g < f.q(); ++g) {
    Symbol v = 0;
    for (std::size_t t = q.size(); t-- > 0;) v = f.add(f.mul(v, g), q[t].empty() ? 0 : q[t][0]);
    if (v != 0) continue;
    prefix.push_back(g);
    rr(f, shift(f, q, g), k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Poly> y_roots(const BiPoly& q, std::size_t k) {
  if (q.is_zero()) throw std::invalid_argument("y_roots: Q must be nonzero");
  const FieldPtr& field = q.field();
  std::vector<std::vector<Symbol>> cands;
  std::vector<Symbol> prefix;
  if (k == 0) return {};
  rr(*field, q.rows(), k, prefix, cands);
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  std::vector<Poly> roots;
  for (auto& c : cands) {
    Poly fpoly(field, c);
    if (q.substitute(fpoly).is_zero()) roots.push_back(std::move(fpoly));
  }
  return roots;
}

}  // namespace dlat
