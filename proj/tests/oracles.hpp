#pragma once

// Brute-force references shared by the unit tests. Nothing here calls the
// routine it is meant to check.

#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "dlat/codes.hpp"
#include "dlat/rng.hpp"
#include "dlat/softdecode.hpp"

namespace oracle {

using namespace dlat;

// Cyclotomic cosets of p mod n touching {1, ..., d-1}; their total size is
// the codimension of the narrow-sense BCH code.
inline std::size_t coset_codim(unsigned p, std::size_t n, std::size_t d) {
  std::set<std::size_t> zeros;
  for (std::size_t j = 1; j < d; ++j) {
    std::size_t x = j % n;
    do {
      zeros.insert(x);
      x = x * p % n;
    } while (x != j % n);
  }
  return zeros.size();
}

// Rank over F_p of a matrix with entries < p, by plain Gauss-Jordan.
inline std::size_t rank_mod_p(std::vector<std::vector<unsigned>> a, unsigned p) {
  auto inv = [p](unsigned x) {
    for (unsigned y = 1; y < p; ++y)
      if (x * y % p == 1) return y;
    return 0u;
  };
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    unsigned s = inv(a[rank][c]);
    for (auto& x : a[rank]) x = x * s % p;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == rank || a[i][c] == 0) continue;
      unsigned f = a[i][c];
      for (std::size_t t = 0; t < cols; ++t) a[i][t] = (a[i][t] + (p - f) * a[rank][t]) % p;
    }
    ++rank;
  }
  return rank;
}

// Rank over an arbitrary F_q, Gauss-Jordan with the field's own operations.
inline std::size_t rank_field(const Field& f, std::vector<std::vector<Symbol>> a) {
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    Symbol s = f.inv(a[rank][c]);
    for (auto& x : a[rank]) x = f.mul(x, s);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == rank || a[i][c] == 0) continue;
      Symbol m = a[i][c];
      for (std::size_t t = 0; t < cols; ++t) a[i][t] = f.sub(a[i][t], f.mul(m, a[rank][t]));
    }
    ++rank;
  }
  return rank;
}

// Dimension of {c in F_p^n : sum_i c_i g^{ij} = 0 for j = 1..d-1}, read off
// the parity checks expanded into their F_p coordinates.
inline std::size_t subfield_dim(const Field& f, std::size_t d) {
  const std::size_t n = f.q() - 1;
  std::vector<std::vector<unsigned>> h;
  for (std::size_t j = 1; j < d; ++j) {
    std::vector<std::vector<unsigned>> rows(f.r(), std::vector<unsigned>(n));
    for (std::size_t i = 0; i < n; ++i) {
      auto c = f.coeffs(f.exp(static_cast<std::int64_t>(i * j)));
      for (unsigned t = 0; t < f.r(); ++t) rows[t][i] = c[t];
    }
    for (auto& r : rows) h.push_back(std::move(r));
  }
  return n - rank_mod_p(h, f.p());
}

// All codewords of an RS code, by encoding every message.
inline std::vector<Word> all_codewords(const RsCode& code) {
  std::vector<Word> out;
  const std::uint32_t q = code.field->q();
  std::vector<Symbol> msg(code.k, 0);
  for (;;) {
    out.push_back(rs_encode(code, Poly(code.field, msg)));
    std::size_t t = 0;
    while (t < msg.size() && ++msg[t] == q) msg[t++] = 0;
    if (t == msg.size()) break;
  }
  return out;
}

// Sum over i of X-power times Y-power coefficients, straight from the definition.
inline Symbol naive_eval(const Field& f, const std::vector<Symbol>& c, Symbol x) {
  Symbol acc = 0;
  for (std::size_t i = 0; i < c.size(); ++i) acc = f.add(acc, f.mul(c[i], f.pow(x, static_cast<std::int64_t>(i))));
  return acc;
}

// Reliability vector concentrated near a random word: each block puts a
// random weight in [lo, 1] on the word's symbol and spreads the rest.
inline ReliabilityVector peaked_reliability(unsigned p, const std::vector<unsigned>& c, double lo, std::mt19937_64& g) {
  ReliabilityVector pi{p, c.size(), std::vector<double>(c.size() * p, 0.0)};
  for (std::size_t i = 0; i < c.size(); ++i) {
    double w = uniform_real(g, lo, 1.0);
    std::vector<double> rest(p);
    double s = 0;
    for (unsigned a = 0; a < p; ++a)
      if (a != c[i]) s += rest[a] = uniform01(g);
    for (unsigned a = 0; a < p; ++a) pi.entries[i * p + a] = a == c[i] ? w : (s > 0 ? (1 - w) * rest[a] / s : 0);
    double tot = 0;
    for (unsigned a = 0; a < p; ++a) tot += pi.entries[i * p + a];
    pi.entries[i * p + c[i]] += 1 - tot;
  }
  return pi;
}

}  // namespace oracle

namespace oracle {

// All codewords of a small F_p code from its generator rows.
inline std::vector<dlat::FpVec> span_all(const dlat::FpMatrix& rows, unsigned p, std::size_t n) {
  std::vector<dlat::FpVec> out{dlat::FpVec(n, 0)};
  for (const auto& r : rows) {
    std::vector<dlat::FpVec> next;
    for (const auto& v : out)
      for (unsigned a = 0; a < p; ++a) {
        dlat::FpVec w = v;
        for (std::size_t t = 0; t < n; ++t) w[t] = (w[t] + a * r[t]) % p;
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

// Squared torus distance computed by trying the shifts -p, 0, p per coordinate.
inline double shift_dist_sq(std::span<const double> y, std::span<const unsigned> c, unsigned p) {
  double s = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    double best = 1e300;
    const double base = y[i] - std::floor(y[i] / p) * p - c[i];
    for (int k = -1; k <= 1; ++k) best = std::min(best, std::abs(base + k * double(p)));
    s += best * best;
  }
  return s;
}

// Received word for the code-level comparison: a random codeword plus a
// noise of norm up to 1.3 times the decoding radius, or uniform in [0, p)^n.
inline std::vector<double> euclid_target(const std::vector<dlat::FpVec>& words, unsigned p, double radius,
                                         std::mt19937_64& g) {
  const std::size_t n = words[0].size();
  std::vector<double> y(n);
  if (dlat::uniform01(g) < 0.2) {
    for (auto& x : y) x = dlat::uniform_real(g, 0, p);
    return y;
  }
  const auto& c = words[dlat::uniform_int(g, 0, words.size() - 1)];
  double s = 0;
  std::vector<double> e(n);
  for (auto& x : e) {
    x = dlat::standard_normal(g);
    s += x * x;
  }
  const double len = dlat::uniform_real(g, 0, 1.3) * radius / std::sqrt(s);
  for (std::size_t i = 0; i < n; ++i) y[i] = c[i] + e[i] * len;
  return y;
}

}  // namespace oracle
