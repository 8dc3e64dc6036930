#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"

using namespace dlat;

namespace {

// D_{a,b}(X^i Y^j) at (x, y) = C(i,a) C(j,b) x^{i-a} y^{j-b}.
Symbol monomial_hasse(const Field& f, long i, long j, Symbol x, Symbol y, long a, long b) {
  if (a > i || b > j) return 0;
  Symbol c = f.mul(binom_mod_p(i, a, f.p()), binom_mod_p(j, b, f.p()));
  return f.mul(c, f.mul(f.pow(x, i - a), f.pow(y, j - b)));
}

// Smallest weighted degree of a nonzero Q meeting the constraints, found by
// adding monomials in order until the constraint columns become dependent.
long min_wdeg_by_rank(const Field& f, const std::vector<InterpPoint>& pts, long w) {
  std::vector<std::pair<long, long>> mons;
  for (long d = 0;; ++d) {
    for (long j = 0; j * w <= d; ++j) mons.push_back({d - j * w, j});
    // rank of the constraint matrix restricted to the first N monomials
    // (columns); rows are (point, a, b) with a + b < m
    for (std::size_t N = mons.size() - (d / w + 1) + 1; N <= mons.size(); ++N) {
      std::vector<std::vector<Symbol>> cols;
      for (std::size_t t = 0; t < N; ++t) {
        std::vector<Symbol> col;
        for (const auto& pt : pts)
          for (long a = 0; a < pt.m; ++a)
            for (long b = 0; a + b < pt.m; ++b) col.push_back(monomial_hasse(f, mons[t].first, mons[t].second, pt.x, pt.y, a, b));
        cols.push_back(col);
      }
      if (oracle::rank_field(f, cols) < N) return d;
    }
  }
}

std::uint64_t cost_of(const std::vector<InterpPoint>& pts) {
  std::uint64_t c = 0;
  for (const auto& p : pts) c += std::uint64_t(p.m) * (p.m + 1) / 2;
  return c;
}

double threshold(std::size_t n, std::size_t k, double s) {
  const double rs = double(k - 1) / double(n);
  return std::sqrt(double(k - 1)) / (1 - (1 / s) * (1 / rs + 1 / std::sqrt(2 * rs)));
}

// Exhaustive check of the guarantee for one RS code over a prime field.
std::size_t kv_exhaustive(unsigned p, std::size_t n, std::size_t k, double s, int instances, std::uint64_t seed) {
  auto f = field_make(p, 1);
  auto code = rs_make(f, n, k);
  auto words = oracle::all_codewords(code);
  std::size_t guaranteed = 0;
  for (int inst = 0; inst < instances; ++inst) {
    auto g = stream_rng(seed, inst);
    const Word& center = words[uniform_int(g, 0, words.size() - 1)];
    ReliabilityVector pi = oracle::peaked_reliability(p, std::vector<unsigned>(center.begin(), center.end()),
                                                      uniform_real(g, 0.2, 1.0), g);
    KvResult r = kv_decode(code, pi, s);
    const double thr = threshold(n, k, s) * pi.norm();
    for (const auto& c : words) {
      double ip = 0;
      for (std::size_t i = 0; i < n; ++i) ip += pi.at(i, c[i]);
      const bool listed = std::binary_search(r.codewords.begin(), r.codewords.end(), c);
      if (ip >= thr) {
        ++guaranteed;
        CHECK(listed);
      }
    }
    for (std::size_t t = 0; t < r.codewords.size(); ++t) {
      CHECK(code_contains(code, r.codewords[t]));
      CHECK(static_cast<long>(r.scores[t]) > r.wdeg);
      CHECK(r.mult.score(std::vector<unsigned>(r.codewords[t].begin(), r.codewords[t].end())) == r.scores[t]);
    }
    CHECK(std::is_sorted(r.codewords.begin(), r.codewords.end()));
  }
  return guaranteed;
}

}  // namespace

TEST_CASE("multiplicity assignment examples") {
  FpVec c{0, 1, 1, 0, 1};
  auto pi = indicator(2, c);
  auto m = multiplicity_assign(pi, 3);
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(m.at(i, c[i]) == 3);
    CHECK(m.at(i, 1 - c[i]) == 0);
  }
  CHECK(m.cost == 6 * c.size());
  CHECK(multiplicity_assign(pi, 0.9).cost == 0);

  ReliabilityVector b{2, 1, {0.75, 0.25}};
  auto mb = multiplicity_assign(b, 4);
  CHECK(mb.at(0, 0) == 3);
  CHECK(mb.at(0, 1) == 1);
  CHECK(mb.cost == 7);
  CHECK(multiplicity_cost(mb.m) == 7);
}

TEST_CASE("interpolation at a single point") {
  auto f = field_make(5, 1);
  std::vector<InterpPoint> pts{{0, 0, 1}};
  BiPoly q = interpolate(f, pts, 2);
  CHECK(q.weighted_degree(1) == 1);
  CHECK(q.eval(0, 0) == 0);
  CHECK(q.term_count() == 1);
}

TEST_CASE("interpolation through a codeword is divisible by Y - f") {
  auto f = field_make(2, 4);
  auto code = rs_make(f, 15, 5);
  auto g = stream_rng(2, 0);
  for (int t = 0; t < 10; ++t) {
    std::vector<Symbol> msg(5);
    for (auto& x : msg) x = static_cast<Symbol>(uniform_int(g, 0, 15));
    Poly fx(f, msg);
    Word c = rs_encode(code, fx);
    std::vector<InterpPoint> pts;
    for (std::size_t i = 0; i < 15; ++i) pts.push_back({code.eval_points[i], c[i], 1});
    BiPoly q = interpolate(f, pts, 5);
    CHECK(q.substitute(fx).is_zero());
    auto roots = y_roots(q, 5);
    CHECK(std::find(roots.begin(), roots.end(), fx) != roots.end());
  }
}

TEST_CASE("Hasse derivatives agree with the definitional expansion") {
  auto f = field_make(5, 1);
  auto g = stream_rng(4, 0);
  for (int t = 0; t < 20; ++t) {
    std::vector<std::vector<Symbol>> rows(1 + uniform_int(g, 0, 4));
    for (auto& r : rows) {
      r.resize(1 + uniform_int(g, 0, 6));
      for (auto& x : r) x = static_cast<Symbol>(uniform_int(g, 0, 4));
    }
    BiPoly q(f, rows);
    for (Symbol x = 0; x < 5; ++x)
      for (Symbol y = 0; y < 5; ++y)
        for (std::size_t a = 0; a < 4; ++a)
          for (std::size_t b = 0; b < 4; ++b) {
            Symbol want = 0;
            for (const auto& [ij, c] : q.terms())
              want = f->add(want, f->mul(c, monomial_hasse(*f, ij.first, ij.second, x, y, a, b)));
            REQUIRE(hasse(q, x, y, a, b) == want);
            REQUIRE(q.shifted_coeff(x, y, a, b) == want);
          }
  }
}

TEST_CASE("interpolation is minimal and matches the Gaussian reference") {
  for (unsigned r : {1u, 2u}) {
    auto f = field_make(5, r);
    for (std::size_t k : {2ul, 3ul}) {
      auto g = stream_rng(9, r * 10 + k);
      int checked = 0;
      while (checked < 25) {
        std::vector<InterpPoint> pts;
        std::size_t np = 1 + uniform_int(g, 0, 5);
        for (std::size_t i = 0; i < np; ++i)
          pts.push_back({static_cast<Symbol>(uniform_int(g, 0, f->q() - 1)), static_cast<Symbol>(uniform_int(g, 0, f->q() - 1)),
                         static_cast<unsigned>(1 + uniform_int(g, 0, 3))});
        std::sort(pts.begin(), pts.end(), [](auto& a, auto& b) { return std::tie(a.x, a.y) < std::tie(b.x, b.y); });
        pts.erase(std::unique(pts.begin(), pts.end(), [](auto& a, auto& b) { return a.x == b.x && a.y == b.y; }), pts.end());
        if (cost_of(pts) > 40) continue;
        ++checked;
        const long w = static_cast<long>(k) - 1;
        BiPoly q = interpolate(f, pts, k);
        BiPoly ref = interpolate_reference(f, pts, k);
        REQUIRE_FALSE(q.is_zero());
        for (const auto& pt : pts) CHECK(vanishes_to_order(q, pt.x, pt.y, pt.m));
        CHECK(q == ref);
        CHECK(*q.weighted_degree(w) == min_wdeg_by_rank(*f, pts, w));
        CHECK(*q.weighted_degree(w) <= weighted_degree_bound(cost_of(pts), w));
      }
    }
  }
}

TEST_CASE("y_roots examples") {
  auto f = field_make(5, 1);
  BiPoly q(f, {{0, 0, 4}, {}, {1}});  // Y^2 - X^2
  auto roots = y_roots(q, 2);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == Poly(f, {0, 1}));
  CHECK(roots[1] == Poly(f, {0, 4}));

  BiPoly y(f, {{}, {1}});
  auto r0 = y_roots(y, 3);
  REQUIRE(r0.size() == 1);
  CHECK(r0[0].is_zero());
}

TEST_CASE("y_roots recovers planted factors") {
  for (auto [p, r] : std::vector<std::pair<unsigned, unsigned>>{{2, 4}, {3, 2}, {5, 1}, {7, 1}}) {
    auto f = field_make(p, r);
    auto g = stream_rng(21, p * 100 + r);
    for (int t = 0; t < 30; ++t) {
      std::size_t k = 1 + uniform_int(g, 0, 3);
      auto rand_poly = [&](std::size_t len) {
        std::vector<Symbol> c(len);
        for (auto& x : c) x = static_cast<Symbol>(uniform_int(g, 0, f->q() - 1));
        return Poly(f, c);
      };
      Poly a = rand_poly(k), b = rand_poly(k), h = rand_poly(1 + uniform_int(g, 0, 3));
      if (h.is_zero()) h = Poly::constant(f, 1);
      // (Y - a)(Y - b) h = h Y^2 - h(a + b) Y + h a b
      Poly c1 = (h * (a + b)).scaled(f->neg(1)), c0 = h * a * b;
      BiPoly q(f, {c0.coeffs(), c1.coeffs(), h.coeffs()});
      auto roots = y_roots(q, k);
      CHECK(std::find(roots.begin(), roots.end(), a) != roots.end());
      CHECK(std::find(roots.begin(), roots.end(), b) != roots.end());
      for (const auto& fx : roots) CHECK(q.substitute(fx).is_zero());
      CHECK(std::adjacent_find(roots.begin(), roots.end()) == roots.end());
    }
  }
}

TEST_CASE("KV decoding of an exact indicator returns the word") {
  auto f = field_make(2, 4);
  auto b = bch_make(f, 4);
  auto g = stream_rng(6, 0);
  for (int t = 0; t < 10; ++t) {
    FpVec c(15, 0);
    for (const auto& row : b.gen_matrix)
      if (g() & 1)
        for (std::size_t i = 0; i < 15; ++i) c[i] ^= row[i];
    KvResult r = kv_decode(b.rs, indicator(2, c), 60);
    Word cw = embed_word(f, c);
    CHECK(std::binary_search(r.codewords.begin(), r.codewords.end(), cw));
  }
}

TEST_CASE("KV guarantee, exhaustive over F_5 with n=4, k=2") {
  std::size_t hits = 0;
  for (double s : {12.0, 20.0, 60.0}) hits += kv_exhaustive(5, 4, 2, s, 60, static_cast<std::uint64_t>(s));
  CHECK(hits > 30);  // the guarantee is not vacuous on these instances
}

TEST_CASE("KV guarantee, exhaustive over F_7 with n=6, k=2") {
  std::size_t hits = 0;
  for (double s : {8.0, 20.0}) hits += kv_exhaustive(7, 6, 2, s, 40, static_cast<std::uint64_t>(s) + 100);
  CHECK(hits > 20);
}

TEST_CASE("uniform reliabilities give a vacuous guarantee") {
  auto code = rs_make(field_make(5, 1), 4, 2);
  ReliabilityVector pi{5, 4, std::vector<double>(20, 0.2)};
  const double s = 20;
  const double thr = threshold(4, 2, s) * pi.norm();
  for (const auto& c : oracle::all_codewords(code)) CHECK(pi.inner(std::vector<unsigned>(c.begin(), c.end())) < thr);
  CHECK_NOTHROW(kv_decode(code, pi, s));
}

TEST_CASE("KV argument checks") {
  auto code = rs_make(field_make(5, 1), 4, 2);
  ReliabilityVector pi{5, 4, std::vector<double>(20, 0.2)};
  CHECK_THROWS_AS(kv_decode(code, pi, 5.0), std::invalid_argument);  // S <= 1/R* + 1/sqrt(2R*)
  ReliabilityVector bad{5, 4, std::vector<double>(20, 0.3)};
  CHECK_THROWS_AS(kv_decode(code, bad, 20), std::invalid_argument);
  ReliabilityVector wrong_p{3, 4, std::vector<double>(12, 1.0 / 3)};
  CHECK_THROWS_AS(kv_decode(code, wrong_p, 20), std::invalid_argument);
}
