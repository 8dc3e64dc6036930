#include "dlat/euclid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dlat {

double canonical_mod(double y, unsigned p) {
  double r = std::fmod(y, static_cast<double>(p));
  if (r < 0) r += p;
  if (r >= p) r = 0;  // -tiny % p rounds up to p
  return r;
}

TorusWord TorusWord::make(unsigned p, std::span<const double> y) {
  if (p < 2) throw std::invalid_argument("TorusWord: modulus must be >= 2");
  TorusWord t{p, {}};
  t.coords.reserve(y.size());
  for (double v : y) {
    if (!std::isfinite(v)) throw std::invalid_argument("TorusWord: non-finite coordinate");
    t.coords.push_back(canonical_mod(v, p));
  }
  return t;
}

double torus_abs(double a, unsigned p) {
  double r = canonical_mod(a, p);
  return std::min(r, p - r);
}

double torus_norm_sq(const TorusWord& y) {
  double s = 0;
  for (double v : y.coords) {
    double d = torus_abs(v, y.p);
    s += d * d;
  }
  return s;
}

double torus_norm(const TorusWord& y) { return std::sqrt(torus_norm_sq(y)); }

double torus_dist_sq(const TorusWord& y, std::span<const unsigned> c) {
  if (c.size() != y.n()) throw std::invalid_argument("torus_dist_sq: length mismatch");
  double s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    double d = torus_abs(y.coords[i] - c[i], y.p);
    s += d * d;
  }
  return s;
}

ReliabilityVector reliability_map(const TorusWord& y) {
  const unsigned p = y.p;
  ReliabilityVector r{p, y.n(), std::vector<double>(y.n() * p, 0.0)};
  for (std::size_t i = 0; i < y.n(); ++i) {
    double fl = std::floor(y.coords[i]);
    double t = y.coords[i] - fl;
    unsigned c = static_cast<unsigned>(fl) % p;
    r.entries[i * p + c] += 1 - t;
    r.entries[i * p + (c + 1) % p] += t;
  }
  return r;
}

double list_size_bound(double r_star, double epsilon) {
  if (!(r_star > 0 && r_star < 1)) throw std::invalid_argument("list_size_bound: R* must lie in (0, 1)");
  if (!(epsilon > 0 && epsilon < 1)) throw std::invalid_argument("list_size_bound: epsilon must lie in (0, 1)");
  double num = 1 / r_star + 1 / std::sqrt(2 * r_star);
  return num / (1 - std::sqrt(r_star / (epsilon + (1 - epsilon) * r_star)));
}

EuclidResult euclid_list_decode(const BchCode& code, const TorusWord& y, double epsilon, const KvOptions& opt) {
  if (y.n() != code.n) throw std::invalid_argument("euclid_list_decode: received length differs from n");
  if (y.p != code.p) throw std::invalid_argument("euclid_list_decode: torus modulus differs from p");
  if (code.designed_d < 2) throw std::invalid_argument("euclid_list_decode: designed distance 1 is handled by rounding");
  EuclidResult res;
  res.s_bound = list_size_bound(code.rs.r_star(), epsilon);
  res.sq_radius = (1 - epsilon) * static_cast<double>(code.rs.d()) / 2;
  KvResult kv = kv_decode(code.rs, reliability_map(y), res.s_bound, opt);
  res.kv_list_size = kv.codewords.size();
  for (const Word& w : kv.codewords) {
    if (!std::all_of(w.begin(), w.end(), [&](Symbol s) { return s < code.p; })) continue;
    FpVec c(w.begin(), w.end());
    double d2 = torus_dist_sq(y, c);
    if (d2 <= res.sq_radius + 1e-9) {
      res.codewords.push_back(std::move(c));
      res.dist_sq.push_back(d2);
    }
  }
  return res;
}

}  // namespace dlat
