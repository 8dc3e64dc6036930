#include "dlat/lattice_decoder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dlat {

IntVec round_decode_z(std::span<const double> y, std::span<const std::int64_t> ctilde, unsigned p) {
  if (y.size() != ctilde.size()) throw std::invalid_argument("round_decode_z: length mismatch");
  IntVec v(y.size());
  const double pd = p;
  for (std::size_t t = 0; t < y.size(); ++t)
    v[t] = ctilde[t] + static_cast<std::int64_t>(p) * round_half_up((y[t] - static_cast<double>(ctilde[t])) / pd);
  return v;
}

double euclid_distance(std::span<const double> y, std::span<const std::int64_t> v) {
  double s = 0;
  for (std::size_t t = 0; t < y.size(); ++t) {
    double d = y[t] - static_cast<double>(v[t]);
    s += d * d;
  }
  return std::sqrt(s);
}

std::vector<FpVec> torus_ball_words(const TorusWord& w, double radius) {
  const unsigned p = w.p;
  const std::size_t n = w.n();
  const double r2 = radius * radius + 1e-9;
  std::vector<FpVec> out;
  FpVec cur(n, 0);
  auto rec = [&](auto&& self, std::size_t t, double used) -> void {
    if (t == n) {
      out.push_back(cur);
      return;
    }
    for (unsigned c = 0; c < p; ++c) {
      double d = torus_abs(w.coords[t] - c, p);
      if (used + d * d > r2) continue;
      cur[t] = c;
      self(self, t + 1, used + d * d);
    }
  };
  rec(rec, 0, 0.0);
  return out;
}

bool audit_consistent(const DecodeAudit& a) {
  if (a.calls.empty() || a.calls.size() != a.list_total.size()) return false;
  const std::size_t ell = a.calls.size() - 1;
  if (a.calls[ell] != 1) return false;
  for (std::size_t i = 0; i < ell; ++i)
    if (a.calls[i] != a.list_total[i + 1]) return false;
  return true;
}

LatticeDecoder::LatticeDecoder(const ConstructionDLattice& lat, double e0, ComponentDecoder decoder)
    : lat_(&lat), e0_(e0), decoder_(std::move(decoder)) {
  if (!(e0 > 0 && e0 < lat.p() / 2.0)) throw std::invalid_argument("LatticeDecoder: need 0 < e0 < p/2");
}

LatticeDecoder LatticeDecoder::for_bch(const ConstructionDLattice& lat, double epsilon, KvOptions opt) {
  if (!(epsilon > 0 && epsilon < 1)) throw std::invalid_argument("bch_lattice_decode: epsilon must lie in (0, 1)");
  if (lat.tower.bch.size() != lat.ell()) throw std::invalid_argument("bch_lattice_decode: lattice is not from a BCH tower");
  const ConstructionDLattice* lp = &lat;
  return LatticeDecoder(lat, std::sqrt((1 - epsilon) / 2), [lp, epsilon, opt](std::size_t level, const TorusWord& w) {
    return euclid_list_decode(lp->tower.bch[level - 1], w, epsilon, opt).codewords;
  });
}

double LatticeDecoder::radius(std::size_t level) const { return std::pow(static_cast<double>(lat_->p()), level) * e0_; }

std::vector<IntVec> LatticeDecoder::decode(std::span<const double> y, std::size_t level, DecodeAudit* audit) const {
  if (level > lat_->ell()) throw std::invalid_argument("lattice_list_decode: level out of range");
  if (y.size() != lat_->n()) throw std::invalid_argument("lattice_list_decode: received length differs from n");
  if (audit) {
    audit->calls.assign(level + 1, 0);
    audit->list_total.assign(level + 1, 0);
  }
  auto out = recurse(y, level, audit);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<IntVec> LatticeDecoder::recurse(std::span<const double> y, std::size_t level, DecodeAudit* audit) const {
  const unsigned p = lat_->p();
  const double e = radius(level);
  TorusWord w = TorusWord::make(p, y);
  std::vector<FpVec> list;
  try {
    list = level == 0 ? torus_ball_words(w, e) : decoder_(level, w);
  } catch (const std::exception& ex) {
    throw std::runtime_error("component decoder at level " + std::to_string(level) + ": " + ex.what());
  }
  if (audit) {
    ++audit->calls[level];
    audit->list_total[level] += list.size();
  }
  std::vector<IntVec> out;
  for (const FpVec& c : list) {
    IntVec ct = representative(lat_->tower, c, level);
    if (level == 0) {
      out.push_back(round_decode_z(y, ct, p));
    } else {
      std::vector<double> ny(y.size());
      for (std::size_t t = 0; t < y.size(); ++t) ny[t] = (y[t] - static_cast<double>(ct[t])) / p;
      for (IntVec& v : recurse(ny, level - 1, audit)) {
        for (std::size_t t = 0; t < v.size(); ++t) v[t] = ct[t] + static_cast<std::int64_t>(p) * v[t];
        out.push_back(std::move(v));
      }
    }
  }
  for (const IntVec& v : out)
    if (euclid_distance(y, v) > e + 1e-9 * (1 + e))
      throw std::logic_error("lattice_list_decode: unsound output at level " + std::to_string(level));
  return out;
}

LatticeDecodeResult bch_lattice_decode(const ConstructionDLattice& lat, std::span<const double> y, double epsilon,
                                       KvOptions opt) {
  LatticeDecoder dec = LatticeDecoder::for_bch(lat, epsilon, opt);
  LatticeDecodeResult res;
  res.radius = dec.radius(lat.ell());
  res.vectors = dec.decode(y, lat.ell(), &res.audit);
  for (const auto& v : res.vectors) res.distances.push_back(euclid_distance(y, v));
  return res;
}

}  // namespace dlat
