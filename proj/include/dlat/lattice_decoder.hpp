#pragma once

#include <functional>
#include <span>
#include <vector>

#include "dlat/euclid.hpp"
#include "dlat/lattice.hpp"

namespace dlat {

/// c~ + p * round((y - c~) / p), halves rounded up.
IntVec round_decode_z(std::span<const double> y, std::span<const std::int64_t> ctilde, unsigned p);
inline std::int64_t round_half_up(double x) { return static_cast<std::int64_t>(std::floor(x + 0.5)); }

/// All c in F_p^n with torus ||w - c|| <= radius (depth-first over coordinates).
std::vector<FpVec> torus_ball_words(const TorusWord& w, double radius);

/// D_i for i >= 1: codewords of C_i within p^i e0 of w.
using ComponentDecoder = std::function<std::vector<FpVec>(std::size_t level, const TorusWord& w)>;

/// Invocation counts of D_0..D_ell and the total list length each returned.
struct DecodeAudit {
  std::vector<std::size_t> calls;
  std::vector<std::size_t> list_total;
};

/// calls[ell] == 1 and calls[i] == list_total[i + 1] for i < ell.
bool audit_consistent(const DecodeAudit& audit);

class LatticeDecoder {
 public:
  LatticeDecoder(const ConstructionDLattice& lat, double e0, ComponentDecoder decoder);
  /// e0 = sqrt((1-eps)/2), D_i = euclid_list_decode on the BCH code C_i.
  static LatticeDecoder for_bch(const ConstructionDLattice& lat, double epsilon, KvOptions opt = {});

  double e0() const { return e0_; }
  double radius(std::size_t level) const;
  const ConstructionDLattice& lattice() const { return *lat_; }

  /// Exactly the v in Lambda_level with ||y - v|| <= p^level e0, sorted.
  std::vector<IntVec> decode(std::span<const double> y, std::size_t level, DecodeAudit* audit = nullptr) const;

 private:
  std::vector<IntVec> recurse(std::span<const double> y, std::size_t level, DecodeAudit* audit) const;

  const ConstructionDLattice* lat_;
  double e0_;
  ComponentDecoder decoder_;
};

struct LatticeDecodeResult {
  std::vector<IntVec> vectors;
  std::vector<double> distances;
  double radius = 0;
  DecodeAudit audit;
};

/// Decodes Lambda_ell of a BCH tower to lambda1 * sqrt((1 - eps)/2).
LatticeDecodeResult bch_lattice_decode(const ConstructionDLattice& lat, std::span<const double> y, double epsilon,
                                       KvOptions opt = {});

double euclid_distance(std::span<const double> y, std::span<const std::int64_t> v);

}  // namespace dlat
