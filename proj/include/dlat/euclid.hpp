#pragma once

#include <span>
#include <vector>

#include "dlat/codes.hpp"
#include "dlat/softdecode.hpp"

namespace dlat {

/// Point of (R/pZ)^n, coordinates kept in [0, p).
struct TorusWord {
  unsigned p = 0;
  std::vector<double> coords;

  static TorusWord make(unsigned p, std::span<const double> y);
  std::size_t n() const { return coords.size(); }
};

double canonical_mod(double y, unsigned p);
/// Distance from a to the nearest point of a + pZ to 0, i.e. |a| on R/pZ.
double torus_abs(double a, unsigned p);
double torus_norm_sq(const TorusWord& y);
double torus_norm(const TorusWord& y);
double torus_dist_sq(const TorusWord& y, std::span<const unsigned> c);

/// [y]: block i puts 1 - t on floor(y_i) and t on floor(y_i) + 1 (mod p).
ReliabilityVector reliability_map(const TorusWord& y);

/// S = (1/R* + 1/sqrt(2R*)) / (1 - sqrt(R* / (eps + (1-eps)R*))).
double list_size_bound(double r_star, double epsilon);

struct EuclidResult {
  std::vector<FpVec> codewords;  // lexicographic
  std::vector<double> dist_sq;
  std::size_t kv_list_size = 0;
  double s_bound = 0;
  double sq_radius = 0;
};

/// Every c in the code with torus ||y - c||^2 <= (1 - eps) d / 2 (inclusive, 1e-9 slack).
EuclidResult euclid_list_decode(const BchCode& code, const TorusWord& y, double epsilon, const KvOptions& opt = {});

}  // namespace dlat
