#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dlat/codes.hpp"
#include "dlat/poly.hpp"

namespace dlat {

/// n blocks of p reliabilities; entries[i * p + a] is the weight of symbol a
/// at position i. Blocks sum to 1 within 1e-12.
struct ReliabilityVector {
  unsigned p = 0;
  std::size_t n = 0;
  std::vector<double> entries;

  double at(std::size_t i, unsigned a) const { return entries[i * p + a]; }
  double norm() const;
  /// <Pi, [c]> for a word over F_p.
  double inner(std::span<const unsigned> c) const;
  bool valid(double tol = 1e-12) const;
};

ReliabilityVector indicator(unsigned p, std::span<const unsigned> c);

struct MultiplicityMatrix {
  unsigned p = 0;
  std::size_t n = 0;
  std::vector<unsigned> m;
  double lambda = 0;
  std::uint64_t cost = 0;

  unsigned at(std::size_t i, unsigned a) const { return m[i * p + a]; }
  std::uint64_t score(std::span<const unsigned> c) const;
};

MultiplicityMatrix multiplicity_assign(const ReliabilityVector& pi, double lambda);
std::uint64_t multiplicity_cost(std::span<const unsigned> m);

struct InterpPoint {
  Symbol x = 0;
  Symbol y = 0;
  unsigned m = 0;
};

/// Minimal (1, k-1)-weighted-degree Q vanishing to order m at every point,
/// normalized so its leading coefficient is 1. Koetter's iterative algorithm;
/// the per-polynomial updates run under OpenMP when the work is large enough.
BiPoly interpolate(const FieldPtr& field, std::span<const InterpPoint> points, std::size_t k);
/// Same polynomial found by Gaussian elimination over monomials taken in
/// increasing order. Serial reference for tests and benchmarks.
BiPoly interpolate_reference(const FieldPtr& field, std::span<const InterpPoint> points, std::size_t k);
/// Hasse derivative D_{a,b} Q evaluated at (x, y).
Symbol hasse(const BiPoly& q, Symbol x, Symbol y, std::size_t a, std::size_t b);
bool vanishes_to_order(const BiPoly& q, Symbol x, Symbol y, unsigned m);

/// All f with deg f < k and (Y - f(X)) | Q, sorted by coefficients.
std::vector<Poly> y_roots(const BiPoly& q, std::size_t k);

struct KvOptions {
  std::uint64_t cost_cap = 0;  // 0: ceil(4 S^2 n)
};

struct KvResult {
  std::vector<Word> codewords;  // lexicographic
  std::vector<std::uint64_t> scores;
  MultiplicityMatrix mult;
  long wdeg = -1;          // weighted degree of Q, -1 when no interpolation ran
  long degree_bound = 0;   // smallest delta with more monomials than cost
  double threshold = 0;    // tau * ||Pi||
};

/// sqrt(k-1) / (1 - (1/S)(1/R* + 1/sqrt(2R*))); throws if the denominator is <= 0.
double kv_tau(std::size_t k, double r_star, double s_bound);

/// Soft-decision list decoder over symbols of F_p. Picks the first lambda
/// (walking breakpoints of floor(lambda * Pi)) at which every word whose
/// inner product with Pi reaches tau * ||Pi|| has score above the weighted
/// degree bound, then interpolates and factors.
KvResult kv_decode(const RsCode& code, const ReliabilityVector& pi, double s_bound, const KvOptions& opt = {});

}  // namespace dlat
