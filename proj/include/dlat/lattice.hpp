#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "dlat/codes.hpp"

namespace dlat {

using IntVec = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVec>;

/// Construction D lattice of a code tower.
struct ConstructionDLattice {
  CodeTower tower;
  /// i_j = number of levels whose basis prefix excludes b_j.
  std::vector<std::size_t> level_shift;
  /// Rows p^{i_j} bbar_j when every basis pivot is 1; otherwise a Hermite
  /// normal form of the same generators together with p^ell Z^n.
  IntMatrix basis_int;
  bool unit_pivots = true;
  mpz_class det_exact;

  unsigned p() const { return tower.p; }
  std::size_t n() const { return tower.n; }
  std::size_t ell() const { return tower.ell; }
};

ConstructionDLattice lattice_make(const CodeTower& tower);

/// Coefficients of c in b_1..b_{k_i}; nullopt when c is not in C_i.
std::optional<FpVec> tower_coefficients(const CodeTower& tower, std::span<const unsigned> c, std::size_t level);
/// c~ = sum abar_j bbar_j; throws CodeError when c is not in C_level.
IntVec representative(const CodeTower& tower, std::span<const unsigned> c, std::size_t level);

/// v = c~_i + p(c~_{i-1} + p(... + p z)).
struct MemberWitness {
  std::vector<FpVec> codewords;  // c_i, c_{i-1}, ..., c_1
  IntVec z;
};

std::optional<MemberWitness> member(const ConstructionDLattice& lat, std::span<const std::int64_t> v, std::size_t level);
IntVec reconstruct(const ConstructionDLattice& lat, const MemberWitness& w, std::size_t level);

/// p^{sum_{i>=1} (n - k_i)}.
mpz_class determinant_closed_form(const ConstructionDLattice& lat);
/// |det| of an integer matrix by fraction-free elimination.
mpz_class determinant_exact(const IntMatrix& m);
mpz_class determinant(const ConstructionDLattice& lat);
/// Row-style Hermite normal form of the lattice spanned by the rows.
IntMatrix hermite_normal_form(const IntMatrix& gens, std::size_t n);

double norm(std::span<const std::int64_t> v);
double basis_max_norm(const ConstructionDLattice& lat);

struct MinDistanceReport {
  double lambda1 = 0;            // claimed: p^ell for binary towers
  IntVec witness;                // a vector of that norm
  bool exhaustive = false;       // lower bound certified by enumeration
  bool refuted = false;          // something shorter was found
  IntVec shorter;                // the refuting vector, if any
  std::size_t samples = 0;
  std::string method;
};

/// Upper bound by the witness p^ell e_1; lower bound by enumeration for
/// n <= 16, else by randomized short-vector sampling which can only refute.
MinDistanceReport min_distance(const ConstructionDLattice& lat, std::size_t samples = 100000, std::uint64_t seed = 1);

struct HermiteReport {
  std::size_t n = 0;
  double lambda1 = 0;
  mpz_class det;
  double normalized = 0;  // lambda1 / det^{1/n}
  double bound = 0;       // sqrt(n / log2 n)
  std::size_t h = 0;
  bool det_within_bound = false;  // det <= q^{2h^2/3}, compared exactly
};

HermiteReport hermite_report(const ConstructionDLattice& lat);

/// Random integer combination of basis rows with coefficients in [-bound, bound].
IntVec sample_lattice_vector(const ConstructionDLattice& lat, int coeff_bound, std::mt19937_64& rng);

}  // namespace dlat
