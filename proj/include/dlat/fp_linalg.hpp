#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace dlat {

/// Vectors and matrices over the prime field F_p, entries in [0, p).
using FpVec = std::vector<unsigned>;
using FpMatrix = std::vector<FpVec>;

unsigned fp_inv(unsigned a, unsigned p);

/// Index of the first nonzero entry, or -1 for the zero vector.
long leading_index(std::span<const unsigned> v);

/// Incrementally maintained row-echelon basis of a subspace of F_p^n.
/// Each stored row is monic at a distinct pivot column and zero before it.
class FpSpan {
 public:
  FpSpan(unsigned p, std::size_t n);

  unsigned p() const { return p_; }
  std::size_t n() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  const FpMatrix& rows() const { return rows_; }

  /// Residual of v after eliminating against the stored rows (zero iff v is in the span).
  FpVec reduce(FpVec v) const;
  bool contains(std::span<const unsigned> v) const;
  /// Adds v if independent; returns whether the dimension grew.
  bool insert(std::span<const unsigned> v);

 private:
  unsigned p_;
  std::size_t n_;
  FpMatrix rows_;
  std::vector<long> pivot_of_col_;  // row index holding each pivot column, or -1
};

std::size_t fp_rank(const FpMatrix& m, unsigned p);

/// Coefficients a with sum a_j rows[j] = v, assuming the rows have pairwise
/// distinct leading columns. nullopt when v is outside their span.
std::optional<FpVec> solve_triangular_combination(const FpMatrix& rows, std::span<const unsigned> v, unsigned p);

}  // namespace dlat
