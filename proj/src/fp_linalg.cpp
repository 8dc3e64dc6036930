#include "dlat/fp_linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dlat {

unsigned fp_inv(unsigned a, unsigned p) {
  if (a % p == 0) throw std::invalid_argument("fp_inv: zero has no inverse");
  std::uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<unsigned>(r);
}

long leading_index(std::span<const unsigned> v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return static_cast<long>(i);
  return -1;
}

FpSpan::FpSpan(unsigned p, std::size_t n) : p_(p), n_(n), pivot_of_col_(n, -1) {}

FpVec FpSpan::reduce(FpVec v) const {
  if (v.size() != n_) throw std::invalid_argument("FpSpan: length mismatch");
  for (std::size_t c = 0; c < n_; ++c) {
    if (v[c] == 0 || pivot_of_col_[c] < 0) continue;
    const FpVec& r = rows_[pivot_of_col_[c]];
    unsigned f = v[c];
    for (std::size_t t = c; t < n_; ++t) v[t] = (v[t] + (p_ - f) * r[t]) % p_;
  }
  return v;
}

bool FpSpan::contains(std::span<const unsigned> v) const {
  FpVec r = reduce(FpVec(v.begin(), v.end()));
  return std::all_of(r.begin(), r.end(), [](unsigned x) { return x == 0; });
}

bool FpSpan::insert(std::span<const unsigned> v) {
  FpVec r = reduce(FpVec(v.begin(), v.end()));
  long lead = leading_index(r);
  if (lead < 0) return false;
  unsigned inv = fp_inv(r[lead], p_);
  for (auto& x : r) x = static_cast<unsigned>(std::uint64_t(x) * inv % p_);
  pivot_of_col_[lead] = static_cast<long>(rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

std::size_t fp_rank(const FpMatrix& m, unsigned p) {
  if (m.empty()) return 0;
  FpSpan s(p, m[0].size());
  for (const auto& r : m) s.insert(r);
  return s.dim();
}

std::optional<FpVec> solve_triangular_combination(const FpMatrix& rows, std::span<const unsigned> v, unsigned p) {
  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<long> lead(rows.size());
  for (std::size_t j = 0; j < rows.size(); ++j) lead[j] = leading_index(rows[j]);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lead[a] < lead[b]; });
  FpVec res(v.begin(), v.end());
  FpVec a(rows.size(), 0);
  for (std::size_t j : order) {
    if (lead[j] < 0) continue;
    unsigned c = res[lead[j]];
    if (c == 0) continue;
    unsigned coef = static_cast<unsigned>(std::uint64_t(c) * fp_inv(rows[j][lead[j]], p) % p);
    a[j] = coef;
    for (std::size_t t = lead[j]; t < res.size(); ++t) res[t] = (res[t] + (p - coef) * rows[j][t]) % p;
  }
  if (std::any_of(res.begin(), res.end(), [](unsigned x) { return x != 0; })) return std::nullopt;
  return a;
}

}  // namespace dlat
