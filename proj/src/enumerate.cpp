#include "dlat/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dlat {

namespace {

constexpr double kSlack = 1e-9;

struct Node {
  std::size_t col;
  double used;  // squared distance accumulated on columns < col
  IntVec acc;   // current lattice vector (coordinates >= col still partial)
};

IntMatrix triangular(const IntMatrix& basis) {
  const std::size_t n = basis.size();
  IntMatrix u(n);
  std::vector<bool> seen(n, false);
  for (const auto& r : basis) {
    if (r.size() != n) throw std::invalid_argument("enumerate: basis must be square");
    std::size_t l = 0;
    while (l < n && r[l] == 0) ++l;
    if (l == n || seen[l]) throw std::invalid_argument("enumerate: rows need distinct leading columns");
    seen[l] = true;
    u[l] = r;
  }
  return u;
}

// Children of a node: every multiple z of row `col` keeping the column inside the ball.
template <class F>
void expand(const IntMatrix& u, std::span<const double> y, double r2, const Node& nd, F&& emit) {
  const std::size_t t = nd.col;
  const double u_tt = static_cast<double>(u[t][t]);
  const double center = (y[t] - static_cast<double>(nd.acc[t])) / u_tt;
  const double budget = r2 + kSlack - nd.used;
  if (budget < 0) return;
  const double half = std::sqrt(budget) / std::abs(u_tt);
  const auto lo = static_cast<std::int64_t>(std::floor(center - half)) - 1;
  const auto hi = static_cast<std::int64_t>(std::ceil(center + half)) + 1;
  for (std::int64_t z = lo; z <= hi; ++z) {
    double diff = y[t] - static_cast<double>(nd.acc[t] + z * u[t][t]);
    double used = nd.used + diff * diff;
    if (used > r2 + kSlack) continue;
    Node ch{t + 1, used, nd.acc};
    if (z != 0)
      for (std::size_t c = t; c < ch.acc.size(); ++c) ch.acc[c] += z * u[t][c];
    emit(std::move(ch));
  }
}

void dfs(const IntMatrix& u, std::span<const double> y, double r2, Node nd, std::vector<IntVec>& out) {
  if (nd.col == u.size()) {
    out.push_back(std::move(nd.acc));
    return;
  }
  expand(u, y, r2, nd, [&](Node ch) { dfs(u, y, r2, std::move(ch), out); });
}

void check_dims(const IntMatrix& basis, std::span<const double> y) {
  if (basis.size() != y.size()) throw std::invalid_argument("enumerate: target dimension mismatch");
}

}  // namespace

std::vector<IntVec> enumerate_ball(const IntMatrix& basis, std::span<const double> y, double radius) {
  check_dims(basis, y);
  IntMatrix u = triangular(basis);
  std::vector<IntVec> out;
  dfs(u, y, radius * radius, Node{0, 0.0, IntVec(u.size(), 0)}, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVec> enumerate_ball_parallel(const IntMatrix& basis, std::span<const double> y, double radius) {
  check_dims(basis, y);
  IntMatrix u = triangular(basis);
  const double r2 = radius * radius;
  std::vector<Node> frontier{Node{0, 0.0, IntVec(u.size(), 0)}};
  std::vector<IntVec> done;
  // breadth-first until the frontier is wide enough to share out
  while (!frontier.empty() && frontier.size() < 256 && frontier.front().col < u.size()) {
    std::vector<Node> next;
    for (const auto& nd : frontier) expand(u, y, r2, nd, [&](Node ch) { next.push_back(std::move(ch)); });
    frontier.swap(next);
  }
  std::vector<std::vector<IntVec>> parts(frontier.size());
  const long nf = static_cast<long>(frontier.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < nf; ++i) dfs(u, y, r2, frontier[i], parts[i]);
  for (auto& p : parts)
    for (auto& v : p) done.push_back(std::move(v));
  std::sort(done.begin(), done.end());
  return done;
}

std::vector<IntVec> enumeration_oracle(const ConstructionDLattice& lat, std::span<const double> y, double radius,
                                       bool parallel) {
  if (lat.n() > 16) throw std::invalid_argument("enumeration_oracle: dimension above 16");
  return parallel ? enumerate_ball_parallel(lat.basis_int, y, radius) : enumerate_ball(lat.basis_int, y, radius);
}

}  // namespace dlat
