#include "dlat/softdecode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace dlat {

double ReliabilityVector::norm() const {
  double s = 0;
  for (double v : entries) s += v * v;
  return std::sqrt(s);
}

double ReliabilityVector::inner(std::span<const unsigned> c) const {
  if (c.size() != n) throw std::invalid_argument("ReliabilityVector: length mismatch");
  double s = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (c[i] < p) s += at(i, c[i]);
  return s;
}

bool ReliabilityVector::valid(double tol) const {
  if (entries.size() != n * p) return false;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0;
    for (unsigned a = 0; a < p; ++a) {
      double v = at(i, a);
      if (!(v >= 0 && v <= 1)) return false;
      s += v;
    }
    if (std::abs(s - 1) > tol) return false;
  }
  return true;
}

ReliabilityVector indicator(unsigned p, std::span<const unsigned> c) {
  ReliabilityVector r{p, c.size(), std::vector<double>(c.size() * p, 0.0)};
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= p) throw std::invalid_argument("indicator: symbol out of range");
    r.entries[i * p + c[i]] = 1.0;
  }
  return r;
}

std::uint64_t MultiplicityMatrix::score(std::span<const unsigned> c) const {
  if (c.size() != n) throw std::invalid_argument("MultiplicityMatrix: length mismatch");
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (c[i] < p) s += at(i, c[i]);
  return s;
}

std::uint64_t multiplicity_cost(std::span<const unsigned> m) {
  std::uint64_t c = 0;
  for (unsigned v : m) c += std::uint64_t(v) * (v + 1) / 2;
  return c;
}

MultiplicityMatrix multiplicity_assign(const ReliabilityVector& pi, double lambda) {
  if (!(lambda > 0)) throw std::invalid_argument("multiplicity_assign: lambda must be positive");
  MultiplicityMatrix mm{pi.p, pi.n, std::vector<unsigned>(pi.entries.size()), lambda, 0};
  for (std::size_t t = 0; t < pi.entries.size(); ++t) mm.m[t] = static_cast<unsigned>(std::floor(lambda * pi.entries[t]));
  mm.cost = multiplicity_cost(mm.m);
  return mm;
}

double kv_tau(std::size_t k, double r_star, double s_bound) {
  if (!(r_star > 0)) throw std::invalid_argument("kv_decode: adjusted rate must be positive (k >= 2)");
  const double slack = 1.0 / r_star + 1.0 / std::sqrt(2.0 * r_star);
  if (!(s_bound > slack))
    throw std::invalid_argument("kv_decode: list size bound S must exceed 1/R* + 1/sqrt(2R*)");
  return std::sqrt(static_cast<double>(k - 1)) / (1.0 - slack / s_bound);
}

namespace {

constexpr double kTol = 1e-9;

struct Option {
  unsigned m;
  double v;
};

// Does every word with inner product >= T - tol have score > delta?
class GuaranteeCheck {
 public:
  GuaranteeCheck(const ReliabilityVector& pi, bool zero_option, double target)
      : pi_(pi), zero_option_(zero_option), target_(target) {
    argmax_.resize(pi.n);
    double best = 0;
    for (std::size_t i = 0; i < pi.n; ++i) {
      unsigned a = 0;
      for (unsigned b = 1; b < pi.p; ++b)
        if (pi.at(i, b) > pi.at(i, a)) a = b;
      argmax_[i] = a;
      best += pi.at(i, a);
    }
    max_inner_ = best;
  }

  double max_inner() const { return max_inner_; }
  const std::vector<unsigned>& argmax() const { return argmax_; }

  bool holds(const std::vector<unsigned>& m, std::uint64_t argmax_score, long delta) const {
    if (max_inner_ < target_ - kTol) return true;
    if (static_cast<long>(argmax_score) <= delta) return false;
    if (lagrangian_bound(m, delta) < target_ - kTol) return true;
    return exact_max(m, delta) < target_ - kTol;
  }

 private:
  template <class F>
  void for_options(std::size_t i, const std::vector<unsigned>& m, F&& fn) const {
    const unsigned p = pi_.p;
    bool has_zero = zero_option_;
    for (unsigned a = 0; a < p; ++a) {
      fn(Option{m[i * p + a], pi_.at(i, a)});
      if (pi_.at(i, a) == 0) has_zero = true;
    }
    if (has_zero) fn(Option{0, 0.0});
  }

  double bound_at(const std::vector<unsigned>& m, long delta, double mu) const {
    double s = mu * static_cast<double>(delta);
    for (std::size_t i = 0; i < pi_.n; ++i) {
      double best = -std::numeric_limits<double>::infinity();
      for_options(i, m, [&](Option o) { best = std::max(best, o.v - mu * o.m); });
      s += best;
    }
    return s;
  }

  // min over mu >= 0 of mu*delta + sum_i max_o (v_o - mu m_o); convex in mu
  double lagrangian_bound(const std::vector<unsigned>& m, long delta) const {
    double lo = 0, hi = 1;
    for (int it = 0; it < 80; ++it) {
      double a = lo + (hi - lo) / 3, b = hi - (hi - lo) / 3;
      if (bound_at(m, delta, a) <= bound_at(m, delta, b))
        hi = b;
      else
        lo = a;
    }
    return std::min({bound_at(m, delta, lo), bound_at(m, delta, 0.0), bound_at(m, delta, 1.0)});
  }

  double exact_max(const std::vector<unsigned>& m, long delta) const {
    const double ninf = -std::numeric_limits<double>::infinity();
    const std::size_t D = static_cast<std::size_t>(delta);
    std::vector<double> best(D + 1, ninf), next(D + 1);
    best[0] = 0;
    for (std::size_t i = 0; i < pi_.n; ++i) {
      std::fill(next.begin(), next.end(), ninf);
      for_options(i, m, [&](Option o) {
        for (std::size_t s = 0; s + o.m <= D; ++s)
          if (best[s] != ninf) next[s + o.m] = std::max(next[s + o.m], best[s] + o.v);
      });
      best.swap(next);
    }
    return *std::max_element(best.begin(), best.end());
  }

  const ReliabilityVector& pi_;
  bool zero_option_;
  double target_;
  std::vector<unsigned> argmax_;
  double max_inner_ = 0;
};

}  // namespace

KvResult kv_decode(const RsCode& code, const ReliabilityVector& pi, double s_bound, const KvOptions& opt) {
  const Field& f = *code.field;
  if (pi.p != f.p()) throw std::invalid_argument("kv_decode: reliability alphabet must be F_p");
  if (pi.n != code.n) throw std::invalid_argument("kv_decode: reliability length differs from n");
  if (!pi.valid(1e-12)) throw std::invalid_argument("kv_decode: reliability blocks must lie in [0,1] and sum to 1");
  if (code.k < 2) throw std::invalid_argument("kv_decode: need k >= 2");

  KvResult res;
  const double tau = kv_tau(code.k, code.r_star(), s_bound);
  res.threshold = tau * pi.norm();
  const long w = static_cast<long>(code.k) - 1;
  const unsigned p = pi.p;

  const std::uint64_t cap = opt.cost_cap ? opt.cost_cap
                                          : static_cast<std::uint64_t>(std::ceil(4 * s_bound * s_bound * pi.n));
  GuaranteeCheck check(pi, f.r() > 1, res.threshold);
  std::vector<unsigned> m(pi.entries.size(), 0);
  std::uint64_t cost = 0, argmax_score = 0;
  double lambda = 0;

  // breakpoints (m+1)/Pi in increasing order; each pop raises one floor by 1
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  for (std::size_t t = 0; t < pi.entries.size(); ++t)
    if (pi.entries[t] > 0) queue.push({1.0 / pi.entries[t], t});

  while (!check.holds(m, argmax_score, weighted_degree_bound(cost, w))) {
    if (queue.empty()) throw std::logic_error("kv_decode: no breakpoints left");
    lambda = queue.top().first;
    while (!queue.empty() && queue.top().first == lambda) {
      std::size_t t = queue.top().second;
      queue.pop();
      cost += ++m[t];
      if (check.argmax()[t / p] == t % p) ++argmax_score;
      queue.push({(m[t] + 1) / pi.entries[t], t});
    }
    if (cost > cap) throw std::runtime_error("kv_decode: multiplicity cost cap exceeded");
  }

  res.mult = MultiplicityMatrix{p, pi.n, m, lambda, cost};
  res.degree_bound = weighted_degree_bound(cost, w);
  if (cost == 0) return res;

  std::vector<InterpPoint> pts;
  for (std::size_t i = 0; i < pi.n; ++i)
    for (unsigned a = 0; a < p; ++a)
      if (m[i * p + a] > 0) pts.push_back({code.eval_points[i], f.embed(a), m[i * p + a]});
  BiPoly q = interpolate(code.field, pts, code.k);
  res.wdeg = *q.weighted_degree(w);

  std::vector<std::pair<Word, std::uint64_t>> found;
  for (const Poly& fx : y_roots(q, code.k)) {
    Word c = rs_encode(code, fx);
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < code.n; ++i)
      if (c[i] < p) s += m[i * p + c[i]];
    if (static_cast<long>(s) > res.wdeg) found.push_back({std::move(c), s});
  }
  std::sort(found.begin(), found.end());
  for (auto& [c, s] : found) {
    res.codewords.push_back(std::move(c));
    res.scores.push_back(s);
  }
  return res;
}

}  // namespace dlat
