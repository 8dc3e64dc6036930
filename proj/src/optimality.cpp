#include "dlat/optimality.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace dlat {

namespace {

void check_delta(double delta) {
  if (!(delta > 0 && delta <= 0.25)) throw std::invalid_argument("delta must lie in (0, 1/4]");
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

// Sort-based projection onto the probability simplex.
std::vector<double> project_simplex(const std::vector<double>& z) {
  std::vector<double> u(z);
  std::sort(u.begin(), u.end(), std::greater<>());
  double css = 0, theta = 0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    css += u[j];
    double t = (css - 1) / static_cast<double>(j + 1);
    if (u[j] - t > 0) theta = t;
  }
  std::vector<double> x(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) x[i] = std::max(z[i] - theta, 0.0);
  return x;
}

}  // namespace

double beta_from_delta(double delta) {
  check_delta(delta);
  // 2 delta / (1 + sqrt(1 - 4 delta)) avoids cancellation for small delta
  return 2 * delta / (1 + std::sqrt(1 - 4 * delta));
}

std::vector<double> delta_vector(unsigned p, double beta) {
  std::vector<double> d(p);
  for (unsigned a = 0; a < p; ++a) {
    double r = std::fmod(std::abs(a - beta), static_cast<double>(p));
    double t = std::min(r, p - r);
    d[a] = t * t;
  }
  return d;
}

std::vector<double> bracket_beta(unsigned p, double beta) {
  std::vector<double> t(p, 0.0);
  t[0] = 1 - beta;
  t[1 % p] += beta;
  return t;
}

std::vector<double> project_feasible(const std::vector<double>& z, const std::vector<double>& dv, double delta) {
  std::vector<double> x = project_simplex(z);
  if (dot(x, dv) <= delta) return x;
  // <Delta, P(z - theta Delta)> is non-increasing in theta
  double lo = 0, hi = 1;
  while (dot(project_simplex([&] {
           std::vector<double> s(z);
           for (std::size_t i = 0; i < s.size(); ++i) s[i] -= hi * dv[i];
           return s;
         }()),
             dv) > delta) {
    hi *= 2;
    if (hi > 1e12) throw std::runtime_error("project_feasible: empty feasible set");
  }
  for (int it = 0; it < 200; ++it) {
    double mid = (lo + hi) / 2;
    std::vector<double> s(z);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] -= mid * dv[i];
    if (dot(project_simplex(s), dv) > delta)
      lo = mid;
    else
      hi = mid;
    if (hi - lo < 1e-17) break;
  }
  std::vector<double> s(z);
  for (std::size_t i = 0; i < s.size(); ++i) s[i] -= hi * dv[i];
  return project_simplex(s);
}

OracleResult quadratic_min_oracle(double delta, unsigned p, std::size_t max_iter) {
  check_delta(delta);
  if (p < 2) throw std::invalid_argument("quadratic_min_oracle: p must be >= 2");
  const double beta = beta_from_delta(delta);
  const std::vector<double> dv = delta_vector(p, beta);
  const double step = 0.1 / p;
  OracleResult best;
  best.objective = std::numeric_limits<double>::infinity();
  for (unsigned seed = 0; seed < p; ++seed) {
    std::vector<double> e(p, 0.0);
    e[seed] = 1;
    std::vector<double> t = project_feasible(e, dv, delta);
    OracleResult run;
    for (std::size_t it = 1; it <= max_iter; ++it) {
      std::vector<double> z(t);
      for (auto& v : z) v -= step * 2 * v;
      std::vector<double> nt = project_feasible(z, dv, delta);
      double change = 0;
      for (unsigned a = 0; a < p; ++a) change = std::max(change, std::abs(nt[a] - t[a]));
      t = std::move(nt);
      run.iterations = it;
      if (change < 1e-15) {
        run.converged = true;
        break;
      }
    }
    run.t = t;
    run.objective = dot(t, t);
    if (run.converged && run.objective < best.objective) best = run;
  }
  if (!best.converged) throw std::runtime_error("quadratic_min_oracle: no restart converged within the iteration cap");
  return best;
}

OracleResult support_search_oracle(double delta, unsigned p) {
  check_delta(delta);
  const std::vector<double> dv = delta_vector(p, beta_from_delta(delta));
  OracleResult best;
  best.objective = std::numeric_limits<double>::infinity();
  auto consider = [&](std::vector<double> t) {
    double obj = dot(t, t);
    if (obj < best.objective) {
      best.t = std::move(t);
      best.objective = obj;
    }
  };
  for (unsigned a = 0; a < p; ++a) {
    if (dv[a] <= delta) {
      std::vector<double> t(p, 0.0);
      t[a] = 1;
      consider(t);
    }
    for (unsigned b = a + 1; b < p; ++b) {
      // T_a = s, T_b = 1 - s; feasible s form an interval, objective minimized at 1/2
      double lo = 0, hi = 1;
      double slope = dv[a] - dv[b];  // <T, Delta> = dv[b] + s * slope
      if (slope > 0)
        hi = std::min(hi, (delta - dv[b]) / slope);
      else if (slope < 0)
        lo = std::max(lo, (delta - dv[b]) / slope);
      else if (dv[b] > delta)
        continue;
      if (lo > hi) continue;
      double s = std::clamp(0.5, lo, hi);
      std::vector<double> t(p, 0.0);
      t[a] = s;
      t[b] += 1 - s;
      consider(t);
    }
  }
  best.converged = std::isfinite(best.objective);
  return best;
}

KktCertificate kkt_verify(double delta, unsigned p) {
  check_delta(delta);
  if (p < 2) throw std::invalid_argument("kkt_verify: p must be >= 2");
  const double beta = beta_from_delta(delta);
  const std::vector<double> dv = delta_vector(p, beta);
  KktCertificate k;
  k.t = bracket_beta(p, beta);
  k.mu = 2;
  k.lambda = -2 * (beta * beta - beta + 1);
  k.mu_alpha.assign(p, 0.0);
  for (unsigned a = 2; a < p; ++a) k.mu_alpha[a] = 2 * (dv[a] - (beta * beta - beta + 1));
  double v = 0;
  for (unsigned a = 0; a < p; ++a) {
    v = std::max(v, std::abs(2 * k.t[a] + k.mu * dv[a] - k.mu_alpha[a] + k.lambda));
    v = std::max(v, std::abs(k.mu_alpha[a] * k.t[a]));
    v = std::max(v, -k.mu_alpha[a]);
    v = std::max(v, -k.t[a]);
  }
  double slack = dot(k.t, dv) - delta;
  v = std::max(v, std::abs(k.mu * slack));
  v = std::max(v, slack);
  v = std::max(v, std::abs(std::accumulate(k.t.begin(), k.t.end(), 0.0) - 1));
  v = std::max(v, -k.mu);
  k.max_violation = v;
  return k;
}

double rate_bound_check(double delta, std::size_t n, unsigned p) {
  check_delta(delta);
  const double beta = beta_from_delta(delta);
  const std::vector<double> dv = delta_vector(p, beta);
  const std::vector<double> w = bracket_beta(p, beta);
  // the linear minimum over B(delta) sits at a vertex: a feasible unit vector
  // or the point where an edge of the simplex meets <T, Delta> = delta
  double best = std::numeric_limits<double>::infinity();
  for (unsigned a = 0; a < p; ++a) {
    if (dv[a] <= delta) best = std::min(best, w[a]);
    for (unsigned b = a + 1; b < p; ++b) {
      double slope = dv[a] - dv[b];
      if (slope == 0) continue;
      double s = (delta - dv[b]) / slope;
      if (s < 0 || s > 1) continue;
      best = std::min(best, s * w[a] + (1 - s) * w[b]);
    }
  }
  return std::sqrt(static_cast<double>(n)) * best / std::sqrt(dot(w, w));
}

}  // namespace dlat
