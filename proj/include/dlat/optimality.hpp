#pragma once

#include <cstddef>
#include <vector>

namespace dlat {

/// Root of beta(1 - beta) = delta in (0, 1/2], for delta in (0, 1/4].
double beta_from_delta(double delta);
/// Delta_alpha = |alpha - beta|^2 measured on R/pZ.
std::vector<double> delta_vector(unsigned p, double beta);
/// [beta] in [0,1]^p: 1 - beta at 0, beta at 1.
std::vector<double> bracket_beta(unsigned p, double beta);

struct OracleResult {
  std::vector<double> t;
  double objective = 0;
  std::size_t iterations = 0;
  bool converged = false;
};

/// Euclidean projection onto {T in simplex : <T, Delta> <= delta}.
std::vector<double> project_feasible(const std::vector<double>& z, const std::vector<double>& dv, double delta);

/// Projected gradient on <T,T> over B(delta), step 0.1/p, restarted from the
/// projections of the p unit vectors; the best run is returned.
OracleResult quadratic_min_oracle(double delta, unsigned p, std::size_t max_iter = 100000);
/// Exhaustive search over supports of size one and two with closed-form
/// minimization on each.
OracleResult support_search_oracle(double delta, unsigned p);

struct KktCertificate {
  double mu = 0;
  double lambda = 0;
  std::vector<double> mu_alpha;
  std::vector<double> t;
  double max_violation = 0;
};

/// Certificate for T = [beta]; max_violation covers stationarity,
/// complementary slackness, primal feasibility and multiplier signs.
KktCertificate kkt_verify(double delta, unsigned p);

/// sqrt(n) * min_{T in B(delta)} <T, [beta]> / ||[beta]||, the left side of the
/// rate condition for the all-beta word with W = [y]. Equals sqrt(n(1 - 2 delta)).
double rate_bound_check(double delta, std::size_t n, unsigned p = 2);

}  // namespace dlat
