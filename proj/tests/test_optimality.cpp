#include <doctest.h>

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "dlat/optimality.hpp"

using namespace dlat;

namespace {

const std::vector<double> kDeltas{0.01, 0.05, 0.1, 0.2, 0.25};
const std::vector<unsigned> kPrimes{2, 3, 5, 7};

double inf_dist(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

bool feasible(const std::vector<double>& t, const std::vector<double>& dv, double delta, double tol) {
  double s = 0, ip = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] < -tol) return false;
    s += t[i];
    ip += t[i] * dv[i];
  }
  return std::abs(s - 1) <= tol && ip <= delta + tol;
}

}  // namespace

TEST_CASE("beta from delta") {
  CHECK(beta_from_delta(0.25) == 0.5);
  CHECK(beta_from_delta(0.09) == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(beta_from_delta(1e-12) == doctest::Approx(1e-12).epsilon(1e-6));
  for (double d : kDeltas) {
    double b = beta_from_delta(d);
    CHECK(std::abs(b * (1 - b) - d) < 1e-14);
    CHECK((b > 0 && b <= 0.5));
  }
  CHECK_THROWS(beta_from_delta(0));
  CHECK_THROWS(beta_from_delta(0.26));
}

TEST_CASE("delta vector entries") {
  for (unsigned p : kPrimes)
    for (double d : kDeltas) {
      double b = beta_from_delta(d);
      auto dv = delta_vector(p, b);
      CHECK(dv[0] == doctest::Approx(b * b));
      CHECK(dv[1 % p] == doctest::Approx((1 - b) * (1 - b)));
      for (unsigned a = 2; a < p; ++a) CHECK(dv[a] >= 1);
      auto w = bracket_beta(p, b);
      CHECK(std::inner_product(w.begin(), w.end(), dv.begin(), 0.0) == doctest::Approx(d).epsilon(1e-14));
    }
  auto dv5 = delta_vector(5, 0.1);
  CHECK(dv5[4] == doctest::Approx(1.21));
}

TEST_CASE("numerical minimizers land on the bracket vector") {
  for (unsigned p : kPrimes)
    for (double d : kDeltas) {
      CAPTURE(p);
      CAPTURE(d);
      const double b = beta_from_delta(d);
      const auto target = bracket_beta(p, b);
      const auto dv = delta_vector(p, b);
      OracleResult pg = quadratic_min_oracle(d, p);
      OracleResult ss = support_search_oracle(d, p);
      CHECK(pg.converged);
      CHECK(inf_dist(pg.t, target) <= 1e-6);
      CHECK(inf_dist(ss.t, target) <= 1e-6);
      CHECK(feasible(pg.t, dv, d, 1e-10));
      CHECK(feasible(ss.t, dv, d, 1e-10));
      double self = std::inner_product(target.begin(), target.end(), target.begin(), 0.0);
      CHECK(std::abs(self - (1 - 2 * d)) < 1e-12);
      CHECK(pg.objective >= self - 1e-10);
    }
  auto t = quadratic_min_oracle(0.25, 2).t;
  CHECK(inf_dist(t, {0.5, 0.5}) < 1e-9);
  auto t3 = quadratic_min_oracle(0.09, 3).t;
  CHECK(inf_dist(t3, {0.9, 0.1, 0}) < 1e-6);
}

TEST_CASE("projected gradient reports non-convergence") {
  CHECK_THROWS_AS(quadratic_min_oracle(0.1, 7, 0), std::runtime_error);
}

TEST_CASE("KKT certificate") {
  auto k = kkt_verify(0.25, 2);
  CHECK(k.mu == 2);
  CHECK(k.lambda == doctest::Approx(-1.5));
  CHECK(k.max_violation < 1e-12);

  auto k5 = kkt_verify(0.09, 5);
  for (unsigned a = 2; a < 5; ++a) CHECK(k5.mu_alpha[a] >= 0);
  CHECK(k5.mu_alpha[4] == doctest::Approx(2 * (1.21 - 0.91)));

  for (unsigned p : kPrimes)
    for (double d : kDeltas) CHECK(kkt_verify(d, p).max_violation < 1e-12);
}

TEST_CASE("rate bound") {
  for (std::size_t n : {1ul, 15ul, 63ul, 255ul}) {
    CHECK(rate_bound_check(0.25, n) == doctest::Approx(std::sqrt(n / 2.0)).epsilon(1e-12));
    for (double d : kDeltas)
      for (unsigned p : kPrimes) CHECK(std::abs(rate_bound_check(d, n, p) - std::sqrt(n * (1 - 2 * d))) < 1e-10);
  }
  CHECK(rate_bound_check(1e-9, 100) == doctest::Approx(10).epsilon(1e-6));
  CHECK(rate_bound_check(0.1, 400) == doctest::Approx(2 * rate_bound_check(0.1, 100)).epsilon(1e-14));
}
