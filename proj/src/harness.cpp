#include "dlat/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "dlat/enumerate.hpp"
#include "dlat/optimality.hpp"
#include "dlat/rng.hpp"

namespace dlat {

FieldPtr binary_field(unsigned q) {
  if (q < 2 || (q & (q - 1)) != 0) throw std::invalid_argument("q must be a power of two");
  unsigned r = 0;
  while ((1u << r) < q) ++r;
  return field_make(2, r);
}

std::vector<double> sample_noise(std::size_t n, double radius, std::mt19937_64& rng) {
  if (n == 0) throw std::invalid_argument("sample_noise: n must be positive");
  if (!(radius >= 0)) throw std::invalid_argument("sample_noise: radius must be >= 0");
  std::vector<double> e(n);
  double s;
  do {
    s = 0;
    for (auto& x : e) {
      x = standard_normal(rng);
      s += x * x;
    }
  } while (s == 0);
  const double scale = radius / std::sqrt(s);
  for (auto& x : e) x *= scale;
  return e;
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  ConstructionDLattice lat = lattice_make(tower_make(binary_field(cfg.q), cfg.ell));
  return run_experiment(cfg, lat);
}

ExperimentReport run_experiment(const ExperimentConfig& cfg, const ConstructionDLattice& lat) {
  if (!(cfg.noise_fraction > 0 && cfg.noise_fraction <= 1))
    throw std::invalid_argument("experiment: noise fraction must lie in (0, 1]");
  if (!(cfg.epsilon > 0 && cfg.epsilon < 1)) throw std::invalid_argument("experiment: epsilon must lie in (0, 1)");
  ExperimentReport r;
  r.config = cfg;
  r.n = lat.n();
  r.det = lat.det_exact;
  HermiteReport h = hermite_report(lat);
  r.lambda1 = h.lambda1;
  r.hermite_normalized = h.normalized;
  r.basis_max_norm = basis_max_norm(lat);
  r.radius = h.lambda1 * std::sqrt((1 - cfg.epsilon) / 2);
  r.trials.resize(cfg.trials);
  const long nt = static_cast<long>(cfg.trials);
  std::vector<std::string> errors(cfg.trials);

#pragma omp parallel for schedule(dynamic)
  for (long t = 0; t < nt; ++t) {
    try {
      auto rng = stream_rng(cfg.seed, static_cast<std::uint64_t>(t));
      IntVec v = sample_lattice_vector(lat, cfg.coeff_bound, rng);
      std::vector<double> e = sample_noise(lat.n(), cfg.noise_fraction * r.radius, rng);
      std::vector<double> y(lat.n());
      for (std::size_t i = 0; i < y.size(); ++i) y[i] = static_cast<double>(v[i]) + e[i];
      auto t0 = std::chrono::steady_clock::now();
      LatticeDecodeResult d = bch_lattice_decode(lat, y, cfg.epsilon);
      auto t1 = std::chrono::steady_clock::now();
      TrialOutcome& o = r.trials[t];
      o.recovered = std::binary_search(d.vectors.begin(), d.vectors.end(), v);
      o.sound = std::all_of(d.distances.begin(), d.distances.end(), [&](double x) { return x <= d.radius + 1e-9; });
      o.list_size = d.vectors.size();
      o.distance = euclid_distance(y, v);
      o.wall_time = std::chrono::duration<double>(t1 - t0).count();
      o.audit = d.audit;
    } catch (const std::exception& ex) {
      errors[t] = ex.what();
    }
  }
  for (std::size_t t = 0; t < errors.size(); ++t)
    if (!errors[t].empty()) throw std::runtime_error("trial " + std::to_string(t) + ": " + errors[t]);

  std::size_t ok = 0;
  r.max_calls.assign(lat.ell() + 1, 0);
  for (const auto& o : r.trials) {
    ok += o.recovered;
    r.all_sound = r.all_sound && o.sound;
    r.audit_ok = r.audit_ok && audit_consistent(o.audit);
    for (std::size_t i = 0; i < o.audit.calls.size(); ++i) r.max_calls[i] = std::max(r.max_calls[i], o.audit.calls[i]);
  }
  r.success_rate = cfg.trials ? static_cast<double>(ok) / static_cast<double>(cfg.trials) : 0.0;
  return r;
}

json report_to_json(const ExperimentReport& r) {
  json j;
  const auto& c = r.config;
  j["config"] = {{"q", c.q},         {"ell", c.ell},   {"epsilon", c.epsilon},
                 {"trials", c.trials}, {"noise_fraction", c.noise_fraction}, {"seed", c.seed},
                 {"coeff_bound", c.coeff_bound}, {"rng", "mt19937_64 seeded by splitmix64(seed, trial)"}};
  j["lattice"] = {{"n", r.n},
                  {"det", to_decimal(r.det)},
                  {"lambda1", r.lambda1},
                  {"hermite_normalized", r.hermite_normalized},
                  {"basis_max_norm", r.basis_max_norm},
                  {"decoding_radius", r.radius}};
  json trials = json::array();
  for (const auto& o : r.trials) {
    json t{{"recovered", o.recovered}, {"sound", o.sound}, {"list_size", o.list_size}, {"distance", o.distance},
           {"calls", o.audit.calls}, {"list_totals", o.audit.list_total}};
    if (c.timing) t["wall_time"] = o.wall_time;
    trials.push_back(std::move(t));
  }
  j["trials"] = std::move(trials);
  j["success_rate"] = r.success_rate;
  j["all_sound"] = r.all_sound;
  j["call_audit"] = {{"consistent", r.audit_ok}, {"max_calls_per_level", r.max_calls}};
  return j;
}

json verify_optimality(unsigned p, const std::vector<double>& deltas, bool* ok) {
  json out = json::array();
  bool all = true;
  for (double delta : deltas) {
    const double beta = beta_from_delta(delta);
    const auto target = bracket_beta(p, beta);
    OracleResult pg = quadratic_min_oracle(delta, p);
    OracleResult ss = support_search_oracle(delta, p);
    KktCertificate k = kkt_verify(delta, p);
    double gap_pg = 0, gap_ss = 0;
    for (unsigned a = 0; a < p; ++a) {
      gap_pg = std::max(gap_pg, std::abs(pg.t[a] - target[a]));
      gap_ss = std::max(gap_ss, std::abs(ss.t[a] - target[a]));
    }
    double self = 0;
    for (double x : target) self += x * x;
    const double objective_gap = pg.objective - self;
    const bool pass = gap_pg <= 1e-6 && gap_ss <= 1e-6 && k.max_violation < 1e-12 &&
                      std::abs(self - (1 - 2 * delta)) < 1e-12 && std::abs(objective_gap) <= 1e-10;
    all = all && pass;
    out.push_back({{"delta", delta},
                   {"p", p},
                   {"beta", beta},
                   {"minimizer", pg.t},
                   {"support_search_minimizer", ss.t},
                   {"max_kkt_violation", k.max_violation},
                   {"objective_gap", objective_gap},
                   {"minimizer_gap_inf", std::max(gap_pg, gap_ss)},
                   {"bracket_self_inner", self},
                   {"pass", pass}});
  }
  if (ok) *ok = all;
  return out;
}

json verify_lattice(const ConstructionDLattice& lat, std::size_t samples, bool* ok) {
  json j;
  const mpz_class closed = determinant_closed_form(lat);
  const double norm_cap = (lat.p() - 1) * std::pow(static_cast<double>(lat.p()), lat.ell()) * std::sqrt(lat.n());
  const double max_norm = basis_max_norm(lat);
  bool pass = closed == lat.det_exact && max_norm <= norm_cap + 1e-9;
  j["n"] = lat.n();
  j["ell"] = lat.ell();
  j["det_exact"] = to_decimal(lat.det_exact);
  j["det_closed_form"] = to_decimal(closed);
  j["basis_max_norm"] = max_norm;
  j["basis_norm_cap"] = norm_cap;
  if (lat.tower.field) {
    HermiteReport h = hermite_report(lat);
    j["hermite"] = {{"lambda1", h.lambda1},
                    {"det", to_decimal(h.det)},
                    {"normalized", h.normalized},
                    {"bound", h.bound},
                    {"h", h.h},
                    {"det_within_bound", h.det_within_bound}};
    pass = pass && h.det_within_bound;
  }
  if (lat.p() == 2 && lat.tower.field) {
    MinDistanceReport m = min_distance(lat, samples);
    j["min_distance"] = {{"lambda1", m.lambda1},
                         {"witness", int_vec_strings(m.witness)},
                         {"method", m.method},
                         {"exhaustive", m.exhaustive},
                         {"samples", m.samples},
                         {"refuted", m.refuted}};
    pass = pass && !m.refuted;
  }
  j["pass"] = pass;
  if (ok) *ok = pass;
  return j;
}

std::vector<double> oracle_target(const ConstructionDLattice& lat, double radius, std::mt19937_64& rng) {
  const std::size_t n = lat.n();
  std::vector<double> y(n);
  if (uniform01(rng) < 0.25) {
    const double span = std::pow(static_cast<double>(lat.p()), lat.ell());
    for (auto& x : y) x = uniform_real(rng, 0, span);
    return y;
  }
  IntVec v = sample_lattice_vector(lat, 1, rng);
  std::vector<double> e = sample_noise(n, uniform_real(rng, 0, 1.2) * radius, rng);
  for (std::size_t i = 0; i < n; ++i) y[i] = static_cast<double>(v[i]) + e[i];
  return y;
}

json oracle_compare(const OracleCompareConfig& cfg, const ConstructionDLattice& lat, bool* ok) {
  LatticeDecoder dec = LatticeDecoder::for_bch(lat, cfg.epsilon);
  const double radius = dec.radius(lat.ell());
  std::size_t mismatches = 0, nonempty = 0, total = 0;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    auto rng = stream_rng(cfg.seed, t);
    std::vector<double> y = oracle_target(lat, radius, rng);
    auto got = dec.decode(y, lat.ell());
    auto want = enumeration_oracle(lat, y, radius);
    mismatches += got != want;
    nonempty += !want.empty();
    total += want.size();
  }
  if (ok) *ok = mismatches == 0;
  return json{{"q", cfg.q},       {"ell", cfg.ell},           {"epsilon", cfg.epsilon}, {"trials", cfg.trials},
              {"seed", cfg.seed}, {"radius", radius},         {"mismatches", mismatches},
              {"nonempty_targets", nonempty}, {"total_vectors", total}, {"pass", mismatches == 0}};
}

}  // namespace dlat
