#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dlat/json_io.hpp"
#include "dlat/lattice_decoder.hpp"

namespace dlat {

/// F_q for q a power of two.
FieldPtr binary_field(unsigned q);

/// Uniform direction on the sphere scaled to norm exactly `radius`.
std::vector<double> sample_noise(std::size_t n, double radius, std::mt19937_64& rng);

struct ExperimentConfig {
  unsigned q = 16;
  std::size_t ell = 1;
  double epsilon = 0.25;
  std::size_t trials = 100;
  double noise_fraction = 0.95;
  std::uint64_t seed = 1;
  std::string output_path;
  int coeff_bound = 2;
  bool timing = false;  // wall times make the report non-reproducible
};

struct TrialOutcome {
  bool recovered = false;
  bool sound = false;
  std::size_t list_size = 0;
  double distance = 0;  // noise norm
  double wall_time = 0;
  DecodeAudit audit;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::size_t n = 0;
  mpz_class det;
  double lambda1 = 0;
  double hermite_normalized = 0;
  double basis_max_norm = 0;
  double radius = 0;
  std::vector<TrialOutcome> trials;
  double success_rate = 0;
  bool all_sound = true;
  bool audit_ok = true;
  std::vector<std::size_t> max_calls;  // per level, over trials
};

ExperimentReport run_experiment(const ExperimentConfig& cfg);
ExperimentReport run_experiment(const ExperimentConfig& cfg, const ConstructionDLattice& lat);
json report_to_json(const ExperimentReport& r);

/// Per (delta, p): beta, both oracle minimizers, KKT residual, objective gap.
json verify_optimality(unsigned p, const std::vector<double>& deltas, bool* ok);
/// Determinant, basis norms, Hermite data and the minimum-distance check.
json verify_lattice(const ConstructionDLattice& lat, std::size_t samples, bool* ok);

struct OracleCompareConfig {
  unsigned q = 16;
  std::size_t ell = 1;
  double epsilon = 0.25;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
};

/// Recursive decoder versus enumeration on random targets: planted lattice
/// points with noise up to 1.2x the radius, and uniform points.
json oracle_compare(const OracleCompareConfig& cfg, const ConstructionDLattice& lat, bool* ok);
/// Target for trial t of an oracle comparison.
std::vector<double> oracle_target(const ConstructionDLattice& lat, double radius, std::mt19937_64& rng);

}  // namespace dlat
