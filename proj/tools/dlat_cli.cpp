#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dlat/harness.hpp"

using namespace dlat;

namespace {

// Verification failures exit 1; anything the user got wrong exits 2.
constexpr int kOk = 0, kFail = 1, kUsage = 2;

void emit(const json& j, const std::string& out) {
  if (out.empty())
    std::cout << j.dump(2) << "\n";
  else
    write_json_file(out, j);
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    double x = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("malformed number '" + tok + "'");
    v.push_back(x);
  }
  if (v.empty()) throw std::invalid_argument("empty list");
  return v;
}

std::vector<double> received_from_json(const json& j) {
  const json& y = j.is_object() ? j.at("y") : j;
  if (!y.is_array()) throw std::invalid_argument("received word must be an array of reals or {\"y\": [...]}");
  std::vector<double> v;
  for (const auto& x : y) v.push_back(x.is_string() ? std::stod(x.get<std::string>()) : x.get<double>());
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construction D lattices from BCH towers and their list decoder"};
  app.require_subcommand(1);

  unsigned q = 16;
  std::size_t ell = 1;
  double epsilon = 0.25;
  std::string out, lattice_path, received_path, deltas = "0.01,0.05,0.1,0.2,0.25";
  unsigned p = 2;
  std::size_t samples = 100000;
  ExperimentConfig ex;
  OracleCompareConfig oc;

  auto* build = app.add_subcommand("build-lattice", "construct the lattice for F_q with ell levels");
  build->add_option("--q", q, "field size, a power of two")->required();
  build->add_option("--ell", ell, "number of levels")->required();
  build->add_option("--out", out, "output JSON path (stdout if omitted)");

  auto* decode = app.add_subcommand("decode", "list decode a received vector");
  decode->add_option("--lattice", lattice_path)->required();
  decode->add_option("--received", received_path)->required();
  decode->add_option("--epsilon", epsilon)->required();
  decode->add_option("--out", out);

  auto* exp = app.add_subcommand("experiment", "planted-noise recovery trials");
  exp->add_option("--q", ex.q)->required();
  exp->add_option("--ell", ex.ell)->required();
  exp->add_option("--epsilon", ex.epsilon)->required();
  exp->add_option("--trials", ex.trials)->required();
  exp->add_option("--noise-frac", ex.noise_fraction)->required();
  exp->add_option("--seed", ex.seed)->required();
  exp->add_option("--coeff-bound", ex.coeff_bound, "coefficient range of planted lattice vectors");
  exp->add_flag("--timing", ex.timing, "record per-trial wall time (report no longer reproducible)");
  exp->add_option("--out", ex.output_path);

  auto* opt = app.add_subcommand("verify-optimality", "check the worst-case reliability minimizer");
  opt->add_option("--p", p)->required();
  opt->add_option("--deltas", deltas, "comma-separated values in (0, 1/4]");
  opt->add_option("--out", out);

  auto* vl = app.add_subcommand("verify-lattice", "determinant, norms, Hermite data, minimum distance");
  vl->add_option("--lattice", lattice_path)->required();
  vl->add_option("--samples", samples);
  vl->add_option("--out", out);

  auto* cmp = app.add_subcommand("oracle-compare", "recursive decoder against enumeration");
  cmp->add_option("--q", oc.q);
  cmp->add_option("--ell", oc.ell);
  cmp->add_option("--epsilon", oc.epsilon);
  cmp->add_option("--trials", oc.trials);
  cmp->add_option("--seed", oc.seed);
  cmp->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  bool ok = true;
  try {
    if (*build) {
      emit(lattice_to_json(lattice_make(tower_make(binary_field(q), ell))), out);
    } else if (*decode) {
      ConstructionDLattice lat = lattice_from_json(read_json_file(lattice_path));
      std::vector<double> y = received_from_json(read_json_file(received_path));
      LatticeDecodeResult r = bch_lattice_decode(lat, y, epsilon);
      json vs = json::array();
      for (const auto& v : r.vectors) vs.push_back(int_vec_strings(v));
      emit(json{{"epsilon", epsilon},
                {"radius", r.radius},
                {"vectors", vs},
                {"distances", r.distances},
                {"calls", r.audit.calls},
                {"list_totals", r.audit.list_total}},
           out);
    } else if (*exp) {
      ExperimentReport r = run_experiment(ex);
      emit(report_to_json(r), ex.output_path);
      ok = r.all_sound && r.audit_ok;
      std::cerr << "success rate " << r.success_rate << " over " << r.trials.size() << " trials\n";
    } else if (*opt) {
      emit(verify_optimality(p, parse_list(deltas), &ok), out);
    } else if (*vl) {
      emit(verify_lattice(lattice_from_json(read_json_file(lattice_path)), samples, &ok), out);
    } else if (*cmp) {
      ConstructionDLattice lat = lattice_make(tower_make(binary_field(oc.q), oc.ell));
      emit(oracle_compare(oc, lat, &ok), out);
    }
  } catch (const json::exception& e) {
    std::cerr << "error: malformed JSON input: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  if (!ok) std::cerr << "verification failed\n";
  return ok ? kOk : kFail;
}
