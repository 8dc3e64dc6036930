#include "dlat/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace dlat {

std::string to_decimal(const mpz_class& v) { return v.get_str(10); }

mpz_class from_decimal(const std::string& s) {
  mpz_class v;
  if (s.empty() || v.set_str(s, 10) != 0) throw std::invalid_argument("json: malformed decimal integer '" + s + "'");
  return v;
}

json int_vec_strings(const IntVec& v) {
  json a = json::array();
  for (auto x : v) a.push_back(std::to_string(x));
  return a;
}

IntVec int_vec_from_json(const json& j) {
  IntVec v;
  for (const auto& x : j) {
    if (x.is_string()) {
      mpz_class z = from_decimal(x.get<std::string>());
      if (!z.fits_slong_p()) throw std::invalid_argument("json: integer entry exceeds 64 bits");
      v.push_back(z.get_si());
    } else {
      v.push_back(x.get<std::int64_t>());
    }
  }
  return v;
}

json field_to_json(const Field& f) {
  return json{{"p", f.p()}, {"r", f.r()}, {"modulus_poly", f.modulus()}};
}

json code_to_json(const BchCode& code) {
  const Field& f = *code.rs.field;
  return json{{"p", f.p()},
              {"r", f.r()},
              {"modulus_poly", f.modulus()},
              {"n", code.n},
              {"designed_d", code.designed_d},
              {"gen_matrix", code.gen_matrix}};
}

BchCode code_from_json(const json& j) {
  FieldPtr f = field_make(j.at("p").get<unsigned>(), j.at("r").get<unsigned>());
  if (f->modulus() != j.at("modulus_poly").get<std::vector<unsigned>>())
    throw std::invalid_argument("code_from_json: modulus polynomial differs from the canonical choice");
  BchCode c = bch_make(f, j.at("designed_d").get<std::size_t>());
  if (c.n != j.at("n").get<std::size_t>() || c.gen_matrix != j.at("gen_matrix").get<FpMatrix>())
    throw std::runtime_error("code_from_json: generator matrix does not match");
  return c;
}

json lattice_to_json(const ConstructionDLattice& lat) {
  json j;
  j["field"] = lat.tower.field ? field_to_json(*lat.tower.field) : json(nullptr);
  j["p"] = lat.p();
  j["n"] = lat.n();
  j["ell"] = lat.ell();
  j["tower_dims"] = lat.tower.dims;
  j["designed_distances"] = lat.tower.designed;
  j["tower_basis"] = lat.tower.basis;
  json basis = json::array();
  for (const auto& row : lat.basis_int) basis.push_back(int_vec_strings(row));
  j["basis"] = std::move(basis);
  j["det"] = to_decimal(lat.det_exact);
  return j;
}

ConstructionDLattice lattice_from_json(const json& j) {
  ConstructionDLattice lat;
  if (!j.at("field").is_null()) {
    const json& f = j.at("field");
    FieldPtr field = field_make(f.at("p").get<unsigned>(), f.at("r").get<unsigned>());
    if (field->modulus() != f.at("modulus_poly").get<std::vector<unsigned>>())
      throw std::invalid_argument("lattice_from_json: modulus polynomial differs from the canonical choice");
    lat = lattice_make(tower_make(field, j.at("ell").get<std::size_t>()));
  } else {
    lat = lattice_make(tower_from_basis(j.at("p").get<unsigned>(), j.at("n").get<std::size_t>(),
                                        j.at("tower_dims").get<std::vector<std::size_t>>(),
                                        j.at("tower_basis").get<FpMatrix>()));
  }
  IntMatrix basis;
  for (const auto& row : j.at("basis")) basis.push_back(int_vec_from_json(row));
  if (lat.tower.dims != j.at("tower_dims").get<std::vector<std::size_t>>() ||
      lat.tower.basis != j.at("tower_basis").get<FpMatrix>() || lat.basis_int != basis ||
      lat.det_exact != from_decimal(j.at("det").get<std::string>()))
    throw std::runtime_error("lattice_from_json: stored lattice does not match its reconstruction");
  return lat;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace dlat
