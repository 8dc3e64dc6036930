#pragma once

#include <gmpxx.h>

#include <json.hpp>
#include <string>

#include "dlat/codes.hpp"
#include "dlat/lattice.hpp"

namespace dlat {

using json = nlohmann::ordered_json;

std::string to_decimal(const mpz_class& v);
mpz_class from_decimal(const std::string& s);
json int_vec_strings(const IntVec& v);
IntVec int_vec_from_json(const json& j);

json field_to_json(const Field& f);
json code_to_json(const BchCode& code);
/// Rebuilds the code and checks the stored modulus and generator matrix match.
BchCode code_from_json(const json& j);

json lattice_to_json(const ConstructionDLattice& lat);
/// Rebuilds the lattice and checks basis and determinant match bit for bit.
ConstructionDLattice lattice_from_json(const json& j);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace dlat
