#pragma once

#include <string>

#include "json.hpp"

#include "tcoh/graded.hpp"
#include "tcoh/module.hpp"

namespace tcoh {

using Json = nlohmann::json;

// Reads a JSON file; syntax errors become InputError with the byte offset.
Json read_json_file(const std::string& path);

Json field_to_json(const Field& F);
Field field_from_json(const Json& j, const std::string& where);

Json scalar_to_json(const Rational& r);
Rational scalar_from_json(const Field& F, const Json& j, const std::string& where);
Json vector_to_json(const Vector& v);
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Field& F, const Json& j, size_t rows, size_t cols, const std::string& where);

// Structure constants, or a quiver with monomial relations (optional "field").
AlgebraPtr algebra_from_json(const Json& j);
Json algebra_to_json(const Algebra& a);

// A file path, or a built-in name: "k", "dual-numbers", "kronecker", "A<n>",
// "A<n>/rad2", "semisimple<r>", "beilinson".
AlgebraPtr load_algebra(const std::string& ref, const Field& builtin_field = Field::rationals());

// Actions may be given on any generating set of basis elements; the rest
// follow from the structure constants.
RightModule module_from_json(AlgebraPtr alg, const Json& j);
Bimodule bimodule_from_json(AlgebraPtr alg, const Json& j);
Json module_to_json(const RightModule& m, const std::string& algebra_ref);
Json bimodule_to_json(const Bimodule& m, const std::string& algebra_ref);

// Loads a module file; its "algebra" path is resolved against the file's directory.
RightModule load_module(const std::string& path, AlgebraPtr alg = nullptr);
Bimodule load_bimodule(const std::string& path, AlgebraPtr alg = nullptr);

// A bimodule file, or a built-in: "regular", "dual", "top", "free(r)", "bar", "theta(n)".
Bimodule load_sigma(const std::string& ref, AlgebraPtr alg, size_t gldim_bound);

struct GradedMapFile {
  std::shared_ptr<const TensorTower> tower;
  GradedMap map;
  size_t cap = 0;
};
GradedMapFile load_graded_map(const std::string& path, const Field& builtin_field, TowerOptions opts = {});
Json graded_map_to_json(const GradedMap& f, const Json& tower_ref);

}  // namespace tcoh
