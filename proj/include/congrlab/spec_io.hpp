#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "congrlab/algebra.hpp"

namespace congrlab {

/// On-disk description of a finite algebra (UTF-8 JSON). Lattice kinds are
/// normally given by their cover relation; generic algebras by nested tables
/// whose depth is the arity, with constants listed separately.
struct AlgebraSpec {
  std::string name;
  AlgebraKind kind = AlgebraKind::bounded_lattice;
  std::vector<std::string> elements;
  std::optional<std::vector<std::pair<std::string, std::string>>> cover;
  std::map<std::string, nlohmann::json> operations;
  std::map<std::string, std::string> constants;
};

/// Throws ParseError on malformed documents.
AlgebraSpec parse_algebra_spec(const nlohmann::json& doc);
AlgebraSpec load_algebra_spec(const std::filesystem::path& path);
nlohmann::json to_json(const AlgebraSpec& spec);

/// Builds and validates an algebra. Errors: NotALattice (names the first
/// pair without a lub or glb), TableError, ResiduationViolation, KindError.
FiniteAlgebra build_from_spec(const AlgebraSpec& spec);

/// Inverse of build_from_spec: lattice kinds are emitted as cover relations.
AlgebraSpec to_spec(const FiniteAlgebra& algebra);

/// Lattice from a cover relation given on indices. Checks acyclicity, then
/// that every pair has a unique lub and glb.
FiniteAlgebra lattice_from_covers(std::string name, std::vector<std::string> labels,
                                  const std::vector<std::pair<Element, Element>>& covers,
                                  bool bounded = true);

/// Pairs (a,b) with a < b and nothing strictly between them.
std::vector<std::pair<Element, Element>> cover_pairs(const FiniteAlgebra& lattice);

}  // namespace congrlab
