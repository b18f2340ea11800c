#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "congrlab/algebra.hpp"
#include "congrlab/boolean_factor.hpp"
#include "congrlab/con_lattice.hpp"

namespace congrlab {

struct QuotientSummary {
  std::size_t size = 0;
  std::size_t con = 0;
  std::size_t boolean = 0;
  std::size_t fc = 0;
  /// Fixture (or "NAME^d" for a dual) whose lattice reduct is isomorphic.
  std::optional<std::string> isomorphic_to;
};

struct CongruenceRow {
  std::string partition;
  bool fclp = false;
  bool cblp = false;
  std::optional<std::string> fclp_failing_target;
  std::optional<std::string> cblp_failing_target;
  bool maximal = false;
  bool prime = false;
  QuotientSummary quotient;
};

struct LiftingReport {
  std::string algebra;
  std::optional<std::string> fixture;
  std::string kind;
  std::size_t size = 0;
  std::vector<std::string> boolean_members;
  std::vector<std::string> fc_members;

  bool fclp = true;
  bool cblp = true;
  std::optional<std::string> fclp_failing_congruence;
  std::optional<std::string> cblp_failing_congruence;
  bool fc_normal = false;
  bool b_normal = false;
  bool distributive = false;
  bool permutable = false;
  bool arithmetical = false;
  bool local = false;
  bool semilocal = false;
  /// Only for bounded lattices and residuated lattices with unique complements.
  std::optional<bool> blp;

  std::vector<CongruenceRow> rows;
  std::optional<std::pair<std::string, OsumConReport>> osum_transport;
  std::optional<ProductConReport> product;
  std::vector<std::string> notes;
};

/// `fixture` names the registry entry the algebra came from; when empty the
/// registry is searched for an identical algebra.
LiftingReport build_report(const FiniteAlgebra& algebra,
                           std::optional<std::string> fixture = std::nullopt);
/// The same with Con(A) already computed (or loaded from a cache).
LiftingReport build_report(const FiniteAlgebra& algebra, ConLattice con,
                           std::optional<std::string> fixture = std::nullopt);
/// Report on the direct product plus the Con transport check for the factors.
LiftingReport build_product_report(std::span<const FiniteAlgebra> factors);

/// Key-sorted, so dumps are byte-stable.
nlohmann::json to_json(const LiftingReport& report);
std::string to_table(const LiftingReport& report);

/// Hasse diagram of Con(A): Boolean members double-bordered, factor
/// congruences filled.
std::string con_dot(const FiniteAlgebra& algebra, const ConLattice& cl);

/// Name of a fixture (or a fixture's dual, "NAME^d") whose lattice reduct is
/// isomorphic to that of `algebra`.
std::optional<std::string> identify(const FiniteAlgebra& algebra);

}  // namespace congrlab
