#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "congrlab/algebra.hpp"
#include "congrlab/boolean_factor.hpp"
#include "congrlab/con_lattice.hpp"
#include "congrlab/congruence.hpp"
#include "congrlab/quotient.hpp"

namespace congrlab {

/// Con(A) together with its Boolean centre and factor congruences.
struct Analysis {
  ConLattice con;
  BooleanCenter center;
  FactorAlgebra fc;

  explicit Analysis(const FiniteAlgebra& algebra)
      : con(all_congruences(algebra)), center(boolean_center(con)), fc(factor_congruences(con, center)) {}
  explicit Analysis(ConLattice cl)
      : con(std::move(cl)), center(boolean_center(con)), fc(factor_congruences(con, center)) {}
};

/// A member of FC(A/theta) (or B(Con(A/theta))) and a congruence of A whose
/// image under u is that member. Both are rendered as partition strings.
struct LiftWitness {
  std::string target;
  std::string source;
};

struct LiftResult {
  bool holds = true;
  std::vector<LiftWitness> witnesses;
  /// The first member of the quotient's FC (or B) with no preimage.
  std::optional<std::string> failing_target;
};

/// Surjectivity of u on factor congruences for A -> A/theta.
LiftResult has_fclp(const FiniteAlgebra& algebra, const Analysis& analysis, const Congruence& theta);
LiftResult has_fclp(const FiniteAlgebra& algebra, const Congruence& theta);
/// The same with Boolean centres in place of FC.
LiftResult has_cblp(const FiniteAlgebra& algebra, const Analysis& analysis, const Congruence& theta);
LiftResult has_cblp(const FiniteAlgebra& algebra, const Congruence& theta);

struct AlgebraLiftResult {
  bool holds = true;
  std::optional<std::string> failing_congruence;
  std::optional<std::string> failing_target;
};

/// Stops at the first congruence (canonical order) without the property.
AlgebraLiftResult algebra_fclp(const FiniteAlgebra& algebra, const Analysis& analysis);
AlgebraLiftResult algebra_fclp(const FiniteAlgebra& algebra);
AlgebraLiftResult algebra_cblp(const FiniteAlgebra& algebra, const Analysis& analysis);
AlgebraLiftResult algebra_cblp(const FiniteAlgebra& algebra);

struct NormalityWitness {
  std::string phi;
  std::string psi;
  std::string alpha;
};

struct NormalityResult {
  bool holds = true;
  std::vector<NormalityWitness> witnesses;
  std::optional<std::pair<std::string, std::string>> failing_pair;
};

/// For every phi, psi with phi o psi = nabla, some alpha in FC(A) with
/// phi v alpha = psi v neg(alpha) = nabla. The first alpha in canonical order
/// is reported.
NormalityResult is_fc_normal(const FiniteAlgebra& algebra, const Analysis& analysis);
NormalityResult is_fc_normal(const FiniteAlgebra& algebra);
/// The same with phi v psi = nabla as trigger and alpha in B(Con(A)).
NormalityResult is_b_normal(const FiniteAlgebra& algebra, const Analysis& analysis);
NormalityResult is_b_normal(const FiniteAlgebra& algebra);

/// Validator for the lifting theorems on maximal, prime and local cases.
/// Any violation means the implementation is wrong, not the algebra.
struct SpecialCongruenceReport {
  std::vector<std::string> maximal;
  std::vector<std::string> prime;
  bool local = false;
  std::vector<std::string> violations;

  [[nodiscard]] bool holds() const { return violations.empty(); }
  [[nodiscard]] std::string text() const;
};

SpecialCongruenceReport check_special_congruences(const FiniteAlgebra& algebra);

}  // namespace congrlab
