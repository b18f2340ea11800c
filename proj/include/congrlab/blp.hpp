#pragma once

#include <optional>
#include <string>
#include <vector>

#include "congrlab/algebra.hpp"
#include "congrlab/congruence.hpp"
#include "congrlab/lifting.hpp"

namespace congrlab {

/// Filters and ideals are enumerated over all subsets, so this module stops
/// at 12 elements.
inline constexpr std::size_t kFilterCarrierCap = 12;

/// Complemented elements of a bounded lattice.
struct ElementBooleanCenter {
  std::vector<Element> members;
  std::vector<std::optional<Element>> complement;

  [[nodiscard]] bool contains(Element e) const { return complement[e].has_value(); }
  [[nodiscard]] Element neg(Element e) const { return *complement[e]; }
  [[nodiscard]] std::size_t size() const { return members.size(); }
};

/// KindError without a lattice reduct; AmbiguousComplement when an element
/// has two complements (possible only off distributive lattices).
ElementBooleanCenter element_boolean_center(const FiniteAlgebra& algebra);

struct BlpResult {
  bool holds = true;
  /// Label of the first complemented element of A/theta with no
  /// complemented preimage.
  std::optional<std::string> failing_element;
};

BlpResult has_blp(const FiniteAlgebra& algebra, const Congruence& theta);
AlgebraLiftResult algebra_blp(const FiniteAlgebra& algebra);

/// Each set is sorted. For residuated algebras filters are also closed under
/// times, and the principal filter [x) is {y | x^n <= y for some n}.
struct SubsetFamily {
  std::vector<std::vector<Element>> sets;
  /// Generator of each set when it is principal (smallest generating index).
  std::vector<std::optional<Element>> generator;

  [[nodiscard]] std::size_t size() const { return sets.size(); }
};

SubsetFamily filters(const FiniteAlgebra& algebra);
SubsetFamily ideals(const FiniteAlgebra& algebra);
std::vector<Element> principal_filter(const FiniteAlgebra& algebra, Element x);

/// x ~ y iff x^a = y^a for some a in F (lattices), or x<->y in F
/// (residuated). Throws NotAFilter naming the offending elements and
/// NotDistributive for non-distributive lattices.
Congruence filter_congruence(const FiniteAlgebra& algebra, const std::vector<Element>& filter);
/// x ~ y iff xva = yva for some a in I.
Congruence ideal_congruence(const FiniteAlgebra& algebra, const std::vector<Element>& ideal);

/// BLP restricted to filter (resp. ideal) congruences.
AlgebraLiftResult has_filt_blp(const FiniteAlgebra& algebra);
AlgebraLiftResult has_id_blp(const FiniteAlgebra& algebra);

/// Bounded lattice on the principal filters, labelled "[x)". The order is
/// reverse inclusion (F <= G iff F contains G): join is intersection, the
/// bottom is [0) = R and the top is [1) = {1}.
FiniteAlgebra reticulation(const FiniteAlgebra& residuated);

struct BlpEquivalence {
  bool blp = false;
  bool cblp = false;
  bool fclp = false;
  /// Residuated: all three equal. Bounded distributive: blp == fclp.
  bool agree = false;
};

BlpEquivalence blp_equivalence_check(const FiniteAlgebra& algebra);

}  // namespace congrlab
