#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "congrlab/algebra.hpp"
#include "congrlab/con_lattice.hpp"
#include "congrlab/congruence.hpp"
#include "congrlab/constructions.hpp"
#include "congrlab/quotient.hpp"

namespace congrlab {

/// Complemented elements of Con(A), as indices into the ConLattice.
struct BooleanCenter {
  std::vector<std::size_t> members;
  /// complement[i] is set exactly for members.
  std::vector<std::optional<std::size_t>> complement;

  [[nodiscard]] bool contains(std::size_t i) const { return complement[i].has_value(); }
  [[nodiscard]] std::size_t neg(std::size_t i) const { return *complement[i]; }
  [[nodiscard]] std::size_t size() const { return members.size(); }
};

/// Throws NotDistributive: complements are only unique in a distributive Con.
BooleanCenter boolean_center(const ConLattice& cl);

/// Boolean congruences that permute with their complement. The relation
/// theta o neg(theta) is kept for every Boolean member.
struct FactorAlgebra {
  std::vector<std::size_t> members;
  std::vector<bool> flag;
  std::vector<std::optional<Relation>> composite;

  [[nodiscard]] bool contains(std::size_t i) const { return flag[i]; }
  [[nodiscard]] std::size_t size() const { return members.size(); }
};

FactorAlgebra factor_congruences(const ConLattice& cl, const BooleanCenter& center);
inline FactorAlgebra factor_congruences(const ConLattice& cl) {
  return factor_congruences(cl, boolean_center(cl));
}

/// phi o psi is full and phi meet psi is Delta.
bool is_factor_pair(const Congruence& phi, const Congruence& psi);

/// Throws NotASublattice unless omega holds Delta and nabla and is closed
/// under join and meet.
void require_bounded_sublattice(const ConLattice& cl, std::span<const std::size_t> omega);

/// Omega fulfils the CRT iff it is distributive and its members permute
/// pairwise.
bool crt_characterization(const ConLattice& cl, std::span<const std::size_t> omega);

struct CrtWitness {
  std::vector<std::size_t> thetas;
  std::vector<Element> elements;
};

struct CrtResult {
  bool holds = true;
  std::optional<CrtWitness> witness;
};

/// For every k <= k_max, theta_1..theta_k in omega and a_1..a_k with
/// (a_i,a_j) in theta_i v theta_j, looks for a with (a,a_i) in theta_i for
/// all i. The first failure in lexicographic order is returned.
CrtResult crt_direct_check(const ConLattice& cl, std::span<const std::size_t> omega,
                           std::size_t k_max);

/// theta_1 x .. x theta_k on the product carrier. Throws EncodingMismatch
/// when the parts do not fit the encoding of `product`.
Congruence product_congruence(const FiniteAlgebra& product, const ProductEncoding& encoding,
                              std::span<const Congruence> parts);

struct ProductConReport {
  std::size_t con_size = 0;
  std::size_t boolean_size = 0;
  std::size_t fc_size = 0;
  bool bijective = false;
  bool preserves_operations = false;
  bool boolean_bijective = false;
  bool fc_bijective = false;

  [[nodiscard]] bool holds() const {
    return bijective && preserves_operations && boolean_bijective && fc_bijective;
  }
};

/// Checks that (theta_i) -> prod theta_i is a bounded-lattice isomorphism
/// from prod Con(A_i) onto Con(prod A_i) that restricts to bijections on the
/// Boolean centres and on FC.
ProductConReport product_con_iso_check(std::span<const FiniteAlgebra> factors);

/// phi (+) psi: the blocks of phi and psi, with the two blocks holding the
/// shared element glued together.
Congruence osum_congruence(const FiniteAlgebra& sum, const OrdinalSumLayout& layout,
                           const Congruence& phi, const Congruence& psi);
Congruence osum_congruence(const FiniteAlgebra& lower, const FiniteAlgebra& upper,
                           const Congruence& phi, const Congruence& psi);

struct OsumConReport {
  std::size_t con_size = 0;
  bool bijective = false;
  bool boolean_transports = false;
  /// Informational only: FC need not transport across ordinal sums.
  bool fc_transports = false;
  std::vector<std::string> fc_of_sum;
  std::vector<std::string> fc_transported;

  [[nodiscard]] bool holds() const { return bijective && boolean_transports; }
};

OsumConReport osum_con_iso_check(const FiniteAlgebra& lower, const FiniteAlgebra& upper);

struct BdlFcIsomorphism {
  /// Complemented element and the index of Cg(a,0) in Con(L).
  std::vector<std::pair<Element, std::size_t>> map;
  bool verified = false;
};

/// a -> Cg(a,0) on the complemented elements of a bounded distributive
/// lattice. Throws NotDistributive.
BdlFcIsomorphism bdl_fc_isomorphism(const FiniteAlgebra& lattice);

struct Factorization {
  std::vector<QuotientResult> factors;
  bool bijective = false;
  bool homomorphism = false;

  [[nodiscard]] bool verified() const { return bijective && homomorphism; }
};

/// A -> prod A/alpha_i. Throws PreconditionFailed naming the first broken
/// condition: membership in FC, trivial intersection, pairwise joins nabla.
Factorization factorize(const FiniteAlgebra& algebra, std::span<const Congruence> alphas);

}  // namespace congrlab
