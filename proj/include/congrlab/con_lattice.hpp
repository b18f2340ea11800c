#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "congrlab/algebra.hpp"
#include "congrlab/congruence.hpp"

namespace congrlab {

inline constexpr std::size_t kDefaultConCap = 20000;
inline constexpr std::size_t kBruteForceCarrierCap = 9;

/// Con(A) with its elements in canonical order (Delta first, nabla last) and
/// the order, join and meet as index tables.
class ConLattice {
 public:
  ConLattice(const FiniteAlgebra& algebra, std::vector<Partition> sorted);

  [[nodiscard]] Fingerprint algebra() const { return algebra_; }
  [[nodiscard]] std::size_t carrier_size() const { return carrier_; }
  [[nodiscard]] std::size_t size() const { return elements_.size(); }
  [[nodiscard]] const std::vector<Congruence>& elements() const { return elements_; }
  [[nodiscard]] const Congruence& operator[](std::size_t i) const { return elements_[i]; }
  [[nodiscard]] std::size_t index_of_delta() const { return 0; }
  [[nodiscard]] std::size_t index_of_nabla() const { return elements_.size() - 1; }

  [[nodiscard]] bool leq(std::size_t i, std::size_t j) const { return leq_[i * size() + j]; }
  [[nodiscard]] std::size_t join(std::size_t i, std::size_t j) const;
  [[nodiscard]] std::size_t meet(std::size_t i, std::size_t j) const;

  [[nodiscard]] std::optional<std::size_t> index_of(const Partition& p) const;
  [[nodiscard]] std::optional<std::size_t> index_of(const Congruence& theta) const {
    return theta.parent() == algebra_ ? index_of(theta.partition()) : std::nullopt;
  }
  /// Throws ParentMismatch if theta is not in this lattice.
  [[nodiscard]] std::size_t require_index(const Congruence& theta) const;

 private:
  Fingerprint algebra_ = 0;
  std::size_t carrier_ = 0;
  std::vector<Congruence> elements_;
  std::map<Partition, std::size_t> index_;
  std::vector<bool> leq_;
  // Filled only while size() stays small enough for a quadratic table.
  std::vector<std::uint32_t> join_;
  std::vector<std::uint32_t> meet_;
};

/// Principal congruences closed under binary join. Throws SizeCap past the
/// carrier cap or when more than `con_cap` congruences appear.
ConLattice all_congruences(const FiniteAlgebra& algebra, std::size_t con_cap = kDefaultConCap);

/// Every set partition of the carrier that is compatible with the
/// operations, canonically sorted. Carrier must be at most 9.
std::vector<Congruence> brute_force_congruences(const FiniteAlgebra& algebra);

bool is_congruence_distributive(const ConLattice& cl);
bool is_congruence_permutable(const ConLattice& cl);
bool is_arithmetical(const ConLattice& cl);

/// Indices into cl. maximal_congruences and radical throw TrivialAlgebra on
/// a one-element algebra.
std::vector<std::size_t> maximal_congruences(const ConLattice& cl);
std::vector<std::size_t> prime_congruences(const ConLattice& cl);
std::size_t radical(const ConLattice& cl);
/// Exactly one maximal congruence. The trivial algebra has none.
bool is_local(const ConLattice& cl);
/// Finitely many and at least one maximal congruence; for finite algebras
/// this is every non-trivial one.
bool is_semilocal(const ConLattice& cl);

}  // namespace congrlab
