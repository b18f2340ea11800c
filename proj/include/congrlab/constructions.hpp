#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "congrlab/algebra.hpp"

namespace congrlab {

inline constexpr std::size_t kDefaultCarrierCap = 4096;

/// Mixed-radix encoding of product elements: the tuple (e_1,..,e_k) over
/// factors of sizes (n_1,..,n_k) is index sum_i e_i * prod_{j>i} n_j, so the
/// first factor is most significant.
class ProductEncoding {
 public:
  explicit ProductEncoding(std::vector<std::size_t> radices);

  [[nodiscard]] std::size_t size() const { return total_; }
  [[nodiscard]] std::span<const std::size_t> radices() const { return radices_; }
  [[nodiscard]] Element encode(std::span<const Element> tuple) const;
  [[nodiscard]] std::vector<Element> decode(Element index) const;
  [[nodiscard]] Element component(Element index, std::size_t factor) const;

 private:
  std::vector<std::size_t> radices_;
  std::vector<std::size_t> strides_;
  std::size_t total_ = 1;
};

/// Swaps join/meet and bot/top. Residuated algebras give the dual of their
/// lattice reduct. Labels are kept.
FiniteAlgebra dual(const FiniteAlgebra& lattice);

/// Componentwise product. Labels are "(l1,..,lk)". Throws SignatureMismatch
/// if the factors disagree on operations and SizeCap past `carrier_cap`.
FiniteAlgebra direct_product(std::span<const FiniteAlgebra> factors,
                             std::size_t carrier_cap = kDefaultCarrierCap);

/// Where each summand's elements land in L (+) M. L keeps its indices; M's
/// elements other than its bottom follow in M's order, and M's bottom is
/// sent to L's top.
struct OrdinalSumLayout {
  std::vector<Element> from_lower;
  std::vector<Element> from_upper;
};

OrdinalSumLayout ordinal_sum_layout(const FiniteAlgebra& lower, const FiniteAlgebra& upper);

/// Stacks `upper` on `lower`, gluing top(lower) to bot(upper). Upper labels
/// that collide with lower ones get a "'" suffix.
FiniteAlgebra ordinal_sum(const FiniteAlgebra& lower, const FiniteAlgebra& upper);

/// Induced lattice on a join/meet-closed subset; throws NotClosed naming the
/// first offending pair.
FiniteAlgebra sublattice(const FiniteAlgebra& lattice, std::vector<Element> subset);

/// A bijection f with f(op(x..)) = op(f(x)..) for every operation, matched by
/// name, or nullopt. Lattices are pruned by up/down-set sizes first.
std::optional<std::vector<Element>> find_isomorphism(const FiniteAlgebra& a,
                                                     const FiniteAlgebra& b);

inline bool isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace congrlab
