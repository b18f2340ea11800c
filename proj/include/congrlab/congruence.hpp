#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "congrlab/algebra.hpp"

namespace congrlab {

/// A partition known to be compatible with every operation of its parent
/// algebra, which is identified by fingerprint.
class Congruence {
 public:
  Congruence() = default;
  Congruence(Partition partition, Fingerprint parent)
      : partition_(std::move(partition)), parent_(parent) {}

  [[nodiscard]] const Partition& partition() const { return partition_; }
  [[nodiscard]] Fingerprint parent() const { return parent_; }
  [[nodiscard]] std::size_t size() const { return partition_.size(); }
  [[nodiscard]] bool related(Element a, Element b) const { return partition_.related(a, b); }
  [[nodiscard]] Element block_of(Element e) const { return partition_.block_of(e); }
  [[nodiscard]] std::size_t num_blocks() const { return partition_.num_blocks(); }
  [[nodiscard]] bool is_delta() const { return partition_.is_discrete(); }
  [[nodiscard]] bool is_nabla() const { return partition_.is_full(); }
  [[nodiscard]] bool contained_in(const Congruence& other) const {
    return partition_.refines(other.partition_);
  }

  friend bool operator==(const Congruence&, const Congruence&) = default;

 private:
  Partition partition_;
  Fingerprint parent_ = 0;
};

Congruence delta(const FiniteAlgebra& algebra);
Congruence nabla(const FiniteAlgebra& algebra);

/// Binary relation on the carrier as an n x n bit matrix; row a holds the
/// b with (a,b) in the relation.
class Relation {
 public:
  explicit Relation(std::size_t n = 0) : rows_(n, boost::dynamic_bitset<>(n)) {}
  static Relation of(const Partition& p);
  static Relation full(std::size_t n);

  [[nodiscard]] std::size_t size() const { return rows_.size(); }
  [[nodiscard]] bool contains(Element a, Element b) const { return rows_[a].test(b); }
  void set(Element a, Element b) { rows_[a].set(b); }
  [[nodiscard]] const boost::dynamic_bitset<>& row(Element a) const { return rows_[a]; }
  boost::dynamic_bitset<>& row(Element a) { return rows_[a]; }

  [[nodiscard]] bool is_full() const;
  [[nodiscard]] bool subset_of(const Relation& other) const;
  [[nodiscard]] Relation transpose() const;
  [[nodiscard]] bool is_symmetric() const { return *this == transpose(); }

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::vector<boost::dynamic_bitset<>> rows_;
};

using ElementPair = std::pair<Element, Element>;

/// Cg(a,b) by Mal'cev closure over a union-find.
Congruence principal_congruence(const FiniteAlgebra& algebra, Element a, Element b);
Congruence cg_generated(const FiniteAlgebra& algebra, std::span<const ElementPair> pairs);
/// Smallest congruence containing the given partition.
Congruence cg_closure(const FiniteAlgebra& algebra, const Partition& seed);

/// Throws ParentMismatch when the arguments belong to different algebras.
Congruence join(const Congruence& theta, const Congruence& phi);
Congruence meet(const Congruence& theta, const Congruence& phi);

/// theta o phi = {(a,b) | exists x: (a,x) in phi and (x,b) in theta}.
/// The right-hand argument is applied first.
Relation compose(const Congruence& theta, const Congruence& phi);
bool permutes(const Congruence& theta, const Congruence& phi);

/// An operation instance breaking compatibility: f applied to two argument
/// tuples that agree modulo the partition gives unrelated results.
struct CompatibilityViolation {
  std::string operation;
  std::vector<Element> left;
  std::vector<Element> right;
  Element left_value = 0;
  Element right_value = 0;
};

std::optional<CompatibilityViolation> find_violation(const FiniteAlgebra& algebra,
                                                     const Partition& p);
std::string describe(const FiniteAlgebra& algebra, const CompatibilityViolation& v);

/// Throws NotACongruence with the violating instance.
Congruence as_congruence(const FiniteAlgebra& algebra, Partition p);

/// Parses "0,m|1" against the algebra's labels. Throws ParseError on unknown
/// or repeated labels and NotACongruence if the partition is not compatible.
Congruence parse_congruence(const FiniteAlgebra& algebra, std::string_view text);

inline std::string format(const FiniteAlgebra& algebra, const Congruence& theta) {
  return format_partition(theta.partition(), algebra.labels());
}

}  // namespace congrlab
