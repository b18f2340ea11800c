#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace congrlab {

/// Elements of a finite algebra are dense indices 0..n-1; labels live beside
/// them and are only used for input and output.
using Element = std::uint32_t;

/// Content hash of an algebra's labels, signature and tables.
using Fingerprint = std::uint64_t;

/// Ordered by strength: a residuated lattice is a bounded lattice is a lattice.
enum class AlgebraKind { generic = 0, lattice = 1, bounded_lattice = 2, residuated = 3 };

std::string_view to_string(AlgebraKind kind);
std::optional<AlgebraKind> kind_from_string(std::string_view text);

struct OperationSymbol {
  std::string name;
  std::size_t arity = 0;

  friend bool operator==(const OperationSymbol&, const OperationSymbol&) = default;
};

class Signature {
 public:
  Signature() = default;
  /// Throws KindError when names repeat or the operations required by `kind`
  /// are missing or have the wrong arity.
  Signature(std::vector<OperationSymbol> operations, AlgebraKind kind);

  static Signature lattice();
  static Signature bounded_lattice();
  static Signature residuated();

  [[nodiscard]] AlgebraKind kind() const { return kind_; }
  [[nodiscard]] std::span<const OperationSymbol> operations() const { return operations_; }
  [[nodiscard]] std::size_t size() const { return operations_.size(); }
  [[nodiscard]] const OperationSymbol& operator[](std::size_t i) const { return operations_[i]; }
  [[nodiscard]] std::optional<std::size_t> find(std::string_view name) const;

  /// Same operation names and arities in the same order (kind ignored).
  [[nodiscard]] bool same_operations(const Signature& other) const {
    return operations_ == other.operations_;
  }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<OperationSymbol> operations_;
  AlgebraKind kind_ = AlgebraKind::generic;
};

/// Total table of a k-ary operation over n elements, stored row-major with the
/// first argument most significant.
class OperationTable {
 public:
  OperationTable() = default;
  OperationTable(std::size_t carrier_size, std::size_t arity, std::vector<Element> values);

  [[nodiscard]] std::size_t arity() const { return arity_; }
  [[nodiscard]] std::size_t carrier_size() const { return n_; }
  [[nodiscard]] std::span<const Element> values() const { return values_; }

  [[nodiscard]] Element operator()(std::span<const Element> args) const;
  [[nodiscard]] Element constant() const { return values_[0]; }
  [[nodiscard]] Element operator()(Element a) const { return values_[a]; }
  [[nodiscard]] Element operator()(Element a, Element b) const { return values_[a * n_ + b]; }

  friend bool operator==(const OperationTable&, const OperationTable&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t arity_ = 0;
  std::vector<Element> values_;
};

/// A finite algebra with fully tabulated operations. Construction validates
/// totality, the lattice axioms when kind >= lattice, and the residuation law
/// when kind = residuated; the value is immutable afterwards.
class FiniteAlgebra {
 public:
  FiniteAlgebra(std::string name, std::vector<std::string> labels, Signature signature,
                std::vector<OperationTable> tables);

  /// For constructions whose result satisfies the lattice/residuation axioms
  /// by construction (products, duals, quotients). Only the table shapes and
  /// ranges are checked; the O(n^3) axiom scans are skipped.
  static FiniteAlgebra trusted(std::string name, std::vector<std::string> labels,
                               Signature signature, std::vector<OperationTable> tables);

  /// Runs the exhaustive axiom checks regardless of how the value was built.
  void check_axioms() const;

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] std::size_t size() const { return labels_.size(); }
  [[nodiscard]] bool is_trivial() const { return size() == 1; }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] const std::string& label(Element e) const { return labels_[e]; }
  [[nodiscard]] std::optional<Element> element(std::string_view label) const;
  [[nodiscard]] const Signature& signature() const { return signature_; }
  [[nodiscard]] AlgebraKind kind() const { return signature_.kind(); }
  [[nodiscard]] const std::vector<OperationTable>& tables() const { return tables_; }
  [[nodiscard]] const OperationTable& table(std::size_t op) const { return tables_[op]; }
  [[nodiscard]] const OperationTable& table(std::string_view op) const;
  [[nodiscard]] Fingerprint fingerprint() const { return fingerprint_; }

  /// Same carrier, same labels and same tables; names are not compared.
  [[nodiscard]] bool same_structure(const FiniteAlgebra& other) const {
    return fingerprint_ == other.fingerprint_ && labels_ == other.labels_ &&
           signature_.same_operations(other.signature_) && tables_ == other.tables_;
  }

  FiniteAlgebra renamed(std::string name) const;

  // Lattice view; callers must check is_lattice() first.
  [[nodiscard]] bool is_lattice() const { return kind() >= AlgebraKind::lattice; }
  [[nodiscard]] Element join(Element a, Element b) const { return tables_[join_op_](a, b); }
  [[nodiscard]] Element meet(Element a, Element b) const { return tables_[meet_op_](a, b); }
  [[nodiscard]] bool leq(Element a, Element b) const { return meet(a, b) == a; }
  [[nodiscard]] Element bottom() const { return bottom_; }
  [[nodiscard]] Element top() const { return top_; }

 private:
  FiniteAlgebra(std::string name, std::vector<std::string> labels, Signature signature,
                std::vector<OperationTable> tables, bool check);

  void validate_tables() const;
  void validate_lattice() const;
  void validate_residuated() const;

  std::string name_;
  std::vector<std::string> labels_;
  Signature signature_;
  std::vector<OperationTable> tables_;
  Fingerprint fingerprint_ = 0;
  std::size_t join_op_ = 0;
  std::size_t meet_op_ = 0;
  Element bottom_ = 0;
  Element top_ = 0;
};

/// Builds a lattice (or bounded lattice) directly from its join/meet tables.
FiniteAlgebra make_lattice(std::string name, std::vector<std::string> labels,
                           std::vector<Element> join_values, std::vector<Element> meet_values,
                           bool bounded = true);

/// The lattice (bounded if possible) obtained by forgetting every operation
/// other than join, meet and the bounds.
FiniteAlgebra lattice_reduct(const FiniteAlgebra& algebra);

/// Set partition of 0..n-1 in canonical form: block_of[e] is the smallest
/// element of e's block.
class Partition {
 public:
  Partition() = default;
  /// Throws ParseError unless the array is already canonical.
  explicit Partition(std::vector<Element> block_of);

  static Partition discrete(std::size_t n);
  static Partition full(std::size_t n);
  /// Canonicalizes an arbitrary class-id array (ids need not be elements).
  static Partition from_class_ids(std::span<const std::size_t> class_of);
  /// Throws ParseError if blocks overlap or miss elements.
  static Partition from_blocks(std::size_t n, const std::vector<std::vector<Element>>& blocks);

  [[nodiscard]] std::size_t size() const { return block_of_.size(); }
  [[nodiscard]] Element block_of(Element e) const { return block_of_[e]; }
  [[nodiscard]] std::span<const Element> representatives() const { return block_of_; }
  [[nodiscard]] bool related(Element a, Element b) const { return block_of_[a] == block_of_[b]; }
  [[nodiscard]] std::size_t num_blocks() const;
  [[nodiscard]] bool is_discrete() const { return num_blocks() == size(); }
  [[nodiscard]] bool is_full() const { return num_blocks() <= 1; }
  /// Blocks ordered by their smallest element; elements ascending.
  [[nodiscard]] std::vector<std::vector<Element>> blocks() const;
  /// Every block of *this lies inside a block of `coarser`.
  [[nodiscard]] bool refines(const Partition& coarser) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<Element> block_of_;
};

/// Common refinement.
Partition meet(const Partition& a, const Partition& b);
/// Finest partition coarser than both (transitive closure of the union).
Partition join(const Partition& a, const Partition& b);

/// Output order for lists of partitions: more blocks first, then
/// lexicographic on the canonical array. Delta comes first, nabla last.
bool canonical_less(const Partition& a, const Partition& b);

/// "0,m|1" style rendering using the algebra's labels.
std::string format_partition(const Partition& p, std::span<const std::string> labels);

}  // namespace congrlab
