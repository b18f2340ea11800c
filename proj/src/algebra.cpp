#include "congrlab/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "congrlab/error.hpp"

namespace congrlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::TableError: return "TableError";
    case ErrorKind::ResiduationViolation: return "ResiduationViolation";
    case ErrorKind::UnknownFixture: return "UnknownFixture";
    case ErrorKind::KindError: return "KindError";
    case ErrorKind::SignatureMismatch: return "SignatureMismatch";
    case ErrorKind::SizeCap: return "SizeCap";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::ParentMismatch: return "ParentMismatch";
    case ErrorKind::NotACongruence: return "NotACongruence";
    case ErrorKind::TrivialAlgebra: return "TrivialAlgebra";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::NotASublattice: return "NotASublattice";
    case ErrorKind::EncodingMismatch: return "EncodingMismatch";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::AmbiguousComplement: return "AmbiguousComplement";
    case ErrorKind::NotAFilter: return "NotAFilter";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Error";
}

std::string_view to_string(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::generic: return "algebra";
    case AlgebraKind::lattice: return "lattice";
    case AlgebraKind::bounded_lattice: return "bounded-lattice";
    case AlgebraKind::residuated: return "residuated";
  }
  return "algebra";
}

std::optional<AlgebraKind> kind_from_string(std::string_view text) {
  if (text == "algebra" || text == "generic") return AlgebraKind::generic;
  if (text == "lattice") return AlgebraKind::lattice;
  if (text == "bounded-lattice") return AlgebraKind::bounded_lattice;
  if (text == "residuated") return AlgebraKind::residuated;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Signature

namespace {

void require_op(const Signature& sig, std::string_view name, std::size_t arity) {
  auto idx = sig.find(name);
  if (!idx || sig[*idx].arity != arity) {
    std::ostringstream msg;
    msg << "kind " << to_string(sig.kind()) << " requires operation \"" << name << "\" of arity "
        << arity;
    throw Error(ErrorKind::KindError, msg.str());
  }
}

}  // namespace

Signature::Signature(std::vector<OperationSymbol> operations, AlgebraKind kind)
    : operations_(std::move(operations)), kind_(kind) {
  std::set<std::string_view> seen;
  for (const auto& op : operations_) {
    if (!seen.insert(op.name).second) {
      throw Error(ErrorKind::KindError, "duplicate operation name \"" + op.name + "\"");
    }
  }
  if (kind_ >= AlgebraKind::lattice) {
    require_op(*this, "join", 2);
    require_op(*this, "meet", 2);
  }
  if (kind_ >= AlgebraKind::bounded_lattice) {
    require_op(*this, "bot", 0);
    require_op(*this, "top", 0);
  }
  if (kind_ == AlgebraKind::residuated) {
    require_op(*this, "times", 2);
    require_op(*this, "implies", 2);
  }
}

Signature Signature::lattice() {
  return Signature({{"join", 2}, {"meet", 2}}, AlgebraKind::lattice);
}

Signature Signature::bounded_lattice() {
  return Signature({{"join", 2}, {"meet", 2}, {"bot", 0}, {"top", 0}},
                   AlgebraKind::bounded_lattice);
}

Signature Signature::residuated() {
  return Signature(
      {{"join", 2}, {"meet", 2}, {"times", 2}, {"implies", 2}, {"bot", 0}, {"top", 0}},
      AlgebraKind::residuated);
}

std::optional<std::size_t> Signature::find(std::string_view name) const {
  for (std::size_t i = 0; i < operations_.size(); ++i) {
    if (operations_[i].name == name) {
      return i;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// OperationTable

namespace {

std::size_t table_size(std::size_t n, std::size_t arity) {
  std::size_t size = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    size *= n;
  }
  return size;
}

}  // namespace

OperationTable::OperationTable(std::size_t carrier_size, std::size_t arity,
                               std::vector<Element> values)
    : n_(carrier_size), arity_(arity), values_(std::move(values)) {
  if (values_.size() != table_size(n_, arity_)) {
    std::ostringstream msg;
    msg << "table of arity " << arity_ << " over " << n_ << " elements needs "
        << table_size(n_, arity_) << " entries, got " << values_.size();
    throw Error(ErrorKind::TableError, msg.str());
  }
}

Element OperationTable::operator()(std::span<const Element> args) const {
  std::size_t index = 0;
  for (Element a : args) {
    index = index * n_ + a;
  }
  return values_[index];
}

// ---------------------------------------------------------------------------
// FiniteAlgebra

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

void fnv_mix(std::uint64_t& h, std::uint64_t value) {
  for (int i = 0; i < 8; ++i) {
    h ^= (value >> (8 * i)) & 0xffU;
    h *= kFnvPrime;
  }
}

void fnv_mix(std::uint64_t& h, std::string_view text) {
  fnv_mix(h, text.size());
  for (unsigned char c : text) {
    h ^= c;
    h *= kFnvPrime;
  }
}

}  // namespace

FiniteAlgebra::FiniteAlgebra(std::string name, std::vector<std::string> labels,
                             Signature signature, std::vector<OperationTable> tables)
    : FiniteAlgebra(std::move(name), std::move(labels), std::move(signature), std::move(tables),
                    true) {}

FiniteAlgebra FiniteAlgebra::trusted(std::string name, std::vector<std::string> labels,
                                     Signature signature, std::vector<OperationTable> tables) {
  return FiniteAlgebra(std::move(name), std::move(labels), std::move(signature),
                       std::move(tables), false);
}

FiniteAlgebra::FiniteAlgebra(std::string name, std::vector<std::string> labels,
                             Signature signature, std::vector<OperationTable> tables, bool check)
    : name_(std::move(name)),
      labels_(std::move(labels)),
      signature_(std::move(signature)),
      tables_(std::move(tables)) {
  if (labels_.empty()) {
    throw Error(ErrorKind::TableError, "carrier must be non-empty");
  }
  std::set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) {
      throw Error(ErrorKind::TableError, "duplicate element label \"" + l + "\"");
    }
  }
  validate_tables();

  std::uint64_t h = kFnvOffset;
  fnv_mix(h, labels_.size());
  for (const auto& l : labels_) fnv_mix(h, l);
  for (std::size_t i = 0; i < signature_.size(); ++i) {
    fnv_mix(h, signature_[i].name);
    fnv_mix(h, signature_[i].arity);
    for (Element v : tables_[i].values()) fnv_mix(h, v);
  }
  fingerprint_ = h;

  if (is_lattice()) {
    join_op_ = *signature_.find("join");
    meet_op_ = *signature_.find("meet");
    if (check) validate_lattice();
    Element lo = 0;
    Element hi = 0;
    for (Element e = 1; e < size(); ++e) {
      lo = meet(lo, e);
      hi = join(hi, e);
    }
    bottom_ = lo;
    top_ = hi;
    if (kind() >= AlgebraKind::bounded_lattice) {
      if (table("bot").constant() != bottom_ || table("top").constant() != top_) {
        throw Error(ErrorKind::TableError,
                    "constants bot/top must be the least and greatest elements");
      }
    }
    if (check && kind() == AlgebraKind::residuated) {
      validate_residuated();
    }
  }
}

void FiniteAlgebra::check_axioms() const {
  if (!is_lattice()) return;
  validate_lattice();
  if (kind() == AlgebraKind::residuated) validate_residuated();
}

void FiniteAlgebra::validate_tables() const {
  if (tables_.size() != signature_.size()) {
    throw Error(ErrorKind::TableError, "one table per operation is required");
  }
  for (std::size_t i = 0; i < tables_.size(); ++i) {
    const auto& t = tables_[i];
    if (t.arity() != signature_[i].arity || t.carrier_size() != size()) {
      throw Error(ErrorKind::TableError,
                  "table for \"" + signature_[i].name + "\" has the wrong shape");
    }
    for (Element v : t.values()) {
      if (v >= size()) {
        std::ostringstream msg;
        msg << "table for \"" << signature_[i].name << "\" has out-of-range entry " << v;
        throw Error(ErrorKind::TableError, msg.str());
      }
    }
  }
}

void FiniteAlgebra::validate_lattice() const {
  const auto n = static_cast<Element>(size());
  auto fail = [&](const std::string& law, Element a, Element b) {
    throw Error(ErrorKind::NotALattice,
                law + " fails at (" + label(a) + "," + label(b) + ")");
  };
  for (Element a = 0; a < n; ++a) {
    if (join(a, a) != a || meet(a, a) != a) fail("idempotence", a, a);
    for (Element b = 0; b < n; ++b) {
      if (join(a, b) != join(b, a)) fail("join commutativity", a, b);
      if (meet(a, b) != meet(b, a)) fail("meet commutativity", a, b);
      if (join(a, meet(a, b)) != a || meet(a, join(a, b)) != a) fail("absorption", a, b);
      for (Element c = 0; c < n; ++c) {
        if (join(join(a, b), c) != join(a, join(b, c))) fail("join associativity", a, b);
        if (meet(meet(a, b), c) != meet(a, meet(b, c))) fail("meet associativity", a, b);
      }
    }
  }
}

void FiniteAlgebra::validate_residuated() const {
  const auto& times = table("times");
  const auto& implies = table("implies");
  const auto n = static_cast<Element>(size());
  for (Element a = 0; a < n; ++a) {
    if (times(a, top_) != a) {
      throw Error(ErrorKind::ResiduationViolation,
                  "top is not a unit for times at " + label(a));
    }
    for (Element b = 0; b < n; ++b) {
      if (times(a, b) != times(b, a)) {
        throw Error(ErrorKind::ResiduationViolation,
                    "times not commutative at (" + label(a) + "," + label(b) + ")");
      }
      for (Element c = 0; c < n; ++c) {
        if (times(times(a, b), c) != times(a, times(b, c))) {
          throw Error(ErrorKind::ResiduationViolation, "times not associative at (" + label(a) +
                                                           "," + label(b) + "," + label(c) + ")");
        }
        if (leq(times(a, b), c) != leq(a, implies(b, c))) {
          throw Error(ErrorKind::ResiduationViolation, "residuation law fails at (" + label(a) +
                                                           "," + label(b) + "," + label(c) + ")");
        }
      }
    }
  }
}

std::optional<Element> FiniteAlgebra::element(std::string_view label) const {
  for (std::size_t e = 0; e < labels_.size(); ++e) {
    if (labels_[e] == label) {
      return static_cast<Element>(e);
    }
  }
  return std::nullopt;
}

const OperationTable& FiniteAlgebra::table(std::string_view op) const {
  auto idx = signature_.find(op);
  if (!idx) {
    throw Error(ErrorKind::KindError, "algebra has no operation \"" + std::string(op) + "\"");
  }
  return tables_[*idx];
}

FiniteAlgebra FiniteAlgebra::renamed(std::string name) const {
  FiniteAlgebra copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

FiniteAlgebra make_lattice(std::string name, std::vector<std::string> labels,
                           std::vector<Element> join_values, std::vector<Element> meet_values,
                           bool bounded) {
  const std::size_t n = labels.size();
  std::vector<OperationTable> tables;
  tables.emplace_back(n, 2, std::move(join_values));
  tables.emplace_back(n, 2, std::move(meet_values));
  if (!bounded) {
    return FiniteAlgebra(std::move(name), std::move(labels), Signature::lattice(),
                         std::move(tables));
  }
  // Bounds are found from the tables themselves; validation below re-checks.
  Element lo = 0;
  Element hi = 0;
  for (Element e = 1; e < n; ++e) {
    lo = tables[1](lo, e);
    hi = tables[0](hi, e);
  }
  tables.emplace_back(n, 0, std::vector<Element>{lo});
  tables.emplace_back(n, 0, std::vector<Element>{hi});
  return FiniteAlgebra(std::move(name), std::move(labels), Signature::bounded_lattice(),
                       std::move(tables));
}

FiniteAlgebra lattice_reduct(const FiniteAlgebra& algebra) {
  if (!algebra.is_lattice()) {
    throw Error(ErrorKind::KindError, "algebra \"" + algebra.name() + "\" is not a lattice");
  }
  auto join_values = algebra.table("join").values();
  auto meet_values = algebra.table("meet").values();
  return make_lattice(algebra.name(), algebra.labels(),
                      {join_values.begin(), join_values.end()},
                      {meet_values.begin(), meet_values.end()},
                      algebra.kind() >= AlgebraKind::bounded_lattice);
}

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<Element> block_of) : block_of_(std::move(block_of)) {
  for (std::size_t e = 0; e < block_of_.size(); ++e) {
    Element r = block_of_[e];
    if (r > e || block_of_[r] != r) {
      throw Error(ErrorKind::ParseError, "partition array is not in canonical form");
    }
  }
}

Partition Partition::discrete(std::size_t n) {
  std::vector<Element> b(n);
  std::iota(b.begin(), b.end(), Element{0});
  Partition p;
  p.block_of_ = std::move(b);
  return p;
}

Partition Partition::full(std::size_t n) {
  Partition p;
  p.block_of_.assign(n, 0);
  return p;
}

Partition Partition::from_class_ids(std::span<const std::size_t> class_of) {
  std::map<std::size_t, Element> first;
  Partition p;
  p.block_of_.resize(class_of.size());
  for (std::size_t e = 0; e < class_of.size(); ++e) {
    auto [it, inserted] = first.try_emplace(class_of[e], static_cast<Element>(e));
    p.block_of_[e] = it->second;
  }
  return p;
}

Partition Partition::from_blocks(std::size_t n, const std::vector<std::vector<Element>>& blocks) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> class_of(n, kUnset);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (Element e : blocks[b]) {
      if (e >= n || class_of[e] != kUnset) {
        throw Error(ErrorKind::ParseError, "blocks overlap or name an unknown element");
      }
      class_of[e] = b;
    }
  }
  if (std::find(class_of.begin(), class_of.end(), kUnset) != class_of.end()) {
    throw Error(ErrorKind::ParseError, "blocks do not cover the carrier");
  }
  return from_class_ids(class_of);
}

std::size_t Partition::num_blocks() const {
  std::size_t count = 0;
  for (std::size_t e = 0; e < block_of_.size(); ++e) {
    if (block_of_[e] == e) ++count;
  }
  return count;
}

std::vector<std::vector<Element>> Partition::blocks() const {
  std::vector<std::vector<Element>> out;
  std::vector<std::size_t> slot(block_of_.size());
  for (std::size_t e = 0; e < block_of_.size(); ++e) {
    if (block_of_[e] == e) {
      slot[e] = out.size();
      out.emplace_back();
    }
    out[slot[block_of_[e]]].push_back(static_cast<Element>(e));
  }
  return out;
}

bool Partition::refines(const Partition& coarser) const {
  for (std::size_t e = 0; e < block_of_.size(); ++e) {
    if (!coarser.related(static_cast<Element>(e), block_of_[e])) return false;
  }
  return true;
}

Partition meet(const Partition& a, const Partition& b) {
  std::vector<std::size_t> ids(a.size());
  for (std::size_t e = 0; e < a.size(); ++e) {
    ids[e] = a.block_of(static_cast<Element>(e)) * a.size() + b.block_of(static_cast<Element>(e));
  }
  return Partition::from_class_ids(ids);
}

Partition join(const Partition& a, const Partition& b) {
  std::vector<Element> parent(a.size());
  std::iota(parent.begin(), parent.end(), Element{0});
  auto find = [&](Element x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t e = 0; e < a.size(); ++e) {
    const auto x = static_cast<Element>(e);
    for (Element r : {a.block_of(x), b.block_of(x)}) {
      Element rx = find(x);
      Element rr = find(r);
      if (rx != rr) parent[std::max(rx, rr)] = std::min(rx, rr);
    }
  }
  std::vector<std::size_t> ids(a.size());
  for (std::size_t e = 0; e < a.size(); ++e) ids[e] = find(static_cast<Element>(e));
  return Partition::from_class_ids(ids);
}

bool canonical_less(const Partition& a, const Partition& b) {
  const auto na = a.num_blocks();
  const auto nb = b.num_blocks();
  if (na != nb) return na > nb;
  return a < b;
}

std::string format_partition(const Partition& p, std::span<const std::string> labels) {
  std::string out;
  bool first_block = true;
  for (const auto& block : p.blocks()) {
    if (!first_block) out += '|';
    first_block = false;
    bool first = true;
    for (Element e : block) {
      if (!first) out += ',';
      first = false;
      out += labels[e];
    }
  }
  return out;
}

}  // namespace congrlab
