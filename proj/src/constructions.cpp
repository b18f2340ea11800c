#include "congrlab/constructions.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "congrlab/error.hpp"

namespace congrlab {

ProductEncoding::ProductEncoding(std::vector<std::size_t> radices)
    : radices_(std::move(radices)), strides_(radices_.size(), 1) {
  for (std::size_t i = radices_.size(); i-- > 0;) {
    strides_[i] = total_;
    total_ *= radices_[i];
  }
}

Element ProductEncoding::encode(std::span<const Element> tuple) const {
  std::size_t index = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i) index += tuple[i] * strides_[i];
  return static_cast<Element>(index);
}

std::vector<Element> ProductEncoding::decode(Element index) const {
  std::vector<Element> tuple(radices_.size());
  for (std::size_t i = 0; i < radices_.size(); ++i) tuple[i] = component(index, i);
  return tuple;
}

Element ProductEncoding::component(Element index, std::size_t factor) const {
  return static_cast<Element>((index / strides_[factor]) % radices_[factor]);
}

// ---------------------------------------------------------------------------

FiniteAlgebra dual(const FiniteAlgebra& lattice) {
  if (!lattice.is_lattice()) {
    throw Error(ErrorKind::KindError, "dual needs a lattice, got " + lattice.name());
  }
  const std::size_t n = lattice.size();
  auto j = lattice.table("join").values();
  auto m = lattice.table("meet").values();
  std::vector<OperationTable> tables;
  tables.emplace_back(n, 2, std::vector<Element>(m.begin(), m.end()));
  tables.emplace_back(n, 2, std::vector<Element>(j.begin(), j.end()));
  if (lattice.kind() == AlgebraKind::lattice) {
    return FiniteAlgebra::trusted(lattice.name() + "^d", lattice.labels(), Signature::lattice(),
                                  std::move(tables));
  }
  tables.emplace_back(n, 0, std::vector<Element>{lattice.top()});
  tables.emplace_back(n, 0, std::vector<Element>{lattice.bottom()});
  return FiniteAlgebra::trusted(lattice.name() + "^d", lattice.labels(),
                                Signature::bounded_lattice(), std::move(tables));
}

FiniteAlgebra direct_product(std::span<const FiniteAlgebra> factors, std::size_t carrier_cap) {
  if (factors.empty()) {
    throw Error(ErrorKind::SignatureMismatch, "direct product needs at least one factor");
  }
  const auto& signature = factors[0].signature();
  AlgebraKind kind = signature.kind();
  std::vector<std::size_t> radices;
  std::size_t total = 1;
  std::string name;
  for (const auto& f : factors) {
    if (!f.signature().same_operations(signature)) {
      throw Error(ErrorKind::SignatureMismatch,
                  f.name() + " does not share the signature of " + factors[0].name());
    }
    kind = std::min(kind, f.kind());
    radices.push_back(f.size());
    total *= f.size();
    if (total > carrier_cap) {
      throw Error(ErrorKind::SizeCap, "product carrier exceeds " + std::to_string(carrier_cap));
    }
    name += (name.empty() ? "" : "x") + f.name();
  }
  const ProductEncoding enc(radices);
  const std::size_t k = factors.size();

  std::vector<std::string> labels(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    auto tuple = enc.decode(static_cast<Element>(idx));
    std::string label = "(";
    for (std::size_t i = 0; i < k; ++i) {
      if (i) label += ',';
      label += factors[i].label(tuple[i]);
    }
    labels[idx] = label + ")";
  }

  std::vector<OperationTable> tables;
  for (std::size_t op = 0; op < signature.size(); ++op) {
    const std::size_t arity = signature[op].arity;
    std::size_t entries = 1;
    for (std::size_t a = 0; a < arity; ++a) entries *= total;
    std::vector<Element> values(entries);
    std::vector<Element> args(arity);
    std::vector<Element> component_args(arity);
    std::vector<Element> result(k);
    for (std::size_t entry = 0; entry < entries; ++entry) {
      std::size_t rest = entry;
      for (std::size_t a = arity; a-- > 0;) {
        args[a] = static_cast<Element>(rest % total);
        rest /= total;
      }
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t a = 0; a < arity; ++a) component_args[a] = enc.component(args[a], i);
        result[i] = factors[i].table(op)(component_args);
      }
      values[entry] = enc.encode(result);
    }
    tables.emplace_back(total, arity, std::move(values));
  }
  std::vector<OperationSymbol> symbols(signature.operations().begin(),
                                       signature.operations().end());
  return FiniteAlgebra::trusted(name, std::move(labels), Signature(std::move(symbols), kind),
                                std::move(tables));
}

OrdinalSumLayout ordinal_sum_layout(const FiniteAlgebra& lower, const FiniteAlgebra& upper) {
  if (!lower.is_lattice() || !upper.is_lattice()) {
    throw Error(ErrorKind::KindError, "ordinal sum needs two lattices");
  }
  OrdinalSumLayout layout;
  layout.from_lower.resize(lower.size());
  for (Element e = 0; e < lower.size(); ++e) layout.from_lower[e] = e;
  layout.from_upper.resize(upper.size());
  auto next = static_cast<Element>(lower.size());
  for (Element e = 0; e < upper.size(); ++e) {
    layout.from_upper[e] = (e == upper.bottom()) ? lower.top() : next++;
  }
  return layout;
}

FiniteAlgebra ordinal_sum(const FiniteAlgebra& lower, const FiniteAlgebra& upper) {
  const auto layout = ordinal_sum_layout(lower, upper);
  const std::size_t n = lower.size() + upper.size() - 1;

  // Position of every sum element in each summand, if it has one.
  constexpr Element kNone = static_cast<Element>(-1);
  std::vector<Element> in_lower(n, kNone);
  std::vector<Element> in_upper(n, kNone);
  for (Element e = 0; e < lower.size(); ++e) in_lower[layout.from_lower[e]] = e;
  for (Element e = 0; e < upper.size(); ++e) in_upper[layout.from_upper[e]] = e;

  std::vector<std::string> labels(n);
  std::set<std::string> used;
  for (Element e = 0; e < lower.size(); ++e) {
    labels[e] = lower.label(e);
    used.insert(labels[e]);
  }
  for (Element e = 0; e < upper.size(); ++e) {
    if (e == upper.bottom()) continue;
    std::string label = upper.label(e);
    while (used.count(label)) label += '\'';
    used.insert(label);
    labels[layout.from_upper[e]] = label;
  }

  std::vector<Element> join_values(n * n);
  std::vector<Element> meet_values(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      Element j;
      Element m;
      if (in_lower[a] != kNone && in_lower[b] != kNone) {
        j = layout.from_lower[lower.join(in_lower[a], in_lower[b])];
        m = layout.from_lower[lower.meet(in_lower[a], in_lower[b])];
      } else if (in_upper[a] != kNone && in_upper[b] != kNone) {
        j = layout.from_upper[upper.join(in_upper[a], in_upper[b])];
        m = layout.from_upper[upper.meet(in_upper[a], in_upper[b])];
      } else if (in_upper[a] != kNone) {  // a above, b strictly below the seam
        j = a;
        m = b;
      } else {
        j = b;
        m = a;
      }
      join_values[a * n + b] = j;
      meet_values[a * n + b] = m;
    }
  }
  std::vector<OperationTable> tables;
  tables.emplace_back(n, 2, std::move(join_values));
  tables.emplace_back(n, 2, std::move(meet_values));
  tables.emplace_back(n, 0, std::vector<Element>{layout.from_lower[lower.bottom()]});
  tables.emplace_back(n, 0, std::vector<Element>{layout.from_upper[upper.top()]});
  return FiniteAlgebra::trusted(lower.name() + "+" + upper.name(), std::move(labels),
                                Signature::bounded_lattice(), std::move(tables));
}

FiniteAlgebra sublattice(const FiniteAlgebra& lattice, std::vector<Element> subset) {
  if (!lattice.is_lattice()) throw Error(ErrorKind::KindError, "sublattice needs a lattice");
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  if (subset.empty()) throw Error(ErrorKind::NotClosed, "empty subset");
  std::vector<Element> position(lattice.size(), static_cast<Element>(-1));
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] >= lattice.size()) throw Error(ErrorKind::NotClosed, "unknown element");
    position[subset[i]] = static_cast<Element>(i);
  }
  const std::size_t n = subset.size();
  std::vector<Element> join_values(n * n);
  std::vector<Element> meet_values(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Element j = lattice.join(subset[i], subset[k]);
      const Element m = lattice.meet(subset[i], subset[k]);
      if (position[j] == static_cast<Element>(-1) || position[m] == static_cast<Element>(-1)) {
        throw Error(ErrorKind::NotClosed, "subset not closed at (" + lattice.label(subset[i]) +
                                              "," + lattice.label(subset[k]) + ")");
      }
      join_values[i * n + k] = position[j];
      meet_values[i * n + k] = position[m];
    }
  }
  std::vector<std::string> labels;
  for (Element e : subset) labels.push_back(lattice.label(e));
  std::vector<OperationTable> tables;
  tables.emplace_back(n, 2, std::move(join_values));
  tables.emplace_back(n, 2, std::move(meet_values));
  if (lattice.kind() == AlgebraKind::lattice) {
    return FiniteAlgebra::trusted(lattice.name() + "|sub", std::move(labels),
                                  Signature::lattice(), std::move(tables));
  }
  Element lo = 0;
  Element hi = 0;
  for (Element e = 1; e < n; ++e) {
    lo = tables[1](lo, e);
    hi = tables[0](hi, e);
  }
  tables.emplace_back(n, 0, std::vector<Element>{lo});
  tables.emplace_back(n, 0, std::vector<Element>{hi});
  return FiniteAlgebra::trusted(lattice.name() + "|sub", std::move(labels),
                                Signature::bounded_lattice(), std::move(tables));
}

// ---------------------------------------------------------------------------

namespace {

class IsoSearch {
 public:
  IsoSearch(const FiniteAlgebra& a, const FiniteAlgebra& b) : a_(a), b_(b), n_(a.size()) {
    for (std::size_t op = 0; op < a.signature().size(); ++op) {
      op_pairs_.emplace_back(op, *b.signature().find(a.signature()[op].name));
    }
    if (a.is_lattice() && b.is_lattice()) {
      inv_a_ = invariants(a);
      inv_b_ = invariants(b);
    } else {
      inv_a_.assign(n_, {0, 0});
      inv_b_.assign(n_, {0, 0});
    }
    forward_.assign(n_, kNone);
    used_.assign(n_, false);
  }

  std::optional<std::vector<Element>> run() {
    if (search(0)) return forward_;
    return std::nullopt;
  }

 private:
  static constexpr Element kNone = static_cast<Element>(-1);

  static std::vector<std::pair<std::size_t, std::size_t>> invariants(const FiniteAlgebra& l) {
    std::vector<std::pair<std::size_t, std::size_t>> out(l.size(), {0, 0});
    for (Element x = 0; x < l.size(); ++x) {
      for (Element y = 0; y < l.size(); ++y) {
        if (l.leq(y, x)) ++out[x].first;
        if (l.leq(x, y)) ++out[x].second;
      }
    }
    return out;
  }

  bool consistent(Element x) const {
    for (auto [op_a, op_b] : op_pairs_) {
      const auto& ta = a_.table(op_a);
      const auto& tb = b_.table(op_b);
      if (ta.arity() == 0) {
        const Element c = ta.constant();
        if (forward_[c] != kNone && forward_[c] != tb.constant()) return false;
      } else if (ta.arity() == 1) {
        const Element r = ta(x);
        if (forward_[r] != kNone && forward_[r] != tb(forward_[x])) return false;
      } else if (ta.arity() == 2) {
        for (Element y = 0; y < n_; ++y) {
          if (forward_[y] == kNone) continue;
          for (auto [p, q] : {std::pair{x, y}, std::pair{y, x}}) {
            const Element r = ta(p, q);
            if (forward_[r] != kNone && forward_[r] != tb(forward_[p], forward_[q])) return false;
          }
        }
      }
    }
    return true;
  }

  bool full_check() const {
    for (auto [op_a, op_b] : op_pairs_) {
      const auto& ta = a_.table(op_a);
      const auto& tb = b_.table(op_b);
      const std::size_t arity = ta.arity();
      std::size_t entries = ta.values().size();
      std::vector<Element> args(arity);
      std::vector<Element> mapped(arity);
      for (std::size_t entry = 0; entry < entries; ++entry) {
        std::size_t rest = entry;
        for (std::size_t i = arity; i-- > 0;) {
          args[i] = static_cast<Element>(rest % n_);
          rest /= n_;
          mapped[i] = forward_[args[i]];
        }
        if (forward_[ta(args)] != tb(mapped)) return false;
      }
    }
    return true;
  }

  bool search(Element x) {
    if (x == n_) return full_check();
    for (Element y = 0; y < n_; ++y) {
      if (used_[y] || inv_a_[x] != inv_b_[y]) continue;
      forward_[x] = y;
      used_[y] = true;
      if (consistent(x) && search(x + 1)) return true;
      forward_[x] = kNone;
      used_[y] = false;
    }
    return false;
  }

  const FiniteAlgebra& a_;
  const FiniteAlgebra& b_;
  Element n_;
  std::vector<std::pair<std::size_t, std::size_t>> op_pairs_;
  std::vector<std::pair<std::size_t, std::size_t>> inv_a_;
  std::vector<std::pair<std::size_t, std::size_t>> inv_b_;
  std::vector<Element> forward_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<Element>> find_isomorphism(const FiniteAlgebra& a,
                                                     const FiniteAlgebra& b) {
  if (a.size() != b.size() || a.signature().size() != b.signature().size()) return std::nullopt;
  for (const auto& op : a.signature().operations()) {
    auto other = b.signature().find(op.name);
    if (!other || b.signature()[*other].arity != op.arity) return std::nullopt;
  }
  return IsoSearch(a, b).run();
}

}  // namespace congrlab
