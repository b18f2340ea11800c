#include "congrlab/congruence.hpp"

#include <deque>

#include "congrlab/error.hpp"
#include "congrlab/union_find.hpp"

namespace congrlab {

namespace {

void require_same_parent(const Congruence& a, const Congruence& b) {
  if (a.parent() != b.parent() || a.size() != b.size()) {
    throw Error(ErrorKind::ParentMismatch, "congruences belong to different algebras");
  }
}

// Walks every argument tuple of `arity` positions in which position `pos`
// is left open, calling fn(args) with args[pos] still to be filled.
template <typename Fn>
void for_each_completion(std::size_t n, std::size_t arity, std::size_t pos, Fn&& fn) {
  std::vector<Element> args(arity, 0);
  while (true) {
    fn(args);
    bool advanced = false;
    for (std::size_t i = arity; i-- > 0;) {
      if (i == pos) continue;
      if (++args[i] < n) {
        advanced = true;
        break;
      }
      args[i] = 0;
    }
    if (!advanced) return;
  }
}

class MalcevClosure {
 public:
  explicit MalcevClosure(const FiniteAlgebra& algebra) : algebra_(algebra), uf_(algebra.size()) {}

  void merge(Element x, Element y) {
    if (uf_.unite(x, y)) queue_.emplace_back(x, y);
  }

  Partition run() {
    const auto n = algebra_.size();
    while (!queue_.empty()) {
      auto [x, y] = queue_.front();
      queue_.pop_front();
      for (const auto& table : algebra_.tables()) {
        const auto arity = table.arity();
        if (arity == 1) {
          merge(table(x), table(y));
        } else if (arity == 2) {
          for (Element z = 0; z < n; ++z) {
            merge(table(x, z), table(y, z));
            merge(table(z, x), table(z, y));
          }
        } else if (arity > 2) {
          for (std::size_t pos = 0; pos < arity; ++pos) {
            for_each_completion(n, arity, pos, [&](std::vector<Element>& args) {
              args[pos] = x;
              const auto fx = table(args);
              args[pos] = y;
              const auto fy = table(args);
              args[pos] = 0;
              merge(fx, fy);
            });
          }
        }
      }
    }
    return uf_.to_partition();
  }

 private:
  const FiniteAlgebra& algebra_;
  UnionFind uf_;
  std::deque<ElementPair> queue_;
};

}  // namespace

Congruence delta(const FiniteAlgebra& algebra) {
  return {Partition::discrete(algebra.size()), algebra.fingerprint()};
}

Congruence nabla(const FiniteAlgebra& algebra) {
  return {Partition::full(algebra.size()), algebra.fingerprint()};
}

Relation Relation::of(const Partition& p) {
  Relation r(p.size());
  for (const auto& block : p.blocks()) {
    boost::dynamic_bitset<> row(p.size());
    for (auto e : block) row.set(e);
    for (auto e : block) r.rows_[e] = row;
  }
  return r;
}

Relation Relation::full(std::size_t n) {
  Relation r(n);
  for (auto& row : r.rows_) row.set();
  return r;
}

bool Relation::is_full() const {
  for (const auto& row : rows_) {
    if (!row.all()) return false;
  }
  return true;
}

bool Relation::subset_of(const Relation& other) const {
  for (std::size_t a = 0; a < rows_.size(); ++a) {
    if (!rows_[a].is_subset_of(other.rows_[a])) return false;
  }
  return true;
}

Relation Relation::transpose() const {
  Relation t(rows_.size());
  for (std::size_t a = 0; a < rows_.size(); ++a) {
    for (auto b = rows_[a].find_first(); b != boost::dynamic_bitset<>::npos;
         b = rows_[a].find_next(b)) {
      t.rows_[b].set(a);
    }
  }
  return t;
}

Congruence principal_congruence(const FiniteAlgebra& algebra, Element a, Element b) {
  const ElementPair pair{a, b};
  return cg_generated(algebra, std::span(&pair, 1));
}

Congruence cg_generated(const FiniteAlgebra& algebra, std::span<const ElementPair> pairs) {
  MalcevClosure closure(algebra);
  for (auto [a, b] : pairs) closure.merge(a, b);
  return {closure.run(), algebra.fingerprint()};
}

Congruence cg_closure(const FiniteAlgebra& algebra, const Partition& seed) {
  MalcevClosure closure(algebra);
  for (Element e = 0; e < seed.size(); ++e) closure.merge(seed.block_of(e), e);
  return {closure.run(), algebra.fingerprint()};
}

Congruence join(const Congruence& theta, const Congruence& phi) {
  require_same_parent(theta, phi);
  // The join in Eq(A) of two congruences is already a congruence.
  return {join(theta.partition(), phi.partition()), theta.parent()};
}

Congruence meet(const Congruence& theta, const Congruence& phi) {
  require_same_parent(theta, phi);
  return {meet(theta.partition(), phi.partition()), theta.parent()};
}

Relation compose(const Congruence& theta, const Congruence& phi) {
  require_same_parent(theta, phi);
  const auto n = theta.size();
  const auto theta_rel = Relation::of(theta.partition());
  Relation out(n);
  for (const auto& block : phi.partition().blocks()) {
    boost::dynamic_bitset<> row(n);
    for (auto x : block) row |= theta_rel.row(x);
    for (auto a : block) out.row(a) = row;
  }
  return out;
}

bool permutes(const Congruence& theta, const Congruence& phi) {
  return compose(theta, phi) == compose(phi, theta);
}

std::optional<CompatibilityViolation> find_violation(const FiniteAlgebra& algebra,
                                                     const Partition& p) {
  const auto n = algebra.size();
  const auto& sig = algebra.signature();
  for (std::size_t op = 0; op < sig.size(); ++op) {
    const auto& table = algebra.table(op);
    const auto arity = table.arity();
    if (arity == 0) continue;
    for (Element x = 0; x < n; ++x) {
      const Element y = p.block_of(x);
      if (x == y) continue;
      for (std::size_t pos = 0; pos < arity; ++pos) {
        std::optional<CompatibilityViolation> found;
        auto check = [&](std::vector<Element>& args) {
          if (found) return;
          args[pos] = y;
          auto left = args;
          const auto fy = table(args);
          args[pos] = x;
          auto right = args;
          const auto fx = table(args);
          args[pos] = 0;
          if (!p.related(fy, fx)) {
            found = CompatibilityViolation{sig[op].name, std::move(left), std::move(right), fy, fx};
          }
        };
        if (arity == 1) {
          std::vector<Element> args(1, 0);
          check(args);
        } else {
          for_each_completion(n, arity, pos, check);
        }
        if (found) return found;
      }
    }
  }
  return std::nullopt;
}

std::string describe(const FiniteAlgebra& algebra, const CompatibilityViolation& v) {
  auto call = [&](const std::vector<Element>& args, Element value) {
    std::string s = v.operation + "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) s += ",";
      s += algebra.label(args[i]);
    }
    return s + ")=" + algebra.label(value);
  };
  return call(v.left, v.left_value) + " and " + call(v.right, v.right_value) +
         " fall in different blocks although the arguments are related";
}

Congruence as_congruence(const FiniteAlgebra& algebra, Partition p) {
  if (p.size() != algebra.size()) {
    throw Error(ErrorKind::NotACongruence, "partition has the wrong number of elements");
  }
  if (auto v = find_violation(algebra, p)) {
    throw Error(ErrorKind::NotACongruence, describe(algebra, *v));
  }
  return {std::move(p), algebra.fingerprint()};
}

Congruence parse_congruence(const FiniteAlgebra& algebra, std::string_view text) {
  std::vector<std::vector<Element>> blocks;
  std::vector<bool> seen(algebra.size(), false);
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  std::size_t start = 0;
  while (start <= text.size()) {
    auto bar = text.find('|', start);
    if (bar == std::string_view::npos) bar = text.size();
    auto block_text = text.substr(start, bar - start);
    std::vector<Element> block;
    std::size_t s = 0;
    while (s <= block_text.size()) {
      auto comma = block_text.find(',', s);
      if (comma == std::string_view::npos) comma = block_text.size();
      auto label = trim(block_text.substr(s, comma - s));
      if (label.empty()) {
        throw Error(ErrorKind::ParseError, "empty label in \"" + std::string(text) + "\"");
      }
      auto e = algebra.element(label);
      if (!e) throw Error(ErrorKind::ParseError, "unknown element \"" + std::string(label) + "\"");
      if (seen[*e]) {
        throw Error(ErrorKind::ParseError, "element \"" + std::string(label) + "\" repeated");
      }
      seen[*e] = true;
      block.push_back(*e);
      s = comma + 1;
    }
    blocks.push_back(std::move(block));
    start = bar + 1;
  }
  for (Element e = 0; e < algebra.size(); ++e) {
    if (!seen[e]) {
      throw Error(ErrorKind::ParseError, "element \"" + algebra.label(e) + "\" is in no block");
    }
  }
  return as_congruence(algebra, Partition::from_blocks(algebra.size(), blocks));
}

}  // namespace congrlab
