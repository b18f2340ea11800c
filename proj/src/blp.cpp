#include "congrlab/blp.hpp"

#include <algorithm>
#include <map>

#include <boost/dynamic_bitset.hpp>

#include "congrlab/con_lattice.hpp"
#include "congrlab/error.hpp"
#include "congrlab/quotient.hpp"

namespace congrlab {

namespace {

using Mask = std::uint32_t;

void require_lattice(const FiniteAlgebra& a) {
  if (!a.is_lattice()) {
    throw Error(ErrorKind::KindError, a.name() + " has no lattice reduct");
  }
}

bool residuated(const FiniteAlgebra& a) { return a.kind() == AlgebraKind::residuated; }

void require_distributive(const FiniteAlgebra& a) {
  const auto n = static_cast<Element>(a.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (a.meet(x, a.join(y, z)) != a.join(a.meet(x, y), a.meet(x, z))) {
          throw Error(ErrorKind::NotDistributive, a.name() + " fails distribution at (" +
                                                      a.label(x) + "," + a.label(y) + "," +
                                                      a.label(z) + ")");
        }
      }
    }
  }
}

// Multiplication used for filter closure: times for residuated algebras,
// meet otherwise.
Element product(const FiniteAlgebra& a, Element x, Element y) {
  return residuated(a) ? a.table("times")(x, y) : a.meet(x, y);
}

std::string set_text(const FiniteAlgebra& a, const std::vector<Element>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += a.label(s[i]);
  }
  return out + "}";
}

// Returns a description of the first closure failure, or nothing.
std::optional<std::string> closure_failure(const FiniteAlgebra& a, const std::vector<bool>& in,
                                           bool upward) {
  const auto n = static_cast<Element>(a.size());
  bool empty = true;
  for (Element x = 0; x < n; ++x) {
    if (!in[x]) continue;
    empty = false;
    for (Element y = 0; y < n; ++y) {
      const bool beyond = upward ? a.leq(x, y) : a.leq(y, x);
      if (beyond && !in[y]) {
        return a.label(y) + (upward ? " is above " : " is below ") + a.label(x) +
               " but missing";
      }
      if (!in[y]) continue;
      const Element c = upward ? product(a, x, y) : a.join(x, y);
      if (!in[c]) {
        return std::string(upward ? (residuated(a) ? "times" : "meet") : "join") + "(" +
               a.label(x) + "," + a.label(y) + ")=" + a.label(c) + " is missing";
      }
    }
  }
  if (empty) return "the set is empty";
  return std::nullopt;
}

std::vector<bool> membership(const FiniteAlgebra& a, const std::vector<Element>& s) {
  std::vector<bool> in(a.size(), false);
  for (auto e : s) {
    if (e >= a.size()) throw Error(ErrorKind::ParseError, "element index out of range");
    in[e] = true;
  }
  return in;
}

std::vector<Element> principal_ideal(const FiniteAlgebra& a, Element x) {
  std::vector<Element> out;
  for (Element y = 0; y < a.size(); ++y) {
    if (a.leq(y, x)) out.push_back(y);
  }
  return out;
}

SubsetFamily enumerate(const FiniteAlgebra& a, bool upward) {
  require_lattice(a);
  const auto n = a.size();
  if (n > kFilterCarrierCap) {
    throw Error(ErrorKind::SizeCap, "filter enumeration is limited to " +
                                        std::to_string(kFilterCarrierCap) + " elements");
  }
  std::map<std::vector<Element>, Element> principal;
  for (Element x = static_cast<Element>(n); x-- > 0;) {
    principal[upward ? principal_filter(a, x) : principal_ideal(a, x)] = x;
  }
  std::vector<std::vector<Element>> found;
  for (Mask m = 1; m < (Mask{1} << n); ++m) {
    std::vector<bool> in(n);
    std::vector<Element> s;
    for (Element e = 0; e < n; ++e) {
      in[e] = (m >> e) & 1U;
      if (in[e]) s.push_back(e);
    }
    if (!closure_failure(a, in, upward)) found.push_back(std::move(s));
  }
  std::sort(found.begin(), found.end(), [](const auto& l, const auto& r) {
    return l.size() != r.size() ? l.size() > r.size() : l < r;
  });
  SubsetFamily out;
  for (auto& s : found) {
    auto it = principal.find(s);
    out.generator.push_back(it == principal.end() ? std::nullopt : std::optional(it->second));
    out.sets.push_back(std::move(s));
  }
  return out;
}

Congruence from_relation(const FiniteAlgebra& a, auto&& related) {
  const auto n = static_cast<Element>(a.size());
  std::vector<std::size_t> class_of(n);
  for (Element x = 0; x < n; ++x) {
    Element y = 0;
    while (!related(x, y)) ++y;
    class_of[x] = y;
  }
  return as_congruence(a, Partition::from_class_ids(class_of));
}

AlgebraLiftResult blp_over(const FiniteAlgebra& a, const SubsetFamily& family, bool upward) {
  AlgebraLiftResult out;
  for (const auto& s : family.sets) {
    auto theta = upward ? filter_congruence(a, s) : ideal_congruence(a, s);
    auto r = has_blp(a, theta);
    if (!r.holds) {
      out.holds = false;
      out.failing_congruence = format(a, theta);
      out.failing_target = r.failing_element;
      return out;
    }
  }
  return out;
}

}  // namespace

ElementBooleanCenter element_boolean_center(const FiniteAlgebra& a) {
  require_lattice(a);
  const auto n = static_cast<Element>(a.size());
  ElementBooleanCenter out;
  out.complement.assign(n, std::nullopt);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (a.join(x, y) != a.top() || a.meet(x, y) != a.bottom()) continue;
      if (out.complement[x]) {
        throw Error(ErrorKind::AmbiguousComplement,
                    a.label(x) + " has complements " + a.label(*out.complement[x]) + " and " +
                        a.label(y));
      }
      out.complement[x] = y;
    }
    if (out.complement[x]) out.members.push_back(x);
  }
  return out;
}

BlpResult has_blp(const FiniteAlgebra& a, const Congruence& theta) {
  auto q = quotient(a, theta);
  auto source = element_boolean_center(a);
  auto target = element_boolean_center(q.quotient);
  std::vector<bool> reached(q.quotient.size(), false);
  for (auto e : source.members) reached[q.projection[e]] = true;
  BlpResult out;
  for (auto m : target.members) {
    if (!reached[m]) {
      out.holds = false;
      out.failing_element = q.quotient.label(m);
      break;
    }
  }
  return out;
}

AlgebraLiftResult algebra_blp(const FiniteAlgebra& a) {
  AlgebraLiftResult out;
  const auto cl = all_congruences(a);
  for (const auto& theta : cl.elements()) {
    auto r = has_blp(a, theta);
    if (!r.holds) {
      out.holds = false;
      out.failing_congruence = format(a, theta);
      out.failing_target = r.failing_element;
      return out;
    }
  }
  return out;
}

std::vector<Element> principal_filter(const FiniteAlgebra& a, Element x) {
  require_lattice(a);
  // x^n decreases and stabilizes; [x) is the up-set of the limit.
  Element p = x;
  for (Element next = product(a, p, x); next != p; next = product(a, p, x)) p = next;
  std::vector<Element> out;
  for (Element y = 0; y < a.size(); ++y) {
    if (a.leq(p, y)) out.push_back(y);
  }
  return out;
}

SubsetFamily filters(const FiniteAlgebra& a) { return enumerate(a, true); }
SubsetFamily ideals(const FiniteAlgebra& a) { return enumerate(a, false); }

Congruence filter_congruence(const FiniteAlgebra& a, const std::vector<Element>& filter) {
  require_lattice(a);
  auto in = membership(a, filter);
  if (auto why = closure_failure(a, in, true)) {
    throw Error(ErrorKind::NotAFilter, set_text(a, filter) + ": " + *why);
  }
  if (residuated(a)) {
    const auto& implies = a.table("implies");
    return from_relation(a, [&](Element x, Element y) {
      return static_cast<bool>(in[a.meet(implies(x, y), implies(y, x))]);
    });
  }
  require_distributive(a);
  return from_relation(a, [&](Element x, Element y) {
    for (auto f : filter) {
      if (a.meet(x, f) == a.meet(y, f)) return true;
    }
    return false;
  });
}

Congruence ideal_congruence(const FiniteAlgebra& a, const std::vector<Element>& ideal) {
  require_lattice(a);
  if (residuated(a)) {
    throw Error(ErrorKind::KindError,
                "ideal congruences are taken on the lattice reduct of " + a.name());
  }
  auto in = membership(a, ideal);
  if (auto why = closure_failure(a, in, false)) {
    throw Error(ErrorKind::NotAnIdeal, set_text(a, ideal) + ": " + *why);
  }
  require_distributive(a);
  return from_relation(a, [&](Element x, Element y) {
    for (auto i : ideal) {
      if (a.join(x, i) == a.join(y, i)) return true;
    }
    return false;
  });
}

AlgebraLiftResult has_filt_blp(const FiniteAlgebra& a) { return blp_over(a, filters(a), true); }

AlgebraLiftResult has_id_blp(const FiniteAlgebra& a) { return blp_over(a, ideals(a), false); }

FiniteAlgebra reticulation(const FiniteAlgebra& r) {
  if (!residuated(r)) {
    throw Error(ErrorKind::KindError, r.name() + " is not a residuated lattice");
  }
  const auto n = r.size();
  std::vector<boost::dynamic_bitset<>> sets;
  std::vector<std::string> labels;
  for (Element x = 0; x < n; ++x) {
    boost::dynamic_bitset<> s(n);
    for (auto y : principal_filter(r, x)) s.set(y);
    if (std::find(sets.begin(), sets.end(), s) == sets.end()) {
      sets.push_back(std::move(s));
      labels.push_back("[" + r.label(x) + ")");
    }
  }
  const auto k = sets.size();
  auto find = [&](const boost::dynamic_bitset<>& s) {
    auto it = std::find(sets.begin(), sets.end(), s);
    if (it == sets.end()) {
      throw Error(ErrorKind::NotClosed, "principal filters of " + r.name() +
                                            " are not closed under intersection");
    }
    return static_cast<Element>(it - sets.begin());
  };
  std::vector<Element> join(k * k), meet(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      join[i * k + j] = find(sets[i] & sets[j]);
      // Filter generated by both: the smallest principal filter containing them.
      const auto both = sets[i] | sets[j];
      std::optional<std::size_t> best;
      for (std::size_t c = 0; c < k; ++c) {
        if (both.is_subset_of(sets[c]) && (!best || sets[c].count() < sets[*best].count())) {
          best = c;
        }
      }
      meet[i * k + j] = static_cast<Element>(*best);
    }
  }
  return make_lattice("L(" + r.name() + ")", std::move(labels), std::move(join), std::move(meet));
}

BlpEquivalence blp_equivalence_check(const FiniteAlgebra& a) {
  if (a.kind() < AlgebraKind::bounded_lattice) {
    throw Error(ErrorKind::KindError, a.name() + " is neither residuated nor a bounded lattice");
  }
  if (!residuated(a)) require_distributive(a);
  Analysis an(a);
  BlpEquivalence out;
  out.blp = algebra_blp(a).holds;
  out.cblp = algebra_cblp(a, an).holds;
  out.fclp = algebra_fclp(a, an).holds;
  out.agree = residuated(a) ? (out.blp == out.cblp && out.cblp == out.fclp) : out.blp == out.fclp;
  return out;
}

}  // namespace congrlab
