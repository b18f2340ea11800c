#include "congrlab/con_lattice.hpp"

#include <algorithm>
#include <set>

#include "congrlab/constructions.hpp"
#include "congrlab/error.hpp"

namespace congrlab {

namespace {

constexpr std::size_t kTableLimit = 2048;

}  // namespace

ConLattice::ConLattice(const FiniteAlgebra& algebra, std::vector<Partition> sorted)
    : algebra_(algebra.fingerprint()), carrier_(algebra.size()) {
  const auto k = sorted.size();
  elements_.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    index_.emplace(sorted[i], i);
    elements_.emplace_back(std::move(sorted[i]), algebra_);
  }
  leq_.assign(k * k, false);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      leq_[i * k + j] = elements_[i].contained_in(elements_[j]);
    }
  }
  if (k <= kTableLimit) {
    join_.resize(k * k);
    meet_.resize(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i; j < k; ++j) {
        auto jn = *index_of(congrlab::join(elements_[i].partition(), elements_[j].partition()));
        auto mt = *index_of(congrlab::meet(elements_[i].partition(), elements_[j].partition()));
        join_[i * k + j] = join_[j * k + i] = static_cast<std::uint32_t>(jn);
        meet_[i * k + j] = meet_[j * k + i] = static_cast<std::uint32_t>(mt);
      }
    }
  }
}

std::size_t ConLattice::join(std::size_t i, std::size_t j) const {
  if (!join_.empty()) return join_[i * size() + j];
  return *index_of(congrlab::join(elements_[i].partition(), elements_[j].partition()));
}

std::size_t ConLattice::meet(std::size_t i, std::size_t j) const {
  if (!meet_.empty()) return meet_[i * size() + j];
  return *index_of(congrlab::meet(elements_[i].partition(), elements_[j].partition()));
}

std::optional<std::size_t> ConLattice::index_of(const Partition& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t ConLattice::require_index(const Congruence& theta) const {
  auto i = index_of(theta);
  if (!i) throw Error(ErrorKind::ParentMismatch, "congruence does not belong to this lattice");
  return *i;
}

ConLattice all_congruences(const FiniteAlgebra& algebra, std::size_t con_cap) {
  const auto n = algebra.size();
  if (n > kDefaultCarrierCap) {
    throw Error(ErrorKind::SizeCap, "carrier of " + std::to_string(n) + " elements exceeds " +
                                        std::to_string(kDefaultCarrierCap));
  }
  std::set<Partition> found;
  std::vector<Partition> all;
  auto add = [&](Partition p) {
    if (found.insert(p).second) {
      all.push_back(std::move(p));
      if (all.size() > con_cap) {
        throw Error(ErrorKind::SizeCap,
                    "more than " + std::to_string(con_cap) + " congruences");
      }
    }
  };
  add(Partition::discrete(n));
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      add(principal_congruence(algebra, a, b).partition());
    }
  }
  // Every congruence is the join of the principal ones below it, so closing
  // under binary joins reaches all of Con(A).
  for (std::size_t next = 1; next < all.size(); ++next) {
    for (std::size_t i = 0; i < next; ++i) {
      add(join(all[next], all[i]));
    }
  }
  std::sort(all.begin(), all.end(), canonical_less);
  return ConLattice(algebra, std::move(all));
}

std::vector<Congruence> brute_force_congruences(const FiniteAlgebra& algebra) {
  const auto n = algebra.size();
  if (n > kBruteForceCarrierCap) {
    throw Error(ErrorKind::SizeCap, "brute force is limited to " +
                                        std::to_string(kBruteForceCarrierCap) + " elements");
  }
  std::vector<Partition> out;
  // Restricted growth strings: class[0] = 0, class[i] <= 1 + max(class[0..i-1]).
  std::vector<std::size_t> cls(n, 0);
  std::vector<std::size_t> prefix_max(n, 0);
  while (true) {
    auto p = Partition::from_class_ids(cls);
    if (!find_violation(algebra, p)) out.push_back(std::move(p));
    bool advanced = false;
    for (std::size_t i = n; i-- > 1;) {
      if (cls[i] <= prefix_max[i - 1]) {
        ++cls[i];
        prefix_max[i] = std::max(prefix_max[i - 1], cls[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
          cls[j] = 0;
          prefix_max[j] = prefix_max[i];
        }
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  std::sort(out.begin(), out.end(), canonical_less);
  std::vector<Congruence> result;
  for (auto& p : out) result.emplace_back(std::move(p), algebra.fingerprint());
  return result;
}

bool is_congruence_distributive(const ConLattice& cl) {
  const auto k = cl.size();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      for (std::size_t c = b + 1; c < k; ++c) {
        if (cl.meet(a, cl.join(b, c)) != cl.join(cl.meet(a, b), cl.meet(a, c))) return false;
      }
    }
  }
  return true;
}

bool is_congruence_permutable(const ConLattice& cl) {
  const auto k = cl.size();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      if (!permutes(cl[a], cl[b])) return false;
    }
  }
  return true;
}

bool is_arithmetical(const ConLattice& cl) {
  return is_congruence_distributive(cl) && is_congruence_permutable(cl);
}

std::vector<std::size_t> maximal_congruences(const ConLattice& cl) {
  if (cl.carrier_size() <= 1) {
    throw Error(ErrorKind::TrivialAlgebra, "the trivial algebra has no maximal congruence");
  }
  const auto top = cl.index_of_nabla();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < top; ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < top && maximal; ++j) {
      if (j != i && cl.leq(i, j)) maximal = false;
    }
    if (maximal) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> prime_congruences(const ConLattice& cl) {
  const auto k = cl.size();
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t + 1 < k; ++t) {
    bool prime = true;
    for (std::size_t a = 0; a < k && prime; ++a) {
      for (std::size_t b = a; b < k && prime; ++b) {
        if (cl.leq(cl.meet(a, b), t) && !cl.leq(a, t) && !cl.leq(b, t)) prime = false;
      }
    }
    if (prime) out.push_back(t);
  }
  return out;
}

std::size_t radical(const ConLattice& cl) {
  auto max = maximal_congruences(cl);
  auto r = cl.index_of_nabla();
  for (auto m : max) r = cl.meet(r, m);
  return r;
}

bool is_local(const ConLattice& cl) {
  return cl.carrier_size() > 1 && maximal_congruences(cl).size() == 1;
}

bool is_semilocal(const ConLattice& cl) {
  return cl.carrier_size() > 1 && !maximal_congruences(cl).empty();
}

}  // namespace congrlab
