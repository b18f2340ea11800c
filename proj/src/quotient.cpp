#include "congrlab/quotient.hpp"

#include <algorithm>

#include "congrlab/error.hpp"

namespace congrlab {

QuotientResult quotient(const FiniteAlgebra& algebra, const Congruence& theta) {
  if (theta.parent() != algebra.fingerprint() || theta.size() != algebra.size()) {
    throw Error(ErrorKind::ParentMismatch, "congruence was not computed on " + algebra.name());
  }
  const auto n = algebra.size();
  std::vector<Element> projection(n);
  std::vector<Element> reps;
  std::vector<Element> index_of_rep(n, 0);
  for (Element e = 0; e < n; ++e) {
    if (theta.block_of(e) == e) {
      index_of_rep[e] = static_cast<Element>(reps.size());
      reps.push_back(e);
    }
    projection[e] = index_of_rep[theta.block_of(e)];
  }
  const auto m = reps.size();

  std::vector<std::string> labels(m);
  for (Element e = 0; e < n; ++e) {
    auto& l = labels[projection[e]];
    l += (l.empty() ? "" : "+") + algebra.label(e);
  }

  std::vector<OperationTable> tables;
  for (const auto& table : algebra.tables()) {
    const auto arity = table.arity();
    std::size_t cells = 1;
    for (std::size_t i = 0; i < arity; ++i) cells *= m;
    std::vector<Element> values(cells);
    std::vector<Element> args(arity);
    for (std::size_t cell = 0; cell < cells; ++cell) {
      auto rest = cell;
      for (std::size_t i = arity; i-- > 0;) {
        args[i] = reps[rest % m];
        rest /= m;
      }
      values[cell] = projection[table(args)];
    }
    tables.emplace_back(m, arity, std::move(values));
  }
  auto name = algebra.name() + "/" + format(algebra, theta);
  // Compatibility makes the induced tables well defined, and every identity
  // of A holds in A/theta, so the axiom scans can be skipped.
  return {FiniteAlgebra::trusted(std::move(name), std::move(labels), algebra.signature(),
                                 std::move(tables)),
          std::move(projection), std::move(reps), theta};
}

Congruence u_map(const QuotientResult& q, const Congruence& alpha) {
  const auto joined = join(alpha, q.theta);
  std::vector<std::size_t> cls(q.representatives.size());
  for (std::size_t i = 0; i < cls.size(); ++i) {
    cls[i] = q.projection[joined.block_of(q.representatives[i])];
  }
  return {Partition::from_class_ids(cls), q.quotient.fingerprint()};
}

Congruence s_inverse(const QuotientResult& q, const Congruence& beta) {
  if (beta.parent() != q.quotient.fingerprint() || beta.size() != q.quotient.size()) {
    throw Error(ErrorKind::ParentMismatch, "congruence does not belong to the quotient");
  }
  std::vector<std::size_t> cls(q.projection.size());
  for (std::size_t e = 0; e < cls.size(); ++e) cls[e] = beta.block_of(q.projection[e]);
  return {Partition::from_class_ids(cls), q.theta.parent()};
}

ConLattice quotient_congruences(const QuotientResult& q, const ConLattice& parent) {
  std::vector<Partition> image;
  for (const auto& alpha : parent.elements()) {
    if (q.theta.contained_in(alpha)) image.push_back(u_map(q, alpha).partition());
  }
  std::sort(image.begin(), image.end(), canonical_less);
  return ConLattice(q.quotient, std::move(image));
}

}  // namespace congrlab
