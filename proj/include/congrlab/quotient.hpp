#pragma once

#include <vector>

#include "congrlab/algebra.hpp"
#include "congrlab/con_lattice.hpp"
#include "congrlab/congruence.hpp"

namespace congrlab {

/// A/theta with the canonical projection. Quotient element i stands for the
/// block whose smallest member is representatives[i]; its label joins the
/// block's labels with "+".
struct QuotientResult {
  FiniteAlgebra quotient;
  std::vector<Element> projection;
  std::vector<Element> representatives;
  Congruence theta;
};

/// Throws ParentMismatch if theta was not computed on `algebra`.
QuotientResult quotient(const FiniteAlgebra& algebra, const Congruence& theta);

/// u(alpha) = (alpha v theta)/theta, a congruence of A/theta.
Congruence u_map(const QuotientResult& q, const Congruence& alpha);

/// s(beta) = p^-1(beta), the congruence of A pulled back along p.
Congruence s_inverse(const QuotientResult& q, const Congruence& beta);

/// Con(A/theta) as the image of the interval [theta) of `parent` under u.
/// Avoids recomputing closures; agrees with all_congruences(q.quotient).
ConLattice quotient_congruences(const QuotientResult& q, const ConLattice& parent);

}  // namespace congrlab
