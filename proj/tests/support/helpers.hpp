#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "congrlab/algebra.hpp"
#include "congrlab/con_lattice.hpp"
#include "congrlab/congruence.hpp"
#include "congrlab/fixtures.hpp"

namespace congrlab::testing {

inline Element el(const FiniteAlgebra& a, std::string_view label) {
  auto e = a.element(label);
  if (!e) throw std::runtime_error("no element " + std::string(label));
  return *e;
}

inline Congruence cong(const FiniteAlgebra& a, std::string_view blocks) {
  return parse_congruence(a, blocks);
}

inline std::vector<std::string> formatted(const FiniteAlgebra& a, const ConLattice& cl) {
  std::vector<std::string> out;
  for (const auto& theta : cl.elements()) out.push_back(format(a, theta));
  return out;
}

}  // namespace congrlab::testing
