#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "congrlab/con_lattice.hpp"

namespace congrlab::cli {

/// Exit codes: 0 success or property holds, 1 property fails, 2 bad input.
inline constexpr int kHolds = 0;
inline constexpr int kFails = 1;
inline constexpr int kInputError = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Con(A), memoized under $CONGRLAB_CACHE when that variable is set. Cache
/// entries that do not match the algebra are recomputed and rewritten.
ConLattice cached_congruences(const FiniteAlgebra& algebra);

/// File name -> contents for every golden file (reports, tables and DOT
/// diagrams per fixture, plus the T x E product report).
std::map<std::string, std::string> golden_files();

}  // namespace congrlab::cli
