#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "congrlab/algebra.hpp"
#include "congrlab/spec_io.hpp"

namespace congrlab {

/// Names of the built-in lattices and residuated lattices, in registry order.
const std::vector<std::string>& fixture_names();

/// The spec each fixture is built from; identical to fixtures/<name>.json.
AlgebraSpec fixture_spec(std::string_view name);

/// Throws UnknownFixture.
FiniteAlgebra fixture(std::string_view name);

/// For fixtures drawn as an ordinal sum L (+) M, the names of L and M.
std::optional<std::pair<std::string, std::string>> ordinal_sum_summands(std::string_view name);

}  // namespace congrlab
