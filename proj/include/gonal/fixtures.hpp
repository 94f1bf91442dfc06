#pragma once

// Generator-word fixtures compiled into the library from fixtures/*.gens:
// L1..L4 are maximal subgroups of Z_3^12 for (p, q, r) = (13, 3, 3) with
// cores of order 1, 3^3, 3^6, 3^9, and K2..K4 list generators of those cores.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gonal/params.hpp"

namespace gonal::fixtures {

std::vector<std::string> names();
std::optional<std::string_view> builtin(std::string_view name);
CoverParams example_params();

}  // namespace gonal::fixtures
