#include "gonal/fixtures.hpp"

#include <utility>

namespace gonal::fixtures {

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& embedded();
}

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& [name, text] : detail::embedded()) out.emplace_back(name);
  return out;
}

std::optional<std::string_view> builtin(std::string_view name) {
  for (const auto& [n, text] : detail::embedded())
    if (n == name) return text;
  return std::nullopt;
}

CoverParams example_params() { return CoverParams::make(13, 3, 3); }

}  // namespace gonal::fixtures
