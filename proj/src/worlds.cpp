#include "tqbc/worlds.hpp"

namespace tqbc {

std::vector<WorldSet> all_subsets(std::size_t universe, bool include_empty) {
  std::vector<WorldSet> out;
  const std::uint64_t limit = std::uint64_t{1} << universe;
  out.reserve(limit);
  for (std::uint64_t bits = include_empty ? 0 : 1; bits < limit; ++bits) {
    out.emplace_back(universe, static_cast<std::uint32_t>(bits));
  }
  return out;
}

}  // namespace tqbc
