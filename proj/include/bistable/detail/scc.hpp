#pragma once

#include <cstddef>
#include <vector>

// Internal graph helpers shared by the matching and structure modules.

namespace bistable {
namespace detail {

// Tarjan with an explicit stack. Components are returned with members sorted
// ascending; the component order is the algorithm's completion order (callers
// that need a canonical order re-sort the condensation themselves).
std::vector<std::vector<std::size_t>> strongly_connected_components(
    const std::vector<std::vector<std::size_t>>& adjacency);

}  // namespace detail
}  // namespace bistable
