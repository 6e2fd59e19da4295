#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace phase_ambiguity {

/// Minimum-cost perfect matching on a dense n×n cost matrix (row-major).
/// Returns, for every row, the column it is assigned to.
std::vector<std::size_t> solve_assignment(std::span<const double> cost, std::size_t n);

}  // namespace phase_ambiguity
