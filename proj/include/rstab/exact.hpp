#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "rstab/core.hpp"

namespace rstab::exact {

struct SearchBudget {
  std::size_t max_size = 0;
  std::optional<std::uint64_t> node_limit;
};

/// No stabbing set with at most `max_size` lines exists (including the case
/// where the instance is not stabbable at all).
struct NoSolutionWithin {
  std::size_t max_size = 0;
};

struct NodeLimitExceeded {
  std::uint64_t nodes = 0;
};

using ExactOutcome = std::variant<Solution, NoSolutionWithin, NodeLimitExceeded>;

struct ExactResult {
  ExactOutcome outcome;
  std::uint64_t nodes = 0;

  const Solution* solution() const { return std::get_if<Solution>(&outcome); }
};

/// Lines of the instance after merging lines that stab exactly the same
/// rectangles. The first line of each class in (axis, position) order is
/// kept; lines stabbing nothing are dropped.
std::vector<Line> distinct_lines(const Instance& inst);

/// Branch and bound for a minimum stabbing set. Branches on the unstabbed
/// rectangle with the fewest remaining candidate lines; bounds with the
/// one-dimensional optimum of the rectangles that only one axis can still
/// reach.
ExactResult opt_exact(const Instance& inst, const SearchBudget& budget);

/// Test oracle: enumerates subsets of distinct_lines() by size, in
/// lexicographic order, and returns the first one that stabs everything.
std::optional<Solution> brute_force(const Instance& inst, std::size_t max_size);

}  // namespace rstab::exact
