#pragma once

#include <span>
#include <variant>
#include <vector>

#include "rstab/core.hpp"

namespace rstab {

/// No candidate point lies inside `witness`.
struct Infeasible {
  Interval witness;
};

using StabOutcome = std::variant<std::vector<Coord>, Infeasible>;

/// Minimum set of points hitting every interval. Intervals are scanned by
/// right endpoint; an unhit interval takes the largest point not exceeding
/// its right end. `points` must be sorted ascending. On failure the witness
/// is the first unhittable interval in scan order.
StabOutcome stab_1d(std::span<const Interval> intervals,
                    std::span<const Coord> points);

/// Stabs `rects` using only the instance's candidate lines of `axis`.
StabOutcome stab_axis(std::span<const Rect> rects, const Instance& inst,
                      Axis axis);

inline bool feasible(const StabOutcome& o) {
  return std::holds_alternative<std::vector<Coord>>(o);
}

}  // namespace rstab
