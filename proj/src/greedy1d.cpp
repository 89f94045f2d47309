#include "rstab/greedy1d.hpp"

#include <algorithm>
#include <numeric>

namespace rstab {

StabOutcome stab_1d(std::span<const Interval> intervals,
                    std::span<const Coord> points) {
  std::vector<std::size_t> order(intervals.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return intervals[a].hi < intervals[b].hi;
                   });

  std::vector<Coord> chosen;
  for (std::size_t idx : order) {
    const Interval& iv = intervals[idx];
    // Every chosen point is <= an earlier right end <= iv.hi.
    if (!chosen.empty() && chosen.back() >= iv.lo) continue;
    auto it = std::upper_bound(points.begin(), points.end(), iv.hi);
    if (it == points.begin() || *std::prev(it) < iv.lo) {
      return Infeasible{iv};
    }
    chosen.push_back(*std::prev(it));
  }
  return chosen;
}

StabOutcome stab_axis(std::span<const Rect> rects, const Instance& inst,
                      Axis axis) {
  std::vector<Interval> intervals;
  intervals.reserve(rects.size());
  for (const Rect& r : rects) intervals.push_back(r.span(axis));
  return stab_1d(intervals, inst.lines(axis));
}

}  // namespace rstab
