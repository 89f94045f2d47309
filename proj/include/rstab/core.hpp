#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

namespace rstab {

using Coord = std::int64_t;

/// Orientation of a line. A horizontal line sits at a y-coordinate and a
/// vertical line at an x-coordinate. A strip carries the axis of its bounding
/// lines, so a vertical strip is a slab (lo, hi) x R.
enum class Axis : std::uint8_t { Horizontal, Vertical };

constexpr Axis other(Axis a) {
  return a == Axis::Horizontal ? Axis::Vertical : Axis::Horizontal;
}

const char* to_string(Axis a);

/// Closed integer interval [lo, hi].
struct Interval {
  Coord lo = 0;
  Coord hi = 0;

  bool contains(Coord p) const { return lo <= p && p <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct Line {
  Axis axis = Axis::Horizontal;
  Coord pos = 0;

  static Line horizontal(Coord y) { return {Axis::Horizontal, y}; }
  static Line vertical(Coord x) { return {Axis::Vertical, x}; }

  friend bool operator==(const Line&, const Line&) = default;
  // Horizontal lines order before vertical ones; within an axis by position.
  friend auto operator<=>(const Line&, const Line&) = default;
};

/// Closed axis-parallel rectangle [x1, x2] x [y1, y2]. Degenerate extents
/// (x1 == x2 or y1 == y2) are allowed.
struct Rect {
  Coord x1 = 0;
  Coord x2 = 0;
  Coord y1 = 0;
  Coord y2 = 0;

  bool valid() const { return x1 <= x2 && y1 <= y2; }
  bool degenerate() const { return x1 == x2 || y1 == y2; }

  /// The interval a line of axis `a` has to hit: [x1, x2] for vertical lines,
  /// [y1, y2] for horizontal ones.
  Interval span(Axis a) const {
    return a == Axis::Vertical ? Interval{x1, x2} : Interval{y1, y2};
  }

  friend bool operator==(const Rect&, const Rect&) = default;
};

std::ostream& operator<<(std::ostream& os, const Rect& r);
std::ostream& operator<<(std::ostream& os, const Line& l);

bool stabs(const Line& line, const Rect& rect);

/// Sorts and removes duplicates in place.
void normalize_positions(std::vector<Coord>& positions);

/// Rectangles plus the candidate lines, split by axis. Line positions are
/// kept sorted and deduplicated; rectangle order is preserved.
class Instance {
 public:
  Instance() = default;
  /// Throws std::invalid_argument if a rectangle has x1 > x2 or y1 > y2.
  Instance(std::vector<Rect> rects, std::vector<Coord> hlines,
           std::vector<Coord> vlines);

  const std::vector<Rect>& rects() const { return rects_; }
  const std::vector<Coord>& hlines() const { return hlines_; }
  const std::vector<Coord>& vlines() const { return vlines_; }
  const std::vector<Coord>& lines(Axis a) const {
    return a == Axis::Horizontal ? hlines_ : vlines_;
  }
  std::size_t num_lines() const { return hlines_.size() + vlines_.size(); }
  bool has_line(const Line& l) const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::vector<Rect> rects_;
  std::vector<Coord> hlines_;
  std::vector<Coord> vlines_;
};

/// A chosen set of lines, kept sorted and deduplicated per axis.
class Solution {
 public:
  Solution() = default;
  Solution(std::vector<Coord> hlines, std::vector<Coord> vlines);

  const std::vector<Coord>& hlines() const { return hlines_; }
  const std::vector<Coord>& vlines() const { return vlines_; }
  const std::vector<Coord>& lines(Axis a) const {
    return a == Axis::Horizontal ? hlines_ : vlines_;
  }
  std::size_t size() const { return hlines_.size() + vlines_.size(); }
  bool empty() const { return size() == 0; }

  void insert(const Line& l);
  void insert(Axis a, std::span<const Coord> positions);
  void merge(const Solution& other);
  bool contains(const Line& l) const;
  bool stabs(const Rect& r) const;
  std::vector<Line> all_lines() const;

  friend bool operator==(const Solution&, const Solution&) = default;

 private:
  std::vector<Coord> hlines_;
  std::vector<Coord> vlines_;
};

struct VerifyReport {
  std::vector<Rect> unstabbed;       // input order
  std::vector<Line> unknown_lines;   // solution lines that are not candidates

  bool ok() const { return unstabbed.empty() && unknown_lines.empty(); }
};

VerifyReport verify(const Instance& inst, const Solution& sol);

/// Swaps the roles of x and y. Involution.
Rect transpose(const Rect& r);
Instance transpose(const Instance& inst);
Solution transpose(const Solution& sol);

/// Open region strictly between two parallel lines; an absent bound is
/// infinite.
struct Strip {
  Axis axis = Axis::Vertical;
  std::optional<Coord> lo;
  std::optional<Coord> hi;

  bool contains(Coord pos) const {
    return (!lo || *lo < pos) && (!hi || pos < *hi);
  }
  /// True iff the closed interval meets the open range (lo, hi).
  bool meets(const Interval& iv) const {
    return (!lo || iv.hi > *lo) && (!hi || iv.lo < *hi);
  }
  /// Length of the closed interval clipped to the strip, or -1 if disjoint.
  /// Unbounded sides clip to the interval itself.
  Coord clipped_width(const Interval& iv) const;

  friend bool operator==(const Strip&, const Strip&) = default;
};

std::ostream& operator<<(std::ostream& os, const Strip& s);

/// The |positions| + 1 strips cut out by lines at the given strictly
/// increasing positions, bottom/left first.
std::vector<Strip> strips_of(Axis axis, std::span<const Coord> positions);

bool strip_contains(const Strip& strip, const Line& line);
bool rect_meets_strip(const Strip& strip, const Rect& rect);

/// Candidate positions strictly inside the strip (a contiguous run of the
/// sorted input).
std::span<const Coord> positions_inside(const Strip& strip,
                                        std::span<const Coord> sorted);

/// Every pair of strips has a line strictly between them and no line lies
/// inside a strip. Strips must be pairwise disjoint and share one axis.
bool is_separated(std::span<const Strip> strips,
                  std::span<const Coord> lines);

}  // namespace rstab
