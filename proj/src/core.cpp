#include "rstab/core.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rstab {

const char* to_string(Axis a) {
  return a == Axis::Horizontal ? "horizontal" : "vertical";
}

std::ostream& operator<<(std::ostream& os, const Rect& r) {
  return os << '[' << r.x1 << ',' << r.x2 << "]x[" << r.y1 << ',' << r.y2
            << ']';
}

std::ostream& operator<<(std::ostream& os, const Line& l) {
  return os << (l.axis == Axis::Horizontal ? "y=" : "x=") << l.pos;
}

std::ostream& operator<<(std::ostream& os, const Strip& s) {
  os << (s.axis == Axis::Horizontal ? "h(" : "v(");
  if (s.lo) {
    os << *s.lo;
  } else {
    os << "-inf";
  }
  os << ',';
  if (s.hi) {
    os << *s.hi;
  } else {
    os << "+inf";
  }
  return os << ')';
}

bool stabs(const Line& line, const Rect& rect) {
  return rect.span(line.axis).contains(line.pos);
}

void normalize_positions(std::vector<Coord>& positions) {
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()),
                  positions.end());
}

Instance::Instance(std::vector<Rect> rects, std::vector<Coord> hlines,
                   std::vector<Coord> vlines)
    : rects_(std::move(rects)),
      hlines_(std::move(hlines)),
      vlines_(std::move(vlines)) {
  for (std::size_t i = 0; i < rects_.size(); ++i) {
    if (!rects_[i].valid()) {
      throw std::invalid_argument("rectangle " + std::to_string(i) +
                                  " has inverted bounds");
    }
  }
  normalize_positions(hlines_);
  normalize_positions(vlines_);
}

bool Instance::has_line(const Line& l) const {
  const auto& ls = lines(l.axis);
  return std::binary_search(ls.begin(), ls.end(), l.pos);
}

Solution::Solution(std::vector<Coord> hlines, std::vector<Coord> vlines)
    : hlines_(std::move(hlines)), vlines_(std::move(vlines)) {
  normalize_positions(hlines_);
  normalize_positions(vlines_);
}

void Solution::insert(const Line& l) {
  auto& ls = l.axis == Axis::Horizontal ? hlines_ : vlines_;
  auto it = std::lower_bound(ls.begin(), ls.end(), l.pos);
  if (it == ls.end() || *it != l.pos) ls.insert(it, l.pos);
}

void Solution::insert(Axis a, std::span<const Coord> positions) {
  auto& ls = a == Axis::Horizontal ? hlines_ : vlines_;
  ls.insert(ls.end(), positions.begin(), positions.end());
  normalize_positions(ls);
}

void Solution::merge(const Solution& other) {
  insert(Axis::Horizontal, other.hlines_);
  insert(Axis::Vertical, other.vlines_);
}

bool Solution::contains(const Line& l) const {
  const auto& ls = lines(l.axis);
  return std::binary_search(ls.begin(), ls.end(), l.pos);
}

namespace {

bool any_inside(const std::vector<Coord>& sorted, const Interval& iv) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), iv.lo);
  return it != sorted.end() && *it <= iv.hi;
}

}  // namespace

bool Solution::stabs(const Rect& r) const {
  return any_inside(hlines_, r.span(Axis::Horizontal)) ||
         any_inside(vlines_, r.span(Axis::Vertical));
}

std::vector<Line> Solution::all_lines() const {
  std::vector<Line> out;
  out.reserve(size());
  for (Coord y : hlines_) out.push_back(Line::horizontal(y));
  for (Coord x : vlines_) out.push_back(Line::vertical(x));
  return out;
}

VerifyReport verify(const Instance& inst, const Solution& sol) {
  VerifyReport report;
  for (const Line& l : sol.all_lines()) {
    if (!inst.has_line(l)) report.unknown_lines.push_back(l);
  }
  for (const Rect& r : inst.rects()) {
    if (!sol.stabs(r)) report.unstabbed.push_back(r);
  }
  return report;
}

Rect transpose(const Rect& r) { return Rect{r.y1, r.y2, r.x1, r.x2}; }

Instance transpose(const Instance& inst) {
  std::vector<Rect> rects;
  rects.reserve(inst.rects().size());
  for (const Rect& r : inst.rects()) rects.push_back(transpose(r));
  return Instance(std::move(rects), inst.vlines(), inst.hlines());
}

Solution transpose(const Solution& sol) {
  return Solution(sol.vlines(), sol.hlines());
}

Coord Strip::clipped_width(const Interval& iv) const {
  if (!meets(iv)) return -1;
  Coord left = lo ? std::max(iv.lo, *lo) : iv.lo;
  Coord right = hi ? std::min(iv.hi, *hi) : iv.hi;
  return right - left;
}

std::vector<Strip> strips_of(Axis axis, std::span<const Coord> positions) {
  std::vector<Strip> out;
  out.reserve(positions.size() + 1);
  std::optional<Coord> prev;
  for (Coord p : positions) {
    out.push_back(Strip{axis, prev, p});
    prev = p;
  }
  out.push_back(Strip{axis, prev, std::nullopt});
  return out;
}

bool strip_contains(const Strip& strip, const Line& line) {
  return strip.axis == line.axis && strip.contains(line.pos);
}

bool rect_meets_strip(const Strip& strip, const Rect& rect) {
  return strip.meets(rect.span(strip.axis));
}

std::span<const Coord> positions_inside(const Strip& strip,
                                        std::span<const Coord> sorted) {
  auto first = strip.lo ? std::upper_bound(sorted.begin(), sorted.end(), *strip.lo)
                        : sorted.begin();
  auto last = strip.hi ? std::lower_bound(first, sorted.end(), *strip.hi)
                       : sorted.end();
  return {first, last};
}

bool is_separated(std::span<const Strip> strips,
                  std::span<const Coord> lines) {
  for (const Strip& s : strips) {
    for (Coord l : lines) {
      if (s.contains(l)) return false;
    }
  }
  for (std::size_t i = 0; i < strips.size(); ++i) {
    for (std::size_t j = 0; j < strips.size(); ++j) {
      if (i == j) continue;
      const Strip& a = strips[i];
      const Strip& b = strips[j];
      // a lies below b: a.hi <= b.lo.
      if (!a.hi || !b.lo || *a.hi > *b.lo) continue;
      bool found = false;
      for (Coord l : lines) {
        if (*a.hi <= l && l <= *b.lo) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

}  // namespace rstab
