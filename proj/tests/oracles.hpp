#pragma once

// Brute-force reference implementations. They share no code with the
// library beyond the plain data types.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "rstab/core.hpp"
#include "rstab/generators.hpp"
#include "rstab/reduction.hpp"
#include "rstab/twosat.hpp"

namespace oracle {

using rstab::Coord;
using rstab::Instance;
using rstab::Interval;
using rstab::Rect;

struct RawLine {
  bool vertical;
  Coord pos;
};

inline bool hits(const RawLine& l, const Rect& r) {
  return l.vertical ? (r.x1 <= l.pos && l.pos <= r.x2)
                    : (r.y1 <= l.pos && l.pos <= r.y2);
}

inline std::vector<RawLine> raw_lines(const Instance& inst) {
  std::vector<RawLine> out;
  for (Coord y : inst.hlines()) out.push_back({false, y});
  for (Coord x : inst.vlines()) out.push_back({true, x});
  return out;
}

inline std::vector<RawLine> raw_lines(const rstab::Solution& sol) {
  std::vector<RawLine> out;
  for (Coord y : sol.hlines()) out.push_back({false, y});
  for (Coord x : sol.vlines()) out.push_back({true, x});
  return out;
}

inline std::vector<Rect> unstabbed(const Instance& inst,
                                   const rstab::Solution& sol) {
  std::vector<Rect> out;
  const auto lines = raw_lines(sol);
  for (const Rect& r : inst.rects()) {
    bool hit = false;
    for (const auto& l : lines) hit = hit || hits(l, r);
    if (!hit) out.push_back(r);
  }
  return out;
}

/// Minimum number of points hitting every interval, over all point subsets.
inline std::optional<std::size_t> min_interval_stab(
    const std::vector<Interval>& ivs, const std::vector<Coord>& pts) {
  std::optional<std::size_t> best;
  const std::uint32_t n = static_cast<std::uint32_t>(pts.size());
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (const auto& iv : ivs) {
      bool hit = false;
      for (std::uint32_t i = 0; i < n; ++i) {
        if ((mask >> i & 1u) && iv.lo <= pts[i] && pts[i] <= iv.hi) hit = true;
      }
      if (!hit) {
        ok = false;
        break;
      }
    }
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (ok && (!best || size < *best)) best = size;
  }
  return best;
}

inline bool truth_table_sat(const rstab::twosat::Formula& f) {
  const std::uint32_t n = f.num_vars();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    auto val = [&](const rstab::twosat::Lit& l) {
      return static_cast<bool>(mask >> l.var & 1u) != l.negated;
    };
    bool ok = true;
    for (const auto& [a, b] : f.clauses()) {
      if (!val(a) && !val(b)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

/// Visits every k-subset of {0..n-1} in lexicographic order; stops when the
/// visitor returns true and reports that.
template <class F>
bool any_combination(std::size_t n, std::size_t k, F&& visit) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (visit(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Minimum stabbing size over subsets of the raw (non-deduplicated) line
/// set, up to `cap` lines.
inline std::optional<std::size_t> min_stab(const Instance& inst,
                                           std::size_t cap) {
  const auto lines = raw_lines(inst);
  const auto& rects = inst.rects();
  for (std::size_t size = 0; size <= std::min(cap, lines.size()); ++size) {
    const bool found = any_combination(lines.size(), size, [&](const auto& idx) {
      return std::all_of(rects.begin(), rects.end(), [&](const Rect& r) {
        return std::any_of(idx.begin(), idx.end(),
                           [&](std::size_t i) { return hits(lines[i], r); });
      });
    });
    if (found) return size;
  }
  return std::nullopt;
}

/// Some multicolored clique of size k, by trying all r^k tuples.
inline std::optional<rstab::reduction::MCClique> find_mc_clique(
    const rstab::reduction::MCGraph& g) {
  const std::size_t k = g.k(), r = g.r();
  std::vector<std::size_t> pick(k, 1);
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      for (std::size_t j = i + 1; j < k && ok; ++j) {
        const std::size_t u = i * r + (pick[i] - 1);
        const std::size_t v = j * r + (pick[j] - 1);
        ok = g.adjacent(u, v);
      }
    }
    if (ok) {
      rstab::reduction::MCClique c;
      for (std::size_t p : pick) c.chosen.push_back(p);
      return c;
    }
    std::size_t i = 0;
    while (i < k && pick[i] == r) pick[i++] = 1;
    if (i == k) return std::nullopt;
    ++pick[i];
  }
}

/// Fewest axis-parallel cuts (at half-integer positions) separating every
/// pair of differently colored points; nullopt if two such points coincide.
inline std::optional<std::size_t> min_separating_cuts(
    const std::vector<rstab::gen::ColoredPoint>& pts) {
  struct Cut {
    bool vertical;
    Coord twice;  // cut position times two (always odd)
  };
  std::vector<Cut> cuts;
  if (pts.empty()) return 0;
  Coord xmin = pts[0].x, xmax = pts[0].x, ymin = pts[0].y, ymax = pts[0].y;
  for (const auto& p : pts) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  for (Coord x = xmin; x < xmax; ++x) cuts.push_back({true, 2 * x + 1});
  for (Coord y = ymin; y < ymax; ++y) cuts.push_back({false, 2 * y + 1});

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[i].color == pts[j].color) continue;
      if (pts[i].x == pts[j].x && pts[i].y == pts[j].y) return std::nullopt;
      pairs.emplace_back(i, j);
    }
  }
  auto separates = [&](const Cut& c, const auto& p, const auto& q) {
    const Coord a = c.vertical ? 2 * p.x : 2 * p.y;
    const Coord b = c.vertical ? 2 * q.x : 2 * q.y;
    return std::min(a, b) < c.twice && c.twice < std::max(a, b);
  };
  for (std::size_t size = 0; size <= cuts.size(); ++size) {
    const bool found = any_combination(cuts.size(), size, [&](const auto& idx) {
      for (auto [i, j] : pairs) {
        bool sep = false;
        for (std::size_t c : idx) sep = sep || separates(cuts[c], pts[i], pts[j]);
        if (!sep) return false;
      }
      return true;
    });
    if (found) return size;
  }
  return std::nullopt;
}

}  // namespace oracle
