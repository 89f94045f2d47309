#include "rstab/generators.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "rstab/rng.hpp"

namespace rstab::gen {

namespace {

Coord clamp_to(Coord v, Coord range) { return std::clamp<Coord>(v, 0, range - 1); }

// Interval around `center` stretched by up to `spread` on each side.
Interval around(Rng& rng, Coord center, Coord spread, Coord range) {
  const Coord lo = center - rng.uniform(0, spread);
  const Coord hi = center + rng.uniform(0, spread);
  return {clamp_to(lo, range), clamp_to(hi, range)};
}

}  // namespace

PlantedInstance gen_planted(std::size_t k, std::size_t n, Coord coord_range,
                            std::uint64_t seed,
                            std::optional<std::size_t> distractors) {
  if (k == 0 || n == 0) throw std::invalid_argument("gen_planted needs k, n >= 1");
  if (coord_range < static_cast<Coord>(k)) {
    throw std::invalid_argument("coord_range must be at least k");
  }
  Rng rng(seed);
  std::set<Coord> used[2];
  std::vector<Line> witness;
  while (witness.size() < k) {
    const Axis axis = rng.bernoulli(1, 2) ? Axis::Vertical : Axis::Horizontal;
    auto& taken = used[static_cast<int>(axis)];
    if (taken.size() == static_cast<std::size_t>(coord_range)) continue;
    const Coord pos = rng.uniform(0, coord_range - 1);
    if (taken.insert(pos).second) witness.push_back({axis, pos});
  }

  const Coord spread = std::max<Coord>(1, coord_range / 10);
  std::vector<Rect> rects;
  rects.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Line& w = witness[static_cast<std::size_t>(
        rng.uniform(0, static_cast<std::int64_t>(k) - 1))];
    const Interval along = around(rng, w.pos, spread, coord_range);
    const Interval across =
        around(rng, rng.uniform(0, coord_range - 1), spread, coord_range);
    if (w.axis == Axis::Vertical) {
      rects.push_back({along.lo, along.hi, across.lo, across.hi});
    } else {
      rects.push_back({across.lo, across.hi, along.lo, along.hi});
    }
  }

  PlantedWitness pw;
  for (const Line& w : witness) {
    (w.axis == Axis::Vertical ? pw.vstar : pw.hstar).push_back(w.pos);
  }
  std::sort(pw.hstar.begin(), pw.hstar.end());
  std::sort(pw.vstar.begin(), pw.vstar.end());

  const std::size_t free_slots = 2 * static_cast<std::size_t>(coord_range) - k;
  std::size_t extra = distractors.value_or(2 * k);
  extra = std::min({extra, static_cast<std::size_t>(coord_range), free_slots});
  for (std::size_t added = 0; added < extra;) {
    const Axis axis = rng.bernoulli(1, 2) ? Axis::Vertical : Axis::Horizontal;
    if (used[static_cast<int>(axis)].insert(rng.uniform(0, coord_range - 1)).second) {
      ++added;
    }
  }
  std::vector<Coord> hs(used[static_cast<int>(Axis::Horizontal)].begin(),
                        used[static_cast<int>(Axis::Horizontal)].end());
  std::vector<Coord> vs(used[static_cast<int>(Axis::Vertical)].begin(),
                        used[static_cast<int>(Axis::Vertical)].end());
  return {Instance(std::move(rects), std::move(hs), std::move(vs)), std::move(pw)};
}

Instance gen_uniform(std::size_t n, std::size_t m_lines, Coord coord_range,
                     std::uint64_t seed) {
  if (coord_range < 1) throw std::invalid_argument("coord_range must be positive");
  Rng rng(seed);
  std::vector<Rect> rects;
  rects.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Coord a = rng.uniform(0, coord_range - 1), b = rng.uniform(0, coord_range - 1);
    Coord c = rng.uniform(0, coord_range - 1), d = rng.uniform(0, coord_range - 1);
    rects.push_back({std::min(a, b), std::max(a, b), std::min(c, d), std::max(c, d)});
  }
  std::vector<Coord> hs, vs;
  for (std::size_t i = 0; i < m_lines; ++i) {
    const bool vertical = rng.bernoulli(1, 2);
    (vertical ? vs : hs).push_back(rng.uniform(0, coord_range - 1));
  }
  return Instance(std::move(rects), std::move(hs), std::move(vs));
}

GeneratedGraph gen_mcgraph(std::size_t k, std::size_t r, std::uint64_t num,
                           std::uint64_t den, std::uint64_t seed, bool plant) {
  if (den == 0) throw std::invalid_argument("edge probability needs den > 0");
  GeneratedGraph out{reduction::MCGraph(k, r), std::nullopt};
  auto& g = out.graph;
  Rng rng(seed);
  std::vector<bool> in_clique(g.num_vertices(), false);
  if (plant) {
    reduction::MCClique c;
    for (std::size_t i = 1; i <= k; ++i) {
      const auto p = static_cast<std::size_t>(
          rng.uniform(1, static_cast<std::int64_t>(r)));
      c.chosen.push_back(p);
      in_clique[g.id(i, p)] = true;
    }
    out.clique = std::move(c);
  }
  for (std::size_t u = 0; u < g.num_vertices(); ++u) {
    for (std::size_t v = u + 1; v < g.num_vertices(); ++v) {
      if (u / r == v / r) continue;
      if ((in_clique[u] && in_clique[v]) || rng.bernoulli(num, den)) {
        g.add_edge(u, v);
      }
    }
  }
  return out;
}

Instance discretization_to_stabbing(const std::vector<ColoredPoint>& pts) {
  constexpr Coord kLimit = Coord{1} << 61;
  for (const auto& p : pts) {
    if (p.x > kLimit || p.x < -kLimit || p.y > kLimit || p.y < -kLimit) {
      throw std::overflow_error("point coordinate too large to double");
    }
  }
  auto range = [](Coord a, Coord b) -> Interval {
    if (a == b) return {2 * a, 2 * a};
    return {2 * std::min(a, b) + 1, 2 * std::max(a, b) - 1};
  };
  std::vector<Rect> rects;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const auto& p = pts[i];
      const auto& q = pts[j];
      if (p.color == q.color) continue;
      if (p.x == q.x && p.y == q.y) {
        throw CoincidentPoints("points " + std::to_string(i) + " and " +
                               std::to_string(j) +
                               " share a position but differ in color");
      }
      const Interval xs = range(p.x, q.x);
      const Interval ys = range(p.y, q.y);
      rects.push_back({xs.lo, xs.hi, ys.lo, ys.hi});
    }
  }
  std::vector<Coord> hs, vs;
  if (!pts.empty()) {
    auto [xmin, xmax] = std::minmax_element(
        pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.x < b.x; });
    auto [ymin, ymax] = std::minmax_element(
        pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.y < b.y; });
    for (Coord t = 2 * xmin->x + 1; t < 2 * xmax->x; t += 2) vs.push_back(t);
    for (Coord t = 2 * ymin->y + 1; t < 2 * ymax->y; t += 2) hs.push_back(t);
  }
  return Instance(std::move(rects), std::move(hs), std::move(vs));
}

}  // namespace rstab::gen
