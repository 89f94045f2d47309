#include "rstab/reduction.hpp"

#include <algorithm>
#include <limits>

namespace rstab::reduction {

MCGraph::MCGraph(std::size_t k, std::size_t r)
    : k_(k), r_(r), adj_(k * r, std::vector<bool>(k * r, false)) {
  if (k == 0 || r == 0) {
    throw std::invalid_argument("MCGraph needs k >= 1 and r >= 1");
  }
}

std::size_t MCGraph::id(std::size_t part, std::size_t index) const {
  if (part < 1 || part > k_ || index < 1 || index > r_) {
    throw std::out_of_range("vertex (" + std::to_string(part) + "," +
                            std::to_string(index) + ") out of range");
  }
  return (part - 1) * r_ + (index - 1);
}

std::pair<std::size_t, std::size_t> MCGraph::part_of(std::size_t id) const {
  return {id / r_ + 1, id % r_ + 1};
}

void MCGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= num_vertices() || v >= num_vertices()) {
    throw std::invalid_argument("edge endpoint out of range");
  }
  if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
  adj_[u][v] = adj_[v][u] = true;
}

bool MCGraph::adjacent(std::size_t u, std::size_t v) const {
  return adj_.at(u).at(v);
}

std::vector<std::pair<std::size_t, std::size_t>> MCGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < num_vertices(); ++u) {
    for (std::size_t v = u + 1; v < num_vertices(); ++v) {
      if (adj_[u][v]) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t MCGraph::intra_part_edges() const {
  std::size_t n = 0;
  for (auto [u, v] : edges()) {
    if (u / r_ == v / r_) ++n;
  }
  return n;
}

std::size_t MCGraph::cross_part_non_edges() const {
  std::size_t n = 0;
  for (std::size_t u = 0; u < num_vertices(); ++u) {
    for (std::size_t v = u + 1; v < num_vertices(); ++v) {
      if (u / r_ != v / r_ && !adj_[u][v]) ++n;
    }
  }
  return n;
}

std::size_t MCClique::size() const {
  return static_cast<std::size_t>(
      std::count_if(chosen.begin(), chosen.end(),
                    [](const auto& c) { return c.has_value(); }));
}

bool is_multicolored_clique(const MCGraph& g, const MCClique& c) {
  if (c.chosen.size() != g.k()) return false;
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < g.k(); ++i) {
    if (!c.chosen[i]) continue;
    if (*c.chosen[i] < 1 || *c.chosen[i] > g.r()) return false;
    ids.push_back(g.id(i + 1, *c.chosen[i]));
  }
  for (std::size_t a = 0; a < ids.size(); ++a) {
    for (std::size_t b = a + 1; b < ids.size(); ++b) {
      if (!g.adjacent(ids[a], ids[b])) return false;
    }
  }
  return true;
}

Interval strip_range(std::size_t r, std::size_t x) {
  const auto base = static_cast<Coord>(2 * r + x * r);
  return {base + 1, base + static_cast<Coord>(r)};
}

ReducedInstance build(const MCGraph& g) {
  const std::size_t k = g.k();
  const std::size_t r = g.r();
  if (r < 2) {
    // With r = 1 the adjacency rectangles [2ir+p+1, 2ir+r+p-1] are empty.
    throw std::invalid_argument("reduction needs part size r >= 2");
  }
  const auto R = static_cast<Coord>(r);
  const auto K = static_cast<Coord>(k);

  std::vector<Interval> strips;
  for (std::size_t x = 0; x < 2 * k; ++x) strips.push_back(strip_range(r, x));

  std::vector<Rect> rects;
  // Force: every strip must carry a line of its own axis.
  for (const Interval& s : strips) {
    for (Coord q = -5 * K; q <= -1; ++q) {
      rects.push_back({s.lo, s.hi, q, q});
      rects.push_back({q, q, s.lo, s.hi});
    }
  }
  const std::size_t force = rects.size();

  // Adjacency: one rectangle per ordered cross-part non-edge.
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t j = 1; j <= k; ++j) {
      if (i == j) continue;
      for (std::size_t p = 1; p <= r; ++p) {
        for (std::size_t q = 1; q <= r; ++q) {
          if (g.adjacent(g.id(i, p), g.id(j, q))) continue;
          const Coord I = static_cast<Coord>(i), J = static_cast<Coord>(j);
          const Coord P = static_cast<Coord>(p), Q = static_cast<Coord>(q);
          rects.push_back({2 * I * R + P + 1, 2 * I * R + R + P - 1,
                           2 * J * R + Q + 1, 2 * J * R + R + Q - 1});
        }
      }
    }
  }
  const std::size_t adjacency = rects.size() - force;

  // Equality: staircases tying the four strips of a part together.
  for (std::size_t x = 0; x < 2 * k; ++x) {
    for (std::size_t y = 0; y < 2 * k; ++y) {
      if (x / 2 != y / 2) continue;
      const Coord bx = 2 * R + static_cast<Coord>(x) * R;
      const Coord by = 2 * R + static_cast<Coord>(y) * R;
      for (Coord a = 2; a <= R; ++a) {
        rects.push_back({bx + 1, bx + a - 1, by + a, by + R});
        rects.push_back({bx + a, bx + R, by + 1, by + a - 1});
      }
    }
  }
  const std::size_t equality = rects.size() - force - adjacency;

  std::vector<Coord> positions;
  for (const Interval& s : strips) {
    for (Coord t = s.lo; t <= s.hi; ++t) positions.push_back(t);
  }
  ReducedInstance red{Instance(std::move(rects), positions, positions), g,
                      std::move(strips), force, adjacency, equality};
  return red;
}

Solution forward(const ReducedInstance& red, const MCClique& clique) {
  if (clique.chosen.size() != red.k() || clique.size() != red.k()) {
    throw std::invalid_argument("forward needs one vertex in every part");
  }
  if (!is_multicolored_clique(red.graph, clique)) {
    throw std::invalid_argument("forward input is not a multicolored clique");
  }
  Solution sol;
  for (std::size_t i = 1; i <= red.k(); ++i) {
    const auto ri = static_cast<Coord>(*clique.chosen[i - 1]);
    for (std::size_t x : {2 * i - 2, 2 * i - 1}) {
      const Coord pos = strip_range(red.r(), x).lo - 1 + ri;
      sol.insert(Line::horizontal(pos));
      sol.insert(Line::vertical(pos));
    }
  }
  return sol;
}

namespace {

std::vector<Coord> lines_in(const std::vector<Coord>& sorted, const Interval& iv) {
  auto first = std::lower_bound(sorted.begin(), sorted.end(), iv.lo);
  auto last = std::upper_bound(first, sorted.end(), iv.hi);
  return {first, last};
}

}  // namespace

std::variant<MCClique, NotApplicable> reverse(const ReducedInstance& red,
                                              const Solution& sol,
                                              std::int64_t eps_num,
                                              std::int64_t eps_den) {
  if (eps_num <= 0 || eps_den <= 0) {
    throw std::invalid_argument("epsilon must be a positive fraction");
  }
  const auto k = static_cast<std::int64_t>(red.k());
  const auto n = static_cast<std::int64_t>(sol.size());
  // |sol| <= 5k - eps k, cleared of the denominator.
  if (n * eps_den > 5 * k * eps_den - eps_num * k) {
    return NotApplicable{"size bound: " + std::to_string(n) +
                         " lines exceed 5k - eps k"};
  }
  const auto report = verify(red.inst, sol);
  if (!report.unknown_lines.empty()) {
    return NotApplicable{"solution uses lines outside the instance"};
  }
  if (!report.unstabbed.empty()) {
    return NotApplicable{"solution does not stab every rectangle"};
  }

  const std::size_t r = red.r();
  MCClique clique;
  clique.chosen.assign(red.k(), std::nullopt);
  std::size_t kept = 0;
  for (std::size_t i = 1; i <= red.k(); ++i) {
    const Interval lo = red.strips.at(2 * i - 2);
    const Interval hi = red.strips.at(2 * i - 1);
    const auto v_minus = lines_in(sol.vlines(), lo);
    const auto v_plus = lines_in(sol.vlines(), hi);
    const auto h_minus = lines_in(sol.hlines(), lo);
    const auto h_plus = lines_in(sol.hlines(), hi);
    for (const auto* group : {&v_minus, &v_plus, &h_minus, &h_plus}) {
      if (group->empty()) {
        throw ExtractionError("strip of part " + std::to_string(i) +
                              " carries no line although the size bound holds");
      }
    }
    if (v_minus.size() != 1 || v_plus.size() != 1 || h_minus.size() != 1 ||
        h_plus.size() != 1) {
      continue;
    }
    const Coord offset = 2 * static_cast<Coord>(i * r);
    const Coord R = static_cast<Coord>(r);
    const Coord vm = v_minus[0] - offset;
    const Coord vp = v_plus[0] - offset - R;
    const Coord hm = h_minus[0] - offset;
    const Coord hp = h_plus[0] - offset - R;
    if (vm != vp || vm != hm || vm != hp) {
      throw ExtractionError("part " + std::to_string(i) +
                            " encodes different vertices in its four strips");
    }
    clique.chosen[i - 1] = static_cast<std::size_t>(vm);
    ++kept;
  }

  // ceil(eps_num * k / eps_den)
  const std::int64_t need = (eps_num * k + eps_den - 1) / eps_den;
  if (static_cast<std::int64_t>(kept) < need) {
    throw ExtractionError("only " + std::to_string(kept) +
                          " parts are encoded by exactly four lines");
  }
  if (!is_multicolored_clique(red.graph, clique)) {
    throw ExtractionError("extracted vertices are not pairwise adjacent");
  }
  return clique;
}

Instance make_nondegenerate(const Instance& inst) {
  constexpr Coord kMax = (std::numeric_limits<Coord>::max() - 1) / 2;
  constexpr Coord kMin = std::numeric_limits<Coord>::min() / 2;
  auto check = [](Coord c) {
    if (c > kMax || c < kMin) {
      throw std::overflow_error("coordinate " + std::to_string(c) +
                                " cannot be doubled");
    }
  };
  std::vector<Rect> rects;
  rects.reserve(inst.rects().size());
  for (const Rect& r : inst.rects()) {
    for (Coord c : {r.x1, r.x2, r.y1, r.y2}) check(c);
    rects.push_back({2 * r.x1, 2 * r.x2 + 1, 2 * r.y1, 2 * r.y2 + 1});
  }
  auto doubled = [&](const std::vector<Coord>& ls) {
    std::vector<Coord> out;
    out.reserve(2 * ls.size());
    for (Coord t : ls) {
      check(t);
      out.push_back(2 * t);
      out.push_back(2 * t + 1);
    }
    return out;
  };
  return Instance(std::move(rects), doubled(inst.hlines()),
                  doubled(inst.vlines()));
}

Coord halve(Coord t) { return t >> 1; }

Solution halve(const Solution& sol) {
  std::vector<Coord> hs, vs;
  for (Coord y : sol.hlines()) hs.push_back(halve(y));
  for (Coord x : sol.vlines()) vs.push_back(halve(x));
  return Solution(std::move(hs), std::move(vs));
}

}  // namespace rstab::reduction
