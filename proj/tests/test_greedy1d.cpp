#include "doctest.h"
#include "oracles.hpp"
#include "rstab/greedy1d.hpp"
#include "rstab/rng.hpp"

using namespace rstab;

namespace {

std::vector<Coord> points_of(const StabOutcome& o) {
  REQUIRE(feasible(o));
  return std::get<std::vector<Coord>>(o);
}

}  // namespace

TEST_SUITE("greedy1d") {

TEST_CASE("stab_1d examples") {
  std::vector<Interval> ivs{{0, 2}, {1, 3}, {5, 6}};
  std::vector<Coord> pts{0, 1, 2, 3, 4, 5, 6};
  CHECK(points_of(stab_1d(ivs, pts)) == std::vector<Coord>{2, 6});
  CHECK(oracle::min_interval_stab(ivs, pts) == 2u);

  CHECK(points_of(stab_1d({}, pts)).empty());

  std::vector<Interval> lone{{0, 1}};
  auto out = stab_1d(lone, std::vector<Coord>{5});
  REQUIRE_FALSE(feasible(out));
  CHECK(std::get<Infeasible>(out).witness == Interval{0, 1});
}

TEST_CASE("infeasible witness is the first failure in scan order") {
  std::vector<Interval> ivs{{10, 12}, {0, 1}, {4, 5}};
  auto out = stab_1d(ivs, std::vector<Coord>{11});
  REQUIRE_FALSE(feasible(out));
  CHECK(std::get<Infeasible>(out).witness == Interval{0, 1});
}

TEST_CASE("stab_axis examples") {
  Instance inst({{0, 1, 0, 9}, {0, 1, 20, 30}}, {}, {0, 1});
  CHECK(points_of(stab_axis(inst.rects(), inst, Axis::Vertical)) == std::vector<Coord>{1});
  CHECK(points_of(stab_axis({}, inst, Axis::Vertical)).empty());
  Instance far({{5, 6, 0, 0}}, {}, {0, 1});
  CHECK_FALSE(feasible(stab_axis(far.rects(), far, Axis::Vertical)));
  CHECK_FALSE(feasible(stab_axis(far.rects(), far, Axis::Horizontal)));
}

TEST_CASE("stab_1d is optimal against subset enumeration") {
  Rng rng(2024);
  for (int t = 0; t < 400; ++t) {
    std::vector<Interval> ivs;
    for (int i = rng.uniform(0, 10); i > 0; --i) {
      Coord a = rng.uniform(0, 20), b = rng.uniform(0, 20);
      ivs.push_back({std::min(a, b), std::max(a, b)});
    }
    std::vector<Coord> pts;
    for (int i = rng.uniform(0, 12); i > 0; --i) pts.push_back(rng.uniform(0, 20));
    normalize_positions(pts);
    auto out = stab_1d(ivs, pts);
    auto best = oracle::min_interval_stab(ivs, pts);
    REQUIRE(feasible(out) == best.has_value());
    if (!best) continue;
    auto chosen = points_of(out);
    CHECK(chosen.size() == *best);
    CHECK(std::is_sorted(chosen.begin(), chosen.end()));
    for (Coord c : chosen) CHECK(std::binary_search(pts.begin(), pts.end(), c));
    for (const auto& iv : ivs) {
      CHECK(std::any_of(chosen.begin(), chosen.end(), [&](Coord c) { return iv.contains(c); }));
    }
  }
}

TEST_CASE("adding intervals never lowers the optimum") {
  Rng rng(77);
  for (int t = 0; t < 200; ++t) {
    std::vector<Coord> pts;
    for (Coord p = 0; p <= 20; p += rng.uniform(1, 3)) pts.push_back(p);
    std::vector<Interval> ivs;
    std::size_t last = 0;
    for (int i = 0; i < 8; ++i) {
      Coord a = rng.uniform(0, 20);
      ivs.push_back({a, a + rng.uniform(0, 6)});
      auto out = stab_1d(ivs, pts);
      if (!feasible(out)) break;
      CHECK(points_of(out).size() >= last);
      last = points_of(out).size();
    }
  }
}

}  // TEST_SUITE
