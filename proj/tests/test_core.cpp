#include "doctest.h"
#include "oracles.hpp"
#include "rstab/core.hpp"
#include "rstab/generators.hpp"
#include "rstab/rng.hpp"

using namespace rstab;

TEST_SUITE("core") {

TEST_CASE("stabs treats rectangles as closed") {
  CHECK(stabs(Line::vertical(0), Rect{0, 1, 0, 1}));
  CHECK_FALSE(stabs(Line::horizontal(5), Rect{0, 1, 0, 1}));
  CHECK(stabs(Line::vertical(3), Rect{3, 3, 2, 8}));
  CHECK(stabs(Line::horizontal(1), Rect{0, 1, 0, 1}));
  CHECK_FALSE(stabs(Line::vertical(2), Rect{0, 1, 0, 9}));
}

TEST_CASE("stabs is monotone under enlargement") {
  Rng rng(11);
  for (int t = 0; t < 500; ++t) {
    Rect r{rng.uniform(0, 10), 0, rng.uniform(0, 10), 0};
    r.x2 = r.x1 + rng.uniform(0, 5);
    r.y2 = r.y1 + rng.uniform(0, 5);
    Rect big{r.x1 - rng.uniform(0, 3), r.x2 + rng.uniform(0, 3),
             r.y1 - rng.uniform(0, 3), r.y2 + rng.uniform(0, 3)};
    Line l{rng.bernoulli(1, 2) ? Axis::Vertical : Axis::Horizontal, rng.uniform(-2, 17)};
    if (stabs(l, r)) CHECK(stabs(l, big));
  }
}

TEST_CASE("instance rejects inverted rectangles and normalizes lines") {
  CHECK_THROWS_AS(Instance({{2, 1, 0, 0}}, {}, {}), std::invalid_argument);
  Instance inst({{0, 1, 0, 1}, {0, 1, 0, 1}}, {3, 1, 3}, {2, 2});
  CHECK(inst.hlines() == std::vector<Coord>{1, 3});
  CHECK(inst.vlines() == std::vector<Coord>{2});
  CHECK(inst.rects().size() == 2);  // duplicates kept
  CHECK(inst.has_line(Line::horizontal(3)));
  CHECK_FALSE(inst.has_line(Line::vertical(3)));
}

TEST_CASE("verify examples") {
  Instance one({{0, 1, 0, 1}}, {}, {0});
  CHECK(verify(one, Solution({}, {0})).ok());

  Instance two({{0, 1, 0, 1}, {5, 6, 5, 6}}, {}, {0, 5});
  auto rep = verify(two, Solution({}, {0}));
  REQUIRE(rep.unstabbed.size() == 1);
  CHECK(rep.unstabbed[0] == Rect{5, 6, 5, 6});

  CHECK(verify(Instance(), Solution()).ok());
}

TEST_CASE("verify reports lines that are not candidates") {
  Instance inst({{0, 1, 0, 1}}, {}, {0});
  auto rep = verify(inst, Solution({0}, {}));
  CHECK(rep.unstabbed.empty());
  REQUIRE(rep.unknown_lines.size() == 1);
  CHECK(rep.unknown_lines[0] == Line::horizontal(0));
  CHECK_FALSE(rep.ok());
}

TEST_CASE("verify agrees with a naive double loop") {
  Rng rng(5);
  for (int t = 0; t < 300; ++t) {
    auto inst = gen::gen_uniform(rng.uniform(0, 12), rng.uniform(0, 10), 20, rng.next());
    std::vector<Coord> hs, vs;
    for (Coord y : inst.hlines()) if (rng.bernoulli(1, 2)) hs.push_back(y);
    for (Coord x : inst.vlines()) if (rng.bernoulli(1, 2)) vs.push_back(x);
    Solution sol(hs, vs);
    CHECK(verify(inst, sol).unstabbed == oracle::unstabbed(inst, sol));
  }
}

TEST_CASE("transpose") {
  CHECK(transpose(Rect{1, 2, 3, 4}) == Rect{3, 4, 1, 2});
  Rng rng(8);
  for (int t = 0; t < 200; ++t) {
    auto inst = gen::gen_uniform(rng.uniform(0, 10), rng.uniform(0, 10), 15, rng.next());
    CHECK(transpose(transpose(inst)) == inst);
    CHECK(transpose(inst).hlines() == inst.vlines());
    std::vector<Coord> hs, vs;
    for (Coord y : inst.hlines()) if (rng.bernoulli(1, 2)) hs.push_back(y);
    for (Coord x : inst.vlines()) if (rng.bernoulli(1, 2)) vs.push_back(x);
    Solution sol(hs, vs);
    CHECK(verify(inst, sol).ok() == verify(transpose(inst), transpose(sol)).ok());
  }
}

TEST_CASE("solution keeps lines sorted and unique") {
  Solution s;
  s.insert(Line::vertical(4));
  s.insert(Line::vertical(1));
  s.insert(Line::vertical(4));
  s.insert(Line::horizontal(2));
  CHECK(s.vlines() == std::vector<Coord>{1, 4});
  CHECK(s.size() == 3);
  CHECK(s.contains(Line::horizontal(2)));
  CHECK_FALSE(s.contains(Line::horizontal(4)));
  auto all = s.all_lines();
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(all.front() == Line::horizontal(2));
}

TEST_CASE("strips_of examples") {
  auto none = strips_of(Axis::Vertical, std::vector<Coord>{});
  REQUIRE(none.size() == 1);
  CHECK_FALSE(none[0].lo.has_value());
  CHECK_FALSE(none[0].hi.has_value());

  std::vector<Coord> pos{0, 5};
  auto s = strips_of(Axis::Vertical, pos);
  REQUIRE(s.size() == 3);
  CHECK(s[0] == Strip{Axis::Vertical, std::nullopt, 0});
  CHECK(s[1] == Strip{Axis::Vertical, 0, 5});
  CHECK(s[2] == Strip{Axis::Vertical, 5, std::nullopt});
}

TEST_CASE("strips are disjoint, cover the gaps and contain no line") {
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    std::vector<Coord> pos;
    for (int i = rng.uniform(0, 6); i > 0; --i) pos.push_back(rng.uniform(-10, 10));
    normalize_positions(pos);
    auto strips = strips_of(Axis::Horizontal, pos);
    CHECK(strips.size() == pos.size() + 1);
    for (Coord p = -12; p <= 12; ++p) {
      int inside = 0;
      for (const auto& s : strips) inside += s.contains(p) ? 1 : 0;
      bool is_line = std::binary_search(pos.begin(), pos.end(), p);
      CHECK(inside == (is_line ? 0 : 1));
      for (const auto& s : strips) {
        if (is_line) CHECK_FALSE(strip_contains(s, Line::horizontal(p)));
      }
    }
  }
}

TEST_CASE("open strip membership") {
  Strip s{Axis::Vertical, 0, 5};
  CHECK_FALSE(strip_contains(s, Line::vertical(5)));
  CHECK(strip_contains(s, Line::vertical(4)));
  CHECK_FALSE(strip_contains(s, Line::horizontal(3)));
  CHECK_FALSE(rect_meets_strip(s, Rect{5, 9, 0, 0}));
  CHECK(rect_meets_strip(s, Rect{3, 9, 0, 0}));
  CHECK(s.clipped_width({3, 9}) == 2);
  CHECK(s.clipped_width({5, 9}) == -1);
  Strip h{Axis::Horizontal, std::nullopt, 2};
  CHECK(rect_meets_strip(h, Rect{100, 200, -50, 1}));
  CHECK_FALSE(rect_meets_strip(h, Rect{0, 0, 2, 3}));
}

TEST_CASE("positions_inside and is_separated") {
  std::vector<Coord> cand{1, 3, 5, 7, 9};
  auto in = positions_inside(Strip{Axis::Vertical, 3, 9}, cand);
  CHECK(std::vector<Coord>(in.begin(), in.end()) == std::vector<Coord>{5, 7});
  auto all = positions_inside(Strip{Axis::Vertical, std::nullopt, std::nullopt}, cand);
  CHECK(all.size() == 5);

  std::vector<Strip> two{{Axis::Vertical, std::nullopt, 0}, {Axis::Vertical, 5, std::nullopt}};
  CHECK(is_separated(two, std::vector<Coord>{0}));
  CHECK(is_separated(two, std::vector<Coord>{5}));
  CHECK_FALSE(is_separated(two, std::vector<Coord>{}));
  std::vector<Strip> one{{Axis::Vertical, 0, 5}};
  CHECK_FALSE(is_separated(one, std::vector<Coord>{3}));
  CHECK(is_separated(one, std::vector<Coord>{}));
}

}  // TEST_SUITE
