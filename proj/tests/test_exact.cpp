#include "doctest.h"
#include "oracles.hpp"
#include "rstab/exact.hpp"
#include "rstab/generators.hpp"
#include "rstab/rng.hpp"

using namespace rstab;
using namespace rstab::exact;

TEST_SUITE("exact") {

TEST_CASE("empty instance has optimum zero") {
  auto r = opt_exact(Instance({}, {1}, {2}), {0, {}});
  REQUIRE(r.solution());
  CHECK(r.solution()->empty());
  CHECK(brute_force(Instance(), 0)->empty());
}

TEST_CASE("two rectangles sharing no line need two") {
  Instance inst({{0, 0, 0, 0}, {5, 5, 5, 5}}, {0, 5}, {0, 5});
  auto r = opt_exact(inst, {3, {}});
  REQUIRE(r.solution());
  CHECK(r.solution()->size() == 2);
  for (const Line& l : r.solution()->all_lines()) {
    Solution less;
    for (const Line& m : r.solution()->all_lines()) {
      if (!(m == l)) less.insert(m);
    }
    CHECK_FALSE(verify(inst, less).ok());
  }
  CHECK(std::holds_alternative<NoSolutionWithin>(opt_exact(inst, {1, {}}).outcome));
}

TEST_CASE("one rectangle, one line") {
  Instance inst({{0, 2, 0, 2}}, {}, {1});
  CHECK(*brute_force(inst, 1) == Solution({}, {1}));
  CHECK(*opt_exact(inst, {1, {}}).solution() == Solution({}, {1}));
}

TEST_CASE("infeasible instances report NoSolutionWithin") {
  Instance inst({{0, 0, 0, 0}}, {5}, {5});
  CHECK(std::holds_alternative<NoSolutionWithin>(opt_exact(inst, {4, {}}).outcome));
  CHECK_FALSE(brute_force(inst, 4));
}

TEST_CASE("distinct_lines merges lines with equal stabbed sets") {
  Instance inst({{0, 3, 10, 10}, {5, 6, 11, 11}}, {10, 11, 50}, {0, 1, 2, 5, 9});
  auto lines = distinct_lines(inst);
  // y=10 and x=0,1,2 stab rect 0 only, y=11 and x=5 stab rect 1 only.
  CHECK(lines == std::vector<Line>{Line::horizontal(10), Line::horizontal(11)});
}

TEST_CASE("node limit is distinct from an exhausted budget") {
  auto p = gen::gen_planted(4, 40, 30, 17, 10);
  auto r = opt_exact(p.inst, {4, 1});
  CHECK(std::holds_alternative<NodeLimitExceeded>(r.outcome));
}

TEST_CASE("branch and bound agrees with brute force and the raw oracle") {
  Rng rng(606);
  for (int t = 0; t < 300; ++t) {
    auto inst = gen::gen_uniform(rng.uniform(0, 12), rng.uniform(0, 10), 15, rng.next());
    auto bb = opt_exact(inst, {10, {}});
    auto bf = brute_force(inst, 10);
    auto raw = oracle::min_stab(inst, 10);
    REQUIRE(bf.has_value() == raw.has_value());
    REQUIRE((bb.solution() != nullptr) == raw.has_value());
    if (!raw) continue;
    CHECK(bb.solution()->size() == *raw);
    CHECK(bf->size() == *raw);
    CHECK(verify(inst, *bb.solution()).ok());
    CHECK(verify(inst, *bf).ok());
    if (*raw > 0) CHECK_FALSE(brute_force(inst, *raw - 1));
  }
}

TEST_CASE("branch and bound on planted instances stays within the witness") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t k = 1 + seed % 4;
    auto p = gen::gen_planted(k, 20, 30, seed);
    auto r = opt_exact(p.inst, {k, {}});
    REQUIRE(r.solution());
    CHECK(r.solution()->size() <= k);
    CHECK(verify(p.inst, *r.solution()).ok());
  }
}

}  // TEST_SUITE
