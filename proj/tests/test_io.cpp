#include <filesystem>

#include "doctest.h"
#include "rstab/generators.hpp"
#include "rstab/io.hpp"
#include "rstab/reduction.hpp"

using namespace rstab;
using io::Json;

TEST_SUITE("io") {

TEST_CASE("instance round trip keeps rectangle order") {
  Instance inst({{5, 6, 0, 0}, {0, 1, 2, 3}, {0, 1, 2, 3}}, {3, 1}, {0});
  Json j = io::to_json(inst);
  CHECK(io::dump(j) == "{\"rects\":[[5,6,0,0],[0,1,2,3],[0,1,2,3]],\"hlines\":[1,3],\"vlines\":[0]}\n");
  CHECK(io::instance_from_json(j) == inst);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto p = gen::gen_planted(3, 15, 50, seed);
    CHECK(io::instance_from_json(Json::parse(io::dump(io::to_json(p.inst)))) == p.inst);
  }
}

TEST_CASE("solution and witness round trips") {
  Solution s({4, -2}, {7});
  CHECK(io::solution_from_json(io::to_json(s)) == s);
  gen::PlantedWitness w{{9, 1}, {3}};
  CHECK(io::dump(io::to_json(w)) == "{\"hstar\":[1,9],\"vstar\":[3]}\n");
  // Witness files use their own keys.
  CHECK_THROWS_AS(io::solution_from_json(io::to_json(w)), io::ParseError);
}

TEST_CASE("graph and clique round trips") {
  auto g = gen::gen_mcgraph(3, 2, 1, 2, 5, true);
  auto back = io::graph_from_json(io::to_json(g.graph));
  CHECK(back.k() == 3);
  CHECK(back.r() == 2);
  CHECK(back.edges() == g.graph.edges());
  auto c = io::clique_from_json(io::to_json(*g.clique), 3);
  CHECK(c == *g.clique);

  reduction::MCClique partial;
  partial.chosen = {std::nullopt, 2};
  CHECK(io::dump(io::to_json(partial)) == "{\"clique\":[[2,2]]}\n");
  CHECK(io::clique_from_json(io::to_json(partial), 2) == partial);
}

TEST_CASE("strip table round trip") {
  auto g = gen::gen_mcgraph(2, 3, 1, 2, 1, true);
  auto red = reduction::build(g.graph);
  io::StripTable t{red.graph, red.strips, red.force_count, red.adjacency_count,
                   red.equality_count, true};
  auto back = io::strip_table_from_json(Json::parse(io::dump(io::to_json(t))));
  CHECK(back.strips == t.strips);
  CHECK(back.force_count == t.force_count);
  CHECK(back.adjacency_count == t.adjacency_count);
  CHECK(back.equality_count == t.equality_count);
  CHECK(back.doubled);
  CHECK(back.graph.edges() == g.graph.edges());

  Json bad = io::to_json(t);
  bad["strips"].erase(0);
  CHECK_THROWS_AS(io::strip_table_from_json(bad), io::ParseError);
  bad = io::to_json(t);
  bad["k"] = 5;
  CHECK_THROWS_AS(io::strip_table_from_json(bad), io::ParseError);
}

TEST_CASE("malformed documents raise ParseError") {
  auto inst = [](const char* text) { return io::instance_from_json(Json::parse(text)); };
  CHECK_THROWS_AS(inst("[]"), io::ParseError);
  CHECK_THROWS_AS(inst("{\"rects\":[],\"hlines\":[]}"), io::ParseError);
  CHECK_THROWS_AS(inst("{\"rects\":[[1,2,3]],\"hlines\":[],\"vlines\":[]}"), io::ParseError);
  CHECK_THROWS_AS(inst("{\"rects\":[[2,1,0,0]],\"hlines\":[],\"vlines\":[]}"), io::ParseError);
  CHECK_THROWS_AS(inst("{\"rects\":[[0,1.5,0,0]],\"hlines\":[],\"vlines\":[]}"), io::ParseError);
  CHECK_THROWS_AS(inst("{\"rects\":[],\"hlines\":[\"a\"],\"vlines\":[]}"), io::ParseError);
  CHECK_THROWS_AS(inst("{\"rects\":[],\"hlines\":[18446744073709551615],\"vlines\":[]}"),
                  io::ParseError);
  CHECK_NOTHROW(inst("{\"rects\":[],\"hlines\":[-9223372036854775808],\"vlines\":[]}"));

  auto graph = [](const char* text) { return io::graph_from_json(Json::parse(text)); };
  CHECK_THROWS_AS(graph("{\"k\":0,\"r\":2,\"edges\":[]}"), io::ParseError);
  CHECK_THROWS_AS(graph("{\"k\":1,\"r\":2,\"edges\":[[0,0]]}"), io::ParseError);
  CHECK_THROWS_AS(graph("{\"k\":1,\"r\":2,\"edges\":[[0,2]]}"), io::ParseError);
  CHECK_THROWS_AS(graph("{\"k\":-1,\"r\":2,\"edges\":[]}"), io::ParseError);

  auto clique = [](const char* text) { return io::clique_from_json(Json::parse(text), 2); };
  CHECK_THROWS_AS(clique("{\"clique\":[[3,1]]}"), io::ParseError);
  CHECK_THROWS_AS(clique("{\"clique\":[[1,1],[1,2]]}"), io::ParseError);
  CHECK_THROWS_AS(clique("{\"clique\":[[1]]}"), io::ParseError);
}

TEST_CASE("points csv") {
  auto pts = io::read_points_csv("x,y,color\n0,0,1\n 3, -4 ,2\r\n\n");
  REQUIRE(pts.size() == 2);
  CHECK(pts[1].x == 3);
  CHECK(pts[1].y == -4);
  CHECK(pts[1].color == 2);
  CHECK(io::read_points_csv("1,2,0\n").size() == 1);
  CHECK(io::read_points_csv("").empty());
  CHECK_THROWS_AS(io::read_points_csv("x,y,color\n1,2\n"), io::ParseError);
  CHECK_THROWS_AS(io::read_points_csv("x,y,color\n1,2,z\n"), io::ParseError);
}

TEST_CASE("files") {
  const auto dir = std::filesystem::temp_directory_path() / "rstab_io_test";
  std::filesystem::create_directories(dir);
  io::write_file(dir / "a.json", "{\"rects\":[],\"hlines\":[],\"vlines\":[1]}\n");
  CHECK(io::instance_from_json(io::read_json(dir / "a.json")).vlines() == std::vector<Coord>{1});
  io::write_file(dir / "b.json", "{ not json");
  CHECK_THROWS_AS(io::read_json(dir / "b.json"), io::ParseError);
  CHECK_THROWS_AS(io::read_json(dir / "missing.json"), io::ParseError);
  std::filesystem::remove_all(dir);
}

}  // TEST_SUITE
