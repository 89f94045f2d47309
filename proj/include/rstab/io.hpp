#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "rstab/core.hpp"
#include "rstab/generators.hpp"
#include "rstab/reduction.hpp"

namespace rstab::io {

using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Writers produce canonical documents: sorted line arrays, fixed key order.
// Readers throw ParseError on anything malformed.

Json to_json(const Instance& inst);
Json to_json(const Solution& sol);
Json to_json(const reduction::MCGraph& g);
Json to_json(const reduction::MCClique& c);
Json to_json(const gen::PlantedWitness& w);

Instance instance_from_json(const Json& j);
Solution solution_from_json(const Json& j);
reduction::MCGraph graph_from_json(const Json& j);
reduction::MCClique clique_from_json(const Json& j, std::size_t k);

/// Sidecar written next to a reduced instance: k, r, the strip table, the
/// family sizes, whether the doubling transform was applied, and the source
/// graph so extracted cliques can be checked.
struct StripTable {
  reduction::MCGraph graph{1, 1};
  std::vector<Interval> strips;
  std::size_t force_count = 0;
  std::size_t adjacency_count = 0;
  std::size_t equality_count = 0;
  bool doubled = false;
};

Json to_json(const StripTable& t);
StripTable strip_table_from_json(const Json& j);

/// Header `x,y,color`, then one integer row per point.
std::vector<gen::ColoredPoint> read_points_csv(const std::string& text);

std::string read_file(const std::filesystem::path& path);
Json read_json(const std::filesystem::path& path);
/// Compact dump plus trailing newline.
std::string dump(const Json& j);
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace rstab::io
