#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rstab/core.hpp"
#include "rstab/reduction.hpp"

namespace rstab::gen {

/// A stabbing set of size k known to the generator. Kept for tests only.
struct PlantedWitness {
  std::vector<Coord> hstar;
  std::vector<Coord> vstar;

  std::size_t size() const { return hstar.size() + vstar.size(); }
  Solution solution() const { return Solution(hstar, vstar); }
};

struct PlantedInstance {
  Instance inst;
  PlantedWitness witness;
};

/// Coordinates live in [0, coord_range). Requires k >= 1, n >= 1 and
/// coord_range >= k. `distractors` defaults to 2k, capped by coord_range.
PlantedInstance gen_planted(std::size_t k, std::size_t n, Coord coord_range,
                            std::uint64_t seed,
                            std::optional<std::size_t> distractors = {});

/// n rectangles and m_lines lines drawn uniformly from [0, coord_range).
Instance gen_uniform(std::size_t n, std::size_t m_lines, Coord coord_range,
                     std::uint64_t seed);

struct GeneratedGraph {
  reduction::MCGraph graph;
  std::optional<reduction::MCClique> clique;
};

/// Cross-part edges appear independently with probability num/den. With
/// `plant`, one random vertex per part is fixed first and the clique edges
/// among them are always present.
GeneratedGraph gen_mcgraph(std::size_t k, std::size_t r, std::uint64_t num,
                           std::uint64_t den, std::uint64_t seed, bool plant);

struct ColoredPoint {
  Coord x = 0;
  Coord y = 0;
  int color = 0;
};

class CoincidentPoints : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Doubles coordinates and emits one rectangle per bichromatic pair; odd
/// lines of the result correspond to half-integer cuts of the input. Throws
/// CoincidentPoints when two differently colored points share a position.
Instance discretization_to_stabbing(const std::vector<ColoredPoint>& pts);

}  // namespace rstab::gen
