#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rstab/core.hpp"

namespace rstab::reduction {

/// Graph whose vertices are split into k parts of r vertices each. Parts and
/// in-part indices are 1-based as in (part i, index p); vertex ids are
/// (i-1)*r + (p-1).
class MCGraph {
 public:
  MCGraph(std::size_t k, std::size_t r);

  std::size_t k() const { return k_; }
  std::size_t r() const { return r_; }
  std::size_t num_vertices() const { return k_ * r_; }

  std::size_t id(std::size_t part, std::size_t index) const;
  std::pair<std::size_t, std::size_t> part_of(std::size_t id) const;

  /// Throws std::invalid_argument on self-loops or out-of-range ids.
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const;
  /// Sorted (u < v) edge list.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  std::size_t intra_part_edges() const;
  std::size_t cross_part_non_edges() const;

 private:
  std::size_t k_;
  std::size_t r_;
  std::vector<std::vector<bool>> adj_;
};

/// chosen[i-1] is the in-part index picked from part i, if any.
struct MCClique {
  std::vector<std::optional<std::size_t>> chosen;

  std::size_t size() const;
  friend bool operator==(const MCClique&, const MCClique&) = default;
};

bool is_multicolored_clique(const MCGraph& g, const MCClique& c);

struct ReducedInstance {
  Instance inst;
  MCGraph graph;
  /// Closed coordinate range of strip x, for x in [0, 2k-1]; both axes use
  /// the same ranges.
  std::vector<Interval> strips;
  std::size_t force_count = 0;
  std::size_t adjacency_count = 0;
  std::size_t equality_count = 0;

  std::size_t k() const { return graph.k(); }
  std::size_t r() const { return graph.r(); }
};

/// Closed range [2r + x r + 1, 2r + x r + r].
Interval strip_range(std::size_t r, std::size_t x);

/// Emits the force, adjacency and equality rectangle families (in that
/// order) and every integer line inside the 2k vertical and 2k horizontal
/// strips.
ReducedInstance build(const MCGraph& g);

/// Four lines per part from a total multicolored clique. Throws
/// std::invalid_argument if the clique is partial or not a clique.
Solution forward(const ReducedInstance& red, const MCClique& clique);

struct NotApplicable {
  std::string reason;
};

/// The input looked valid but the extraction hit a contradiction; indicates
/// a malformed reduced instance.
class ExtractionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Recovers a multicolored clique of size >= ceil(eps k) from a stabbing set
/// of at most 5k - eps k lines, with eps = eps_num / eps_den > 0.
std::variant<MCClique, NotApplicable> reverse(const ReducedInstance& red,
                                              const Solution& sol,
                                              std::int64_t eps_num,
                                              std::int64_t eps_den);

/// Replaces [a,b]x[c,d] by [2a,2b+1]x[2c,2d+1] and every candidate line t by
/// 2t and 2t+1. Throws std::overflow_error near the 64-bit limits.
Instance make_nondegenerate(const Instance& inst);

/// Back-map of the doubling: position t goes to floor(t/2).
Coord halve(Coord t);
Solution halve(const Solution& sol);

}  // namespace rstab::reduction
