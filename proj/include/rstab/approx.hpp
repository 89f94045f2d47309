#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "rstab/core.hpp"
#include "rstab/twosat.hpp"

namespace rstab::approx {

/// Why a branch of the search (a budget split or a guess) was abandoned.
struct GuessInfeasible {
  std::string reason;
};

template <class T>
using Outcome = std::variant<T, GuessInfeasible>;

/// Number of horizontal and vertical lines a hypothetical witness uses.
struct BudgetSplit {
  std::size_t k_h = 0;
  std::size_t k_v = 0;

  friend bool operator==(const BudgetSplit&, const BudgetSplit&) = default;
};

// ---------------------------------------------------------------------------
// Horizontal line preselection

struct Preselection {
  std::vector<Coord> h1;  // horizontal lines kept in the output
  std::vector<Coord> v0;  // vertical lines; their strips seed the guesses
};

/// Sweeps the horizontal candidates bottom to top. From the current line it
/// jumps to the furthest candidate such that the rectangles strictly between
/// the two can be stabbed by at most `k_v` vertical lines, keeping every
/// landing point below the top sentinel. V0 stabs what the kept lines miss.
Outcome<Preselection> preselect(const Instance& inst, std::size_t k_v);

/// Rectangles lying in the open horizontal slab (lo, hi); an absent bound is
/// infinite.
std::vector<Rect> rects_strictly_between(std::span<const Rect> rects,
                                         std::optional<Coord> lo,
                                         std::optional<Coord> hi);

// ---------------------------------------------------------------------------
// Guess enumeration

struct VerticalGuess {
  std::vector<Strip> gamma_v;
  std::vector<Coord> v1;

  std::size_t size() const { return gamma_v.size() + v1.size(); }
  friend bool operator==(const VerticalGuess&, const VerticalGuess&) = default;
};

struct HorizontalGuess {
  std::vector<Strip> gamma_h;
  std::vector<Coord> h1prime;

  std::size_t size() const { return gamma_h.size() + h1prime.size(); }
  friend bool operator==(const HorizontalGuess&,
                         const HorizontalGuess&) = default;
};

/// Return false to stop the enumeration.
template <class G>
using GuessVisitor = std::function<bool(const G&)>;

/// Optional filter on strips (index into the strip arrangement). Strips that
/// fail it are never selected.
using StripFilter = std::function<bool(const Strip&)>;

/// floor(3 k_v / 2)
std::size_t vertical_budget(std::size_t k_v);

/// All (gamma_v, V1) with gamma_v a set of strips of Gamma(V0), V1 a subset
/// of V0, |gamma_v| + |V1| <= floor(3 k_v / 2), gamma_v separated by V1.
/// Ordered by total size, then lexicographically over the interleaved
/// sequence strip_0, line_0, strip_1, ..., strip_n.
void for_each_vertical_guess(std::span<const Coord> v0, std::size_t k_v,
                             const GuessVisitor<VerticalGuess>& visit,
                             const StripFilter& filter = {});
std::vector<VerticalGuess> enumerate_vertical_guesses(
    std::span<const Coord> v0, std::size_t k_v);

/// All (gamma_h, H1') with gamma_h a set of strips of Gamma(H1 u H0), H1' a
/// subset of H0, |H1| + |gamma_h| + |H1'| <= 2 k_h, gamma_h separated by
/// H1 u H1'. Same ordering as the vertical enumeration.
void for_each_horizontal_guess(std::span<const Coord> h1,
                               std::span<const Coord> h0, std::size_t k_h,
                               const GuessVisitor<HorizontalGuess>& visit,
                               const StripFilter& filter = {});
std::vector<HorizontalGuess> enumerate_horizontal_guesses(
    std::span<const Coord> h1, std::span<const Coord> h0, std::size_t k_h);

// ---------------------------------------------------------------------------
// Redundant rectangle elimination

struct Elimination {
  std::vector<Rect> kept;                   // K, input order
  std::vector<std::size_t> removed;         // X, input indices in removal order
  std::vector<Coord> h0;
};

/// Builds R' (rectangles stabbable by some horizontal candidate but missed
/// by H1 u V1). While a boundary line of a guessed strip meets a subfamily of
/// R' that needs at least 2k+2 horizontal lines, drops the member of that
/// subfamily whose intersection with the strip is widest (ties: lowest input
/// index). Boundaries are scanned strip by strip, left before right, and the
/// scan restarts after each removal. H0 stabs what is left of R'.
Outcome<Elimination> eliminate_redundant(const Instance& inst,
                                         std::span<const Coord> h1,
                                         std::span<const Coord> v1,
                                         std::span<const Strip> gamma_v,
                                         std::size_t k);

// ---------------------------------------------------------------------------
// 2-SAT assembly

/// Threshold variables of one strip: variable first_var + t means "the line
/// picked in this strip is at or beyond candidates[t]".
struct StripVariables {
  Strip strip;
  std::vector<Coord> candidates;
  twosat::Var first_var = 0;

  twosat::Lit at_least(std::size_t t) const {
    return twosat::Lit::pos(first_var + static_cast<twosat::Var>(t));
  }
};

struct TwoSatEncoding {
  twosat::Formula formula;
  std::vector<StripVariables> vertical;
  std::vector<StripVariables> horizontal;

  /// One line per strip: the furthest candidate whose threshold holds.
  Solution decode(const twosat::Assignment& a) const;
};

/// Encodes "pick exactly one candidate line inside every guessed strip such
/// that every rectangle of `kprime` is stabbed". Each rectangle of `kprime`
/// must meet at most one strip of each family; a violation throws
/// std::logic_error.
Outcome<TwoSatEncoding> assemble_2sat(std::span<const Rect> kprime,
                                      std::span<const Strip> gamma_v,
                                      std::span<const Strip> gamma_h,
                                      const Instance& inst);

// ---------------------------------------------------------------------------
// Full pipeline

struct SearchStats {
  std::size_t splits_tried = 0;
  std::size_t splits_rejected = 0;
  std::size_t vertical_guesses = 0;
  std::size_t vertical_pruned = 0;
  std::size_t horizontal_guesses = 0;
  std::size_t twosat_calls = 0;
  std::size_t verify_failures = 0;

  SearchStats& operator+=(const SearchStats& o);
};

struct ApproxResult {
  std::optional<Solution> solution;  // nullopt: no witness of size <= k
  BudgetSplit split;                 // the split that produced the solution
  std::size_t budget = 0;
  SearchStats stats;

  bool solved() const { return solution.has_value(); }
};

/// floor(7k/4)
std::size_t size_bound(std::size_t k);

/// Tries every split k_h + k_v <= k (smaller totals first). A split with
/// k_h > k_v runs on the transposed instance. A returned solution stabs every
/// rectangle and has at most floor(7k/4) lines; an empty result means no
/// stabbing set of at most k lines exists.
ApproxResult solve_with_budget(const Instance& inst, std::size_t k);

/// Runs one split with k_h <= k_v on `inst` as given.
ApproxResult solve_split(const Instance& inst, BudgetSplit split,
                         std::size_t k);

/// Smallest budget 0..k_max for which solve_with_budget succeeds.
ApproxResult solve_min(const Instance& inst, std::size_t k_max);

}  // namespace rstab::approx
