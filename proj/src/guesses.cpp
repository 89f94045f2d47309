#include <algorithm>
#include <vector>

#include "rstab/approx.hpp"

namespace rstab::approx {

namespace {

// Enumerates selections of strips of Gamma(boundaries) and of selectable
// boundary lines such that the chosen strips are separated by the chosen
// lines together with the fixed ones. Items are interleaved as
// strip_0, line_0, strip_1, ..., line_{n-1}, strip_n; selections come out by
// size, then lexicographically by item index.
class SeparatedSelections {
 public:
  using Visit = std::function<bool(const std::vector<Strip>&,
                                   const std::vector<Coord>&)>;

  SeparatedSelections(Axis axis, std::vector<Coord> boundaries,
                      const std::vector<bool>& fixed,
                      const std::vector<bool>& selectable,
                      const StripFilter& filter)
      : boundaries_(std::move(boundaries)),
        strips_(strips_of(axis, boundaries_)),
        selectable_(selectable) {
    fixed_prefix_.assign(boundaries_.size() + 1, 0);
    for (std::size_t i = 0; i < boundaries_.size(); ++i) {
      fixed_prefix_[i + 1] = fixed_prefix_[i] + (fixed[i] ? 1 : 0);
    }
    strip_allowed_.resize(strips_.size());
    for (std::size_t i = 0; i < strips_.size(); ++i) {
      strip_allowed_[i] = !filter || filter(strips_[i]);
    }
  }

  void run(std::size_t budget, const Visit& visit) {
    visit_ = &visit;
    const std::size_t items = 2 * boundaries_.size() + 1;
    for (std::size_t size = 0; size <= std::min(budget, items); ++size) {
      target_ = size;
      if (!dfs(0, std::nullopt, false)) return;
    }
  }

 private:
  bool dfs(std::size_t next_item, std::optional<std::size_t> last_strip,
           bool separated) {
    if (chosen_strips_.size() + chosen_lines_.size() == target_) {
      return (*visit_)(chosen_strips_, chosen_lines_);
    }
    const std::size_t items = 2 * boundaries_.size() + 1;
    const std::size_t need =
        target_ - chosen_strips_.size() - chosen_lines_.size();
    for (std::size_t item = next_item; item + need <= items; ++item) {
      if (item % 2 == 0) {
        const std::size_t s = item / 2;
        if (!strip_allowed_[s]) continue;
        if (last_strip && !separated &&
            fixed_prefix_[s] == fixed_prefix_[*last_strip]) {
          continue;
        }
        chosen_strips_.push_back(strips_[s]);
        bool go_on = dfs(item + 1, s, false);
        chosen_strips_.pop_back();
        if (!go_on) return false;
      } else {
        const std::size_t l = item / 2;
        if (!selectable_[l]) continue;
        chosen_lines_.push_back(boundaries_[l]);
        bool go_on = dfs(item + 1, last_strip, separated || last_strip.has_value());
        chosen_lines_.pop_back();
        if (!go_on) return false;
      }
    }
    return true;
  }

  std::vector<Coord> boundaries_;
  std::vector<Strip> strips_;
  std::vector<bool> selectable_;
  std::vector<std::size_t> fixed_prefix_;
  std::vector<bool> strip_allowed_;
  std::size_t target_ = 0;
  const Visit* visit_ = nullptr;
  std::vector<Strip> chosen_strips_;
  std::vector<Coord> chosen_lines_;
};

}  // namespace

std::size_t vertical_budget(std::size_t k_v) { return 3 * k_v / 2; }

void for_each_vertical_guess(std::span<const Coord> v0, std::size_t k_v,
                             const GuessVisitor<VerticalGuess>& visit,
                             const StripFilter& filter) {
  std::vector<Coord> boundaries(v0.begin(), v0.end());
  normalize_positions(boundaries);
  const std::vector<bool> fixed(boundaries.size(), false);
  const std::vector<bool> selectable(boundaries.size(), true);
  SeparatedSelections sel(Axis::Vertical, boundaries, fixed, selectable,
                          filter);
  VerticalGuess guess;
  sel.run(vertical_budget(k_v), [&](const std::vector<Strip>& strips,
                                    const std::vector<Coord>& lines) {
    guess.gamma_v = strips;
    guess.v1 = lines;
    return visit(guess);
  });
}

std::vector<VerticalGuess> enumerate_vertical_guesses(
    std::span<const Coord> v0, std::size_t k_v) {
  std::vector<VerticalGuess> out;
  for_each_vertical_guess(v0, k_v, [&](const VerticalGuess& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

void for_each_horizontal_guess(std::span<const Coord> h1,
                               std::span<const Coord> h0, std::size_t k_h,
                               const GuessVisitor<HorizontalGuess>& visit,
                               const StripFilter& filter) {
  std::vector<Coord> fixed_lines(h1.begin(), h1.end());
  normalize_positions(fixed_lines);
  if (fixed_lines.size() > 2 * k_h) return;
  const std::size_t budget = 2 * k_h - fixed_lines.size();

  std::vector<Coord> boundaries(fixed_lines);
  boundaries.insert(boundaries.end(), h0.begin(), h0.end());
  normalize_positions(boundaries);

  std::vector<Coord> sel_lines(h0.begin(), h0.end());
  normalize_positions(sel_lines);
  std::vector<bool> fixed(boundaries.size()), selectable(boundaries.size());
  for (std::size_t i = 0; i < boundaries.size(); ++i) {
    fixed[i] = std::binary_search(fixed_lines.begin(), fixed_lines.end(),
                                  boundaries[i]);
    // A line of H1 is already in the output; it is never picked again.
    selectable[i] = !fixed[i] && std::binary_search(sel_lines.begin(),
                                                    sel_lines.end(),
                                                    boundaries[i]);
  }
  SeparatedSelections sel(Axis::Horizontal, boundaries, fixed, selectable,
                          filter);
  HorizontalGuess guess;
  sel.run(budget, [&](const std::vector<Strip>& strips,
                      const std::vector<Coord>& lines) {
    guess.gamma_h = strips;
    guess.h1prime = lines;
    return visit(guess);
  });
}

std::vector<HorizontalGuess> enumerate_horizontal_guesses(
    std::span<const Coord> h1, std::span<const Coord> h0, std::size_t k_h) {
  std::vector<HorizontalGuess> out;
  for_each_horizontal_guess(h1, h0, k_h, [&](const HorizontalGuess& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

}  // namespace rstab::approx
