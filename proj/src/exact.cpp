#include "rstab/exact.hpp"

#include <algorithm>
#include <map>

#include "rstab/greedy1d.hpp"

namespace rstab::exact {

std::vector<Line> distinct_lines(const Instance& inst) {
  const auto& rects = inst.rects();
  std::map<std::vector<bool>, Line> seen;
  std::vector<Line> out;
  for (const Line& l : Solution(inst.hlines(), inst.vlines()).all_lines()) {
    std::vector<bool> hit(rects.size());
    bool any = false;
    for (std::size_t i = 0; i < rects.size(); ++i) {
      hit[i] = stabs(l, rects[i]);
      any = any || hit[i];
    }
    if (!any) continue;
    if (seen.emplace(std::move(hit), l).second) out.push_back(l);
  }
  return out;
}

namespace {

struct NodeLimitHit {};

class BranchAndBound {
 public:
  BranchAndBound(const Instance& inst, const SearchBudget& budget)
      : rects_(inst.rects()), lines_(distinct_lines(inst)), budget_(budget) {
    by_rect_.resize(rects_.size());
    by_line_.resize(lines_.size());
    for (std::size_t l = 0; l < lines_.size(); ++l) {
      for (std::size_t r = 0; r < rects_.size(); ++r) {
        if (stabs(lines_[l], rects_[r])) {
          by_rect_[r].push_back(l);
          by_line_[l].push_back(r);
        }
      }
    }
    cover_.assign(rects_.size(), 0);
    forbidden_.assign(lines_.size(), false);
  }

  ExactResult run() {
    ExactResult result{NoSolutionWithin{budget_.max_size}, 0};
    bound_ = budget_.max_size;
    try {
      dfs();
    } catch (const NodeLimitHit&) {
      result.outcome = NodeLimitExceeded{nodes_};
      result.nodes = nodes_;
      return result;
    }
    result.nodes = nodes_;
    if (best_) result.outcome = *best_;
    return result;
  }

 private:
  std::size_t remaining(std::size_t r) const {
    return static_cast<std::size_t>(
        std::count_if(by_rect_[r].begin(), by_rect_[r].end(),
                      [&](std::size_t l) { return !forbidden_[l]; }));
  }

  // Rectangles whose remaining lines all share one axis need at least the
  // one-dimensional optimum of that axis; the two groups use disjoint lines.
  std::size_t lower_bound() const {
    std::size_t total = 0;
    for (Axis axis : {Axis::Horizontal, Axis::Vertical}) {
      std::vector<Interval> intervals;
      for (std::size_t r = 0; r < rects_.size(); ++r) {
        if (cover_[r] > 0) continue;
        bool single_axis = true;
        for (std::size_t l : by_rect_[r]) {
          if (!forbidden_[l] && lines_[l].axis != axis) {
            single_axis = false;
            break;
          }
        }
        if (single_axis) intervals.push_back(rects_[r].span(axis));
      }
      if (intervals.empty()) continue;
      std::vector<Coord> points;
      for (std::size_t l = 0; l < lines_.size(); ++l) {
        if (!forbidden_[l] && lines_[l].axis == axis) {
          points.push_back(lines_[l].pos);
        }
      }
      auto out = stab_1d(intervals, points);
      if (!feasible(out)) return lines_.size() + 1;
      total += std::get<std::vector<Coord>>(out).size();
    }
    return total;
  }

  void record() {
    Solution sol;
    for (std::size_t l : chosen_) sol.insert(lines_[l]);
    best_ = std::move(sol);
  }

  void dfs() {
    ++nodes_;
    if (budget_.node_limit && nodes_ > *budget_.node_limit) throw NodeLimitHit{};

    std::optional<std::size_t> pick;
    std::size_t fewest = 0;
    for (std::size_t r = 0; r < rects_.size(); ++r) {
      if (cover_[r] > 0) continue;
      std::size_t n = remaining(r);
      if (!pick || n < fewest) {
        pick = r;
        fewest = n;
        if (n == 0) break;
      }
    }
    if (!pick) {
      if (!best_ || chosen_.size() < best_->size()) {
        record();
        if (chosen_.empty()) {
          done_ = true;
        } else {
          bound_ = chosen_.size() - 1;
        }
      }
      return;
    }
    if (fewest == 0 || chosen_.size() + 1 > bound_ || done_) return;
    if (chosen_.size() + lower_bound() > bound_) return;

    std::vector<std::size_t> banned;
    for (std::size_t l : by_rect_[*pick]) {
      if (forbidden_[l]) continue;
      chosen_.push_back(l);
      for (std::size_t r : by_line_[l]) ++cover_[r];
      dfs();
      for (std::size_t r : by_line_[l]) --cover_[r];
      chosen_.pop_back();
      if (chosen_.size() + 1 > bound_) break;
      // Later branches may assume this line is not used.
      forbidden_[l] = true;
      banned.push_back(l);
    }
    for (std::size_t l : banned) forbidden_[l] = false;
  }

  const std::vector<Rect>& rects_;
  std::vector<Line> lines_;
  SearchBudget budget_;
  std::vector<std::vector<std::size_t>> by_rect_;
  std::vector<std::vector<std::size_t>> by_line_;
  std::vector<int> cover_;
  std::vector<bool> forbidden_;
  std::vector<std::size_t> chosen_;
  std::optional<Solution> best_;
  std::size_t bound_ = 0;
  std::uint64_t nodes_ = 0;
  bool done_ = false;
};

}  // namespace

ExactResult opt_exact(const Instance& inst, const SearchBudget& budget) {
  return BranchAndBound(inst, budget).run();
}

std::optional<Solution> brute_force(const Instance& inst, std::size_t max_size) {
  const auto lines = distinct_lines(inst);
  const auto& rects = inst.rects();
  const std::size_t n = lines.size();
  std::vector<std::size_t> idx;
  for (std::size_t size = 0; size <= std::min(max_size, n); ++size) {
    idx.resize(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      Solution sol;
      for (std::size_t i : idx) sol.insert(lines[i]);
      if (std::all_of(rects.begin(), rects.end(),
                      [&](const Rect& r) { return sol.stabs(r); })) {
        return sol;
      }
      // Next combination in lexicographic order.
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace rstab::exact
