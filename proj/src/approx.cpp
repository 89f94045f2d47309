#include "rstab/approx.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "rstab/greedy1d.hpp"

namespace rstab::approx {

namespace {

bool any_inside(std::span<const Coord> sorted, const Interval& iv) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), iv.lo);
  return it != sorted.end() && *it <= iv.hi;
}

bool stabbed_by(const Rect& r, std::span<const Coord> hs,
                std::span<const Coord> vs) {
  return any_inside(hs, r.span(Axis::Horizontal)) ||
         any_inside(vs, r.span(Axis::Vertical));
}

std::string describe(const Rect& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::size_t stab_size(const StabOutcome& o) {
  return std::get<std::vector<Coord>>(o).size();
}

}  // namespace

SearchStats& SearchStats::operator+=(const SearchStats& o) {
  splits_tried += o.splits_tried;
  splits_rejected += o.splits_rejected;
  vertical_guesses += o.vertical_guesses;
  vertical_pruned += o.vertical_pruned;
  horizontal_guesses += o.horizontal_guesses;
  twosat_calls += o.twosat_calls;
  verify_failures += o.verify_failures;
  return *this;
}

std::size_t size_bound(std::size_t k) { return 7 * k / 4; }

std::vector<Rect> rects_strictly_between(std::span<const Rect> rects,
                                         std::optional<Coord> lo,
                                         std::optional<Coord> hi) {
  std::vector<Rect> out;
  for (const Rect& r : rects) {
    if ((!lo || r.y1 > *lo) && (!hi || r.y2 < *hi)) out.push_back(r);
  }
  return out;
}

Outcome<Preselection> preselect(const Instance& inst, std::size_t k_v) {
  const auto& hs = inst.hlines();
  const std::size_t m = hs.size();
  // Index 0 and m+1 are the sentinels below and above every rectangle.
  auto position = [&](std::size_t j) -> std::optional<Coord> {
    if (j == 0 || j == m + 1) return std::nullopt;
    return hs[j - 1];
  };
  auto fits = [&](std::size_t i, std::size_t j) {
    auto between = rects_strictly_between(inst.rects(), position(i), position(j));
    auto out = stab_axis(between, inst, Axis::Vertical);
    return feasible(out) && stab_size(out) <= k_v;
  };

  Preselection result;
  std::size_t i = 0;
  while (i <= m) {
    // The rectangle family grows with j, so the feasible j form a prefix.
    std::optional<std::size_t> best;
    for (std::size_t j = i + 1; j <= m + 1; ++j) {
      if (!fits(i, j)) break;
      best = j;
    }
    if (!best) {
      std::ostringstream os;
      os << "rectangles between consecutive horizontal candidates need more "
            "than "
         << k_v << " vertical lines";
      return GuessInfeasible{os.str()};
    }
    if (*best <= m) result.h1.push_back(hs[*best - 1]);
    i = *best;
  }

  std::vector<Rect> missed;
  for (const Rect& r : inst.rects()) {
    if (!any_inside(result.h1, r.span(Axis::Horizontal))) missed.push_back(r);
  }
  auto v0 = stab_axis(missed, inst, Axis::Vertical);
  if (auto* bad = std::get_if<Infeasible>(&v0)) {
    return GuessInfeasible{"no vertical candidate inside x-range [" +
                           std::to_string(bad->witness.lo) + "," +
                           std::to_string(bad->witness.hi) + "]"};
  }
  result.v0 = std::get<std::vector<Coord>>(std::move(v0));
  return result;
}

Outcome<Elimination> eliminate_redundant(const Instance& inst,
                                         std::span<const Coord> h1,
                                         std::span<const Coord> v1,
                                         std::span<const Strip> gamma_v,
                                         std::size_t k) {
  const auto& rects = inst.rects();
  std::vector<Coord> h1s(h1.begin(), h1.end()), v1s(v1.begin(), v1.end());
  normalize_positions(h1s);
  normalize_positions(v1s);

  std::vector<std::size_t> rprime;
  for (std::size_t i = 0; i < rects.size(); ++i) {
    if (any_inside(inst.hlines(), rects[i].span(Axis::Horizontal)) &&
        !stabbed_by(rects[i], h1s, v1s)) {
      rprime.push_back(i);
    }
  }

  std::vector<Strip> strips(gamma_v.begin(), gamma_v.end());
  std::stable_sort(strips.begin(), strips.end(),
                   [](const Strip& a, const Strip& b) {
                     if (!a.lo || !b.lo) return !a.lo && b.lo;
                     return *a.lo < *b.lo;
                   });
  struct Boundary {
    const Strip* strip;
    Coord line;
  };
  std::vector<Boundary> boundaries;
  for (const Strip& s : strips) {
    if (s.lo) boundaries.push_back({&s, *s.lo});
    if (s.hi) boundaries.push_back({&s, *s.hi});
  }

  const std::size_t threshold = 2 * k + 2;
  std::vector<bool> removed(rects.size(), false);
  Elimination result;
  std::vector<std::size_t> touching;
  std::vector<Rect> family;
  bool fired = true;
  while (fired) {
    fired = false;
    for (const Boundary& b : boundaries) {
      touching.clear();
      family.clear();
      for (std::size_t idx : rprime) {
        if (!removed[idx] && rects[idx].span(Axis::Vertical).contains(b.line)) {
          touching.push_back(idx);
          family.push_back(rects[idx]);
        }
      }
      if (family.size() < threshold) continue;
      auto need = stab_axis(family, inst, Axis::Horizontal);
      if (!feasible(need)) {
        throw std::logic_error("rectangle of R' not stabbable horizontally");
      }
      if (stab_size(need) < threshold) continue;

      std::size_t widest = touching.front();
      Coord best = -1;
      for (std::size_t idx : touching) {
        Coord w = b.strip->clipped_width(rects[idx].span(Axis::Vertical));
        if (w > best) {
          best = w;
          widest = idx;
        }
      }
      removed[widest] = true;
      result.removed.push_back(widest);
      fired = true;
      break;
    }
  }

  family.clear();
  for (std::size_t idx : rprime) {
    if (!removed[idx]) family.push_back(rects[idx]);
  }
  auto h0 = stab_axis(family, inst, Axis::Horizontal);
  if (!feasible(h0)) {
    return GuessInfeasible{"remaining rectangles not stabbable horizontally"};
  }
  result.h0 = std::get<std::vector<Coord>>(std::move(h0));
  for (std::size_t i = 0; i < rects.size(); ++i) {
    if (!removed[i]) result.kept.push_back(rects[i]);
  }
  return result;
}

Solution TwoSatEncoding::decode(const twosat::Assignment& a) const {
  Solution sol;
  auto pick = [&](const StripVariables& sv) {
    std::size_t t = 0;
    for (std::size_t c = 0; c < sv.candidates.size(); ++c) {
      if (twosat::evaluate(sv.at_least(c), a)) t = c;
    }
    return Line{sv.strip.axis, sv.candidates[t]};
  };
  for (const auto& sv : vertical) sol.insert(pick(sv));
  for (const auto& sv : horizontal) sol.insert(pick(sv));
  return sol;
}

namespace {

// "The line picked in the strip stabs the rectangle" as
// at_least(first) and not at_least(end).
struct StripChoice {
  twosat::Lit must;
  std::optional<twosat::Lit> must_not;
};

Outcome<std::vector<StripVariables>> declare_strips(
    std::span<const Strip> strips, const std::vector<Coord>& candidates,
    twosat::Formula& f) {
  std::vector<StripVariables> out;
  for (const Strip& s : strips) {
    auto inside = positions_inside(s, candidates);
    if (inside.empty()) {
      std::ostringstream os;
      os << "strip " << s << " contains no candidate line";
      return GuessInfeasible{os.str()};
    }
    StripVariables sv{s, {inside.begin(), inside.end()}, f.num_vars()};
    for (std::size_t t = 0; t < sv.candidates.size(); ++t) f.new_var();
    for (std::size_t t = 1; t < sv.candidates.size(); ++t) {
      f.add_clause(~sv.at_least(t), sv.at_least(t - 1));
    }
    // Exactly one line per strip keeps the pick structured.
    f.add_unit(sv.at_least(0));
    out.push_back(std::move(sv));
  }
  return out;
}

// Which strip of the family the rectangle meets, if any; throws when it
// meets two.
const StripVariables* met_strip(const std::vector<StripVariables>& family,
                                const Rect& r) {
  const StripVariables* hit = nullptr;
  for (const auto& sv : family) {
    if (!rect_meets_strip(sv.strip, r)) continue;
    if (hit) {
      throw std::logic_error("rectangle " + describe(r) +
                             " meets two guessed strips of one family");
    }
    hit = &sv;
  }
  return hit;
}

std::optional<StripChoice> choice_for(const StripVariables* sv,
                                      const Rect& r) {
  if (!sv) return std::nullopt;
  const Interval iv = r.span(sv->strip.axis);
  const auto& c = sv->candidates;
  auto first = std::lower_bound(c.begin(), c.end(), iv.lo);
  auto end = std::upper_bound(first, c.end(), iv.hi);
  if (first == end) return std::nullopt;
  StripChoice choice{sv->at_least(static_cast<std::size_t>(first - c.begin())),
                     std::nullopt};
  if (end != c.end()) {
    choice.must_not = sv->at_least(static_cast<std::size_t>(end - c.begin()));
  }
  return choice;
}

}  // namespace

Outcome<TwoSatEncoding> assemble_2sat(std::span<const Rect> kprime,
                                      std::span<const Strip> gamma_v,
                                      std::span<const Strip> gamma_h,
                                      const Instance& inst) {
  TwoSatEncoding enc;
  auto vs = declare_strips(gamma_v, inst.vlines(), enc.formula);
  if (auto* bad = std::get_if<GuessInfeasible>(&vs)) return *bad;
  enc.vertical = std::get<0>(std::move(vs));
  auto hs = declare_strips(gamma_h, inst.hlines(), enc.formula);
  if (auto* bad = std::get_if<GuessInfeasible>(&hs)) return *bad;
  enc.horizontal = std::get<0>(std::move(hs));

  auto& f = enc.formula;
  for (const Rect& r : kprime) {
    const StripVariables* pv = met_strip(enc.vertical, r);
    const StripVariables* ph = met_strip(enc.horizontal, r);
    if (!pv && !ph) {
      return GuessInfeasible{"rectangle " + describe(r) +
                             " meets none of the guessed strips"};
    }
    auto v = choice_for(pv, r);
    auto h = choice_for(ph, r);
    if (!v && !h) {
      // No candidate of a met strip stabs it: contradict that strip's unit.
      f.add_unit(~(pv ? pv : ph)->at_least(0));
      continue;
    }
    if (!v || !h) {
      const StripChoice& only = v ? *v : *h;
      f.add_unit(only.must);
      if (only.must_not) f.add_unit(~*only.must_not);
      continue;
    }
    // (a and not b) or (c and not d), distributed into four clauses; a
    // missing upper threshold makes its negation constantly true.
    f.add_clause(v->must, h->must);
    if (h->must_not) f.add_clause(v->must, ~*h->must_not);
    if (v->must_not) f.add_clause(~*v->must_not, h->must);
    if (v->must_not && h->must_not) {
      f.add_clause(~*v->must_not, ~*h->must_not);
    }
  }
  return enc;
}

ApproxResult solve_split(const Instance& inst, BudgetSplit split,
                         std::size_t k) {
  if (split.k_h > split.k_v) {
    throw std::invalid_argument("solve_split expects k_h <= k_v");
  }
  ApproxResult result;
  result.split = split;
  result.budget = k;
  SearchStats& stats = result.stats;
  ++stats.splits_tried;

  auto pre = preselect(inst, split.k_v);
  if (std::holds_alternative<GuessInfeasible>(pre)) {
    ++stats.splits_rejected;
    return result;
  }
  const Preselection& p = std::get<Preselection>(pre);
  // H1 is nicely positioned w.r.t. any witness with k_v vertical lines, so it
  // cannot outnumber the witness' horizontal lines.
  if (p.h1.size() > split.k_h) {
    ++stats.splits_rejected;
    return result;
  }

  const auto& rects = inst.rects();
  const std::size_t line_budget = 2 * split.k_h + vertical_budget(split.k_v);
  auto has_vertical = [&](const Strip& s) {
    return !positions_inside(s, inst.vlines()).empty();
  };
  auto has_horizontal = [&](const Strip& s) {
    return !positions_inside(s, inst.hlines()).empty();
  };

  std::vector<Rect> outside;
  std::vector<Rect> k1;
  std::vector<Rect> kprime;

  for_each_vertical_guess(
      p.v0, split.k_v,
      [&](const VerticalGuess& vg) {
        ++stats.vertical_guesses;

        // A rectangle missed by H1 u V1 and clear of every guessed strip can
        // only be stabbed by the witness' k_h horizontal lines.
        outside.clear();
        for (const Rect& r : rects) {
          if (stabbed_by(r, p.h1, vg.v1)) continue;
          bool meets = std::any_of(
              vg.gamma_v.begin(), vg.gamma_v.end(),
              [&](const Strip& s) { return rect_meets_strip(s, r); });
          if (!meets) outside.push_back(r);
        }
        auto need = stab_axis(outside, inst, Axis::Horizontal);
        if (!feasible(need) || stab_size(need) > split.k_h) {
          ++stats.vertical_pruned;
          return true;
        }

        auto elim = eliminate_redundant(inst, p.h1, vg.v1, vg.gamma_v, k);
        if (std::holds_alternative<GuessInfeasible>(elim)) return true;
        const Elimination& e = std::get<Elimination>(elim);

        k1.clear();
        for (const Rect& r : e.kept) {
          if (!stabbed_by(r, p.h1, vg.v1)) k1.push_back(r);
        }

        bool found = false;
        for_each_horizontal_guess(
            p.h1, e.h0, split.k_h,
            [&](const HorizontalGuess& hg) {
              ++stats.horizontal_guesses;
              kprime.clear();
              for (const Rect& r : k1) {
                if (!any_inside(hg.h1prime, r.span(Axis::Horizontal))) {
                  kprime.push_back(r);
                }
              }
              auto enc = assemble_2sat(kprime, vg.gamma_v, hg.gamma_h, inst);
              if (std::holds_alternative<GuessInfeasible>(enc)) return true;
              const TwoSatEncoding& te = std::get<TwoSatEncoding>(enc);
              ++stats.twosat_calls;
              auto assignment = twosat::solve(te.formula);
              if (!assignment) return true;

              Solution sol = te.decode(*assignment);
              sol.insert(Axis::Horizontal, p.h1);
              sol.insert(Axis::Vertical, vg.v1);
              sol.insert(Axis::Horizontal, hg.h1prime);
              if (!verify(inst, sol).ok()) {
                ++stats.verify_failures;
                return true;
              }
              if (sol.size() > line_budget) {
                throw std::logic_error("assembled solution exceeds split budget");
              }
              result.solution = std::move(sol);
              found = true;
              return false;
            },
            has_horizontal);
        return !found;
      },
      has_vertical);
  return result;
}

ApproxResult solve_with_budget(const Instance& inst, std::size_t k) {
  ApproxResult result;
  result.budget = k;
  std::optional<Instance> transposed;
  for (std::size_t total = 0; total <= k; ++total) {
    for (std::size_t k_h = 0; k_h <= total; ++k_h) {
      const BudgetSplit split{k_h, total - k_h};
      ApproxResult attempt;
      if (split.k_h <= split.k_v) {
        attempt = solve_split(inst, split, k);
      } else {
        if (!transposed) transposed = transpose(inst);
        attempt = solve_split(*transposed, {split.k_v, split.k_h}, k);
        if (attempt.solution) attempt.solution = transpose(*attempt.solution);
      }
      result.stats += attempt.stats;
      if (!attempt.solution) continue;

      if (!verify(inst, *attempt.solution).ok() ||
          attempt.solution->size() > size_bound(k)) {
        throw std::logic_error("approximation returned an invalid solution");
      }
      result.solution = std::move(attempt.solution);
      result.split = split;
      return result;
    }
  }
  return result;
}

ApproxResult solve_min(const Instance& inst, std::size_t k_max) {
  SearchStats total;
  for (std::size_t k = 0; k <= k_max; ++k) {
    ApproxResult r = solve_with_budget(inst, k);
    total += r.stats;
    if (r.solved()) {
      r.stats = total;
      return r;
    }
  }
  ApproxResult none;
  none.budget = k_max;
  none.stats = total;
  return none;
}

}  // namespace rstab::approx
