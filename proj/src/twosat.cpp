#include "rstab/twosat.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace rstab::twosat {

void Formula::add_clause(Lit a, Lit b) {
  if (a.var >= num_vars_ || b.var >= num_vars_) {
    throw std::out_of_range("literal references variable " +
                            std::to_string(std::max(a.var, b.var)) +
                            " of " + std::to_string(num_vars_));
  }
  clauses_.emplace_back(a, b);
}

bool evaluate(Lit l, const Assignment& a) { return a.at(l.var) != l.negated; }

bool satisfies(const Formula& f, const Assignment& a) {
  if (a.size() != f.num_vars()) return false;
  return std::all_of(f.clauses().begin(), f.clauses().end(),
                     [&](const Clause& c) {
                       return evaluate(c.first, a) || evaluate(c.second, a);
                     });
}

namespace {

constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();

// Compressed adjacency of the implication graph.
struct Graph {
  std::vector<std::uint32_t> offsets;
  std::vector<std::uint32_t> targets;
};

Graph build_implications(const Formula& f) {
  const std::uint32_t n = 2 * f.num_vars();
  Graph g;
  g.offsets.assign(n + 1, 0);
  for (const auto& [a, b] : f.clauses()) {
    ++g.offsets[(~a).node() + 1];
    ++g.offsets[(~b).node() + 1];
  }
  for (std::uint32_t i = 0; i < n; ++i) g.offsets[i + 1] += g.offsets[i];
  g.targets.resize(g.offsets[n]);
  std::vector<std::uint32_t> fill(g.offsets.begin(), g.offsets.end() - 1);
  for (const auto& [a, b] : f.clauses()) {
    g.targets[fill[(~a).node()]++] = b.node();
    g.targets[fill[(~b).node()]++] = a.node();
  }
  return g;
}

// Component ids come out in reverse topological order: sinks first.
std::vector<std::uint32_t> tarjan(const Graph& g) {
  const std::uint32_t n = static_cast<std::uint32_t>(g.offsets.size() - 1);
  std::vector<std::uint32_t> index(n, kUnvisited), low(n, 0), comp(n, kUnvisited);
  std::vector<std::uint32_t> stack;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> call;  // node, next edge
  std::uint32_t counter = 0;
  std::uint32_t ncomp = 0;

  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.emplace_back(root, g.offsets[root]);
    index[root] = low[root] = counter++;
    stack.push_back(root);

    while (!call.empty()) {
      auto& [v, edge] = call.back();
      if (edge < g.offsets[v + 1]) {
        std::uint32_t w = g.targets[edge++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          call.emplace_back(w, g.offsets[w]);
        } else if (comp[w] == kUnvisited) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      std::uint32_t done = v;
      call.pop_back();
      if (low[done] == index[done]) {
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          comp[w] = ncomp;
        } while (w != done);
        ++ncomp;
      }
      if (!call.empty()) {
        std::uint32_t parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }
  return comp;
}

}  // namespace

std::optional<Assignment> solve(const Formula& f) {
  const auto comp = tarjan(build_implications(f));
  Assignment values(f.num_vars(), false);
  for (Var v = 0; v < f.num_vars(); ++v) {
    const auto pos = comp[Lit::pos(v).node()];
    const auto neg = comp[Lit::neg(v).node()];
    if (pos == neg) return std::nullopt;
    // The literal whose component is closer to a sink is set true.
    values[v] = pos < neg;
  }
  return values;
}

}  // namespace rstab::twosat
