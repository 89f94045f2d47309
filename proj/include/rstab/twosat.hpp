#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace rstab::twosat {

using Var = std::uint32_t;

struct Lit {
  Var var = 0;
  bool negated = false;

  static Lit pos(Var v) { return {v, false}; }
  static Lit neg(Var v) { return {v, true}; }
  Lit operator~() const { return {var, !negated}; }
  /// Index in the implication graph: 2*var for x, 2*var+1 for not-x.
  std::uint32_t node() const { return 2 * var + (negated ? 1 : 0); }

  friend bool operator==(const Lit&, const Lit&) = default;
};

using Clause = std::pair<Lit, Lit>;
using Assignment = std::vector<bool>;

/// 2-CNF. A unit clause (a) is stored as (a or a).
class Formula {
 public:
  Formula() = default;
  explicit Formula(Var num_vars) : num_vars_(num_vars) {}

  Var num_vars() const { return num_vars_; }
  Var new_var() { return num_vars_++; }
  const std::vector<Clause>& clauses() const { return clauses_; }

  /// Throws std::out_of_range for an unknown variable.
  void add_clause(Lit a, Lit b);
  void add_unit(Lit a) { add_clause(a, a); }

 private:
  Var num_vars_ = 0;
  std::vector<Clause> clauses_;
};

bool evaluate(Lit l, const Assignment& a);
bool satisfies(const Formula& f, const Assignment& a);

/// Implication graph + Tarjan SCC (iterative). nullopt means unsatisfiable.
/// Deterministic for a fixed clause order.
std::optional<Assignment> solve(const Formula& f);

}  // namespace rstab::twosat
