// sat_core.hpp — minimal CNF solver used by the bounded-model oracle.
// Chronological DPLL with unit propagation over occurrence lists.  Branching
// is fixed (lowest unassigned variable, false first), so results and found
// models are deterministic.  Internal to the oracle; not installed.

#ifndef FREEDL_SAT_CORE_HPP
#define FREEDL_SAT_CORE_HPP

#include <cstdint>
#include <vector>

namespace freedl::sat {

// Literal encoding: var v (0-based) positive = 2v, negative = 2v+1.
inline int pos(int v) { return 2 * v; }
inline int neg(int v) { return 2 * v + 1; }
inline int lit_var(int l) { return l >> 1; }
inline bool lit_sign(int l) { return (l & 1) == 0; }  // true = positive
inline int lit_negate(int l) { return l ^ 1; }

enum class SolveResult { Sat, Unsat, Capped };

class Solver {
 public:
  int new_var() {
    value_.push_back(kUnassigned);
    occ_.emplace_back();
    occ_.emplace_back();
    return var_count_++;
  }

  // Adding an empty clause makes the instance trivially unsatisfiable.
  void add_clause(std::vector<int> lits) {
    if (lits.empty()) {
      trivially_unsat_ = true;
      return;
    }
    int idx = static_cast<int>(clauses_.size());
    for (int l : lits) occ_[static_cast<size_t>(l)].push_back(idx);
    clauses_.push_back(std::move(lits));
  }
  void add_unit(int l) { add_clause({l}); }
  void add_binary(int a, int b) { add_clause({a, b}); }
  void add_ternary(int a, int b, int c) { add_clause({a, b, c}); }

  // aux <-> (l1 and l2 and ...)
  int def_and(const std::vector<int>& lits) {
    int v = new_var();
    std::vector<int> big{pos(v)};
    for (int l : lits) {
      add_binary(neg(v), l);
      big.push_back(lit_negate(l));
    }
    add_clause(big);
    return v;
  }
  // aux <-> (l1 or l2 or ...)
  int def_or(const std::vector<int>& lits) {
    int v = new_var();
    std::vector<int> big{neg(v)};
    for (int l : lits) {
      add_binary(pos(v), lit_negate(l));
      big.push_back(l);
    }
    add_clause(big);
    return v;
  }

  SolveResult solve(std::int64_t decision_budget) {
    if (trivially_unsat_) return SolveResult::Unsat;
    trail_.clear();
    trail_lim_.clear();
    std::fill(value_.begin(), value_.end(), kUnassigned);
    // Assert existing units up front.
    for (std::size_t i = 0; i < clauses_.size(); ++i)
      if (clauses_[i].size() == 1 && !enqueue(clauses_[i][0])) return SolveResult::Unsat;
    if (!propagate()) return SolveResult::Unsat;

    std::int64_t decisions = 0;
    int next_var = 0;
    for (;;) {
      while (next_var < var_count_ && value_[static_cast<size_t>(next_var)] != kUnassigned)
        ++next_var;
      if (next_var == var_count_) return SolveResult::Sat;
      if (++decisions > decision_budget) return SolveResult::Capped;
      trail_lim_.push_back(static_cast<int>(trail_.size()));
      decision_var_.push_back(next_var);
      decision_tried_both_.push_back(false);
      enqueue(neg(next_var));  // false first
      while (!propagate()) {
        int v;
        if (!backtrack(v)) return SolveResult::Unsat;
        next_var = 0;
        (void)v;
      }
    }
  }

  bool model_value(int v) const { return value_[static_cast<size_t>(v)] == kTrue; }

 private:
  static constexpr std::int8_t kUnassigned = 0, kTrue = 1, kFalse = -1;

  bool lit_true(int l) const {
    std::int8_t v = value_[static_cast<size_t>(lit_var(l))];
    return lit_sign(l) ? v == kTrue : v == kFalse;
  }
  bool lit_false(int l) const {
    std::int8_t v = value_[static_cast<size_t>(lit_var(l))];
    return lit_sign(l) ? v == kFalse : v == kTrue;
  }

  bool enqueue(int l) {
    if (lit_true(l)) return true;
    if (lit_false(l)) return false;
    value_[static_cast<size_t>(lit_var(l))] = lit_sign(l) ? kTrue : kFalse;
    trail_.push_back(l);
    return true;
  }

  // Scan clauses touched by newly falsified literals; returns false on conflict.
  bool propagate() {
    for (std::size_t qh = prop_head_(); qh < trail_.size(); ++qh) {
      int falsified = lit_negate(trail_[qh]);
      for (int ci : occ_[static_cast<size_t>(falsified)]) {
        const std::vector<int>& cl = clauses_[static_cast<size_t>(ci)];
        int unassigned = -1;
        bool satisfied = false;
        int free_count = 0;
        for (int l : cl) {
          if (lit_true(l)) {
            satisfied = true;
            break;
          }
          if (!lit_false(l)) {
            ++free_count;
            unassigned = l;
            if (free_count > 1) break;
          }
        }
        if (satisfied || free_count > 1) continue;
        if (free_count == 0) {
          head_ = trail_.size();
          return false;
        }
        enqueue(unassigned);
      }
      head_ = qh + 1;
    }
    return true;
  }
  std::size_t prop_head_() { return head_; }

  // Undo to the most recent decision with an untried branch; flip it.
  bool backtrack(int& flipped_var) {
    while (!trail_lim_.empty()) {
      int lim = trail_lim_.back();
      bool tried_both = decision_tried_both_.back();
      int dvar = decision_var_.back();
      while (static_cast<int>(trail_.size()) > lim) {
        value_[static_cast<size_t>(lit_var(trail_.back()))] = kUnassigned;
        trail_.pop_back();
      }
      head_ = trail_.size();
      trail_lim_.pop_back();
      decision_var_.pop_back();
      decision_tried_both_.pop_back();
      if (!tried_both) {
        trail_lim_.push_back(static_cast<int>(trail_.size()));
        decision_var_.push_back(dvar);
        decision_tried_both_.push_back(true);
        enqueue(pos(dvar));  // second branch: true
        flipped_var = dvar;
        return true;
      }
    }
    return false;
  }

  int var_count_ = 0;
  bool trivially_unsat_ = false;
  std::vector<std::int8_t> value_;
  std::vector<std::vector<int>> clauses_;
  std::vector<std::vector<int>> occ_;  // per literal
  std::vector<int> trail_;
  std::vector<int> trail_lim_;
  std::vector<int> decision_var_;
  std::vector<bool> decision_tried_both_;
  std::size_t head_ = 0;
};

}  // namespace freedl::sat

#endif  // FREEDL_SAT_CORE_HPP
