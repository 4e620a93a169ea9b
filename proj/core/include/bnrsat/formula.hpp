#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "bnrsat/literal.hpp"

namespace bnrsat {

using ClauseId = std::uint32_t;

// (a, b) for an (a,b)-literal: a clauses contain the literal, b its negation.
struct DegreePair {
  std::size_t pos = 0;
  std::size_t neg = 0;

  std::size_t total() const { return pos + neg; }
  bool operator==(const DegreePair&) const = default;
};

// CNF formula with stable clause ids and a literal -> clause occurrence index.
//
// Clause ids are never reused: deleting a clause leaves a dead slot, and new
// clauses (resolvents) get fresh ids. Duplicate clauses and empty clauses are
// representable; tautological clauses are not.
class Formula {
 public:
  Formula() = default;
  explicit Formula(Var num_vars);

  // Builds a formula from DIMACS-style integer clauses. Repeated literals
  // collapse; a clause with complementary literals throws.
  static Formula from_dimacs(const std::vector<std::vector<int>>& clauses, Var num_vars = 0);
  static Formula from_dimacs(std::initializer_list<std::initializer_list<int>> clauses);

  // Normalizes (sort, dedup) and inserts. Throws std::invalid_argument on a
  // tautology. Grows the variable universe as needed.
  ClauseId add_clause(std::span<const Literal> literals);
  void remove_clause(ClauseId id);
  // Removes `lit` from the clause; returns false when it was not there.
  bool remove_literal(ClauseId id, Literal lit);

  // In-place conditioning on `lit` = 1: clauses with `lit` are deleted, `~lit`
  // is removed from the rest. Emptied clauses stay as empty clauses.
  void assign(Literal lit);

  Var num_vars() const { return num_vars_; }
  void reserve_vars(Var num_vars);

  std::size_t num_clauses() const { return live_clauses_; }
  std::size_t num_live_vars() const;
  bool empty() const { return live_clauses_ == 0; }
  bool has_empty_clause() const { return empty_clauses_ > 0; }

  bool alive(ClauseId id) const { return id < slots_.size() && slots_[id].alive; }
  const Clause& clause(ClauseId id) const { return slots_[id].literals; }
  // Upper bound on ids ever issued.
  ClauseId id_limit() const { return static_cast<ClauseId>(slots_.size()); }
  std::vector<ClauseId> clause_ids() const;
  // Live clauses, in id order.
  std::vector<Clause> clauses() const;

  // Unordered list of live clause ids containing `lit`.
  std::span<const ClauseId> occurrences(Literal lit) const;
  std::size_t degree(Literal lit) const;
  DegreePair degree_pair(Literal lit) const { return {degree(lit), degree(~lit)}; }

  // Variables with at least one occurrence, ascending.
  std::vector<Var> live_vars() const;

  // Same live clauses re-numbered 0..m-1 in id order.
  Formula compacted() const;

  // Recomputes the occurrence index and counters from clause contents and
  // compares them with the maintained ones.
  bool consistent() const;

  std::vector<std::vector<int>> to_dimacs() const;

 private:
  struct Slot {
    Clause literals;
    bool alive = false;
  };

  void unlink(ClauseId id, Literal lit);

  Var num_vars_ = 0;
  std::vector<Slot> slots_;
  std::vector<std::vector<ClauseId>> occurrences_;  // indexed by literal code
  std::size_t live_clauses_ = 0;
  std::size_t empty_clauses_ = 0;
};

DegreePair degree_pair(const Formula& f, Literal lit);

// Returns F_x as a new formula.
Formula assign_literal(Formula f, Literal lit);

struct CoincidentPair {
  Literal first;
  Literal second;
  std::size_t count = 0;

  bool operator==(const CoincidentPair&) const = default;
};

// Every unordered literal pair that co-occurs in at least two live clauses,
// sorted by (first, second) with first < second.
std::vector<CoincidentPair> coincident_pairs(const Formula& f);
bool has_coincident_pair(const Formula& f);

bool is_subset(const Clause& small, const Clause& big);

}  // namespace bnrsat
