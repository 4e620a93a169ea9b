#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "bnrsat/formula.hpp"

namespace bnrsat {

// The five reduction rules, in priority order.
enum class Rule : std::uint8_t {
  UnitOrPure = 0,     // R1: 1-clauses and pure literals
  Subsumption = 1,    // R2
  Resolution = 2,     // R3: resolve a (1,b>=1)- or (2,2)-literal
  Autarky23 = 3,      // R4: (3+,2)-literals guarding every (2,3+)-clause
  Autarky43 = 4,      // R5: (4,3)-literal autarky
};
inline constexpr std::size_t kRuleCount = 5;

std::string_view rule_name(Rule r);  // "R1" .. "R5"

using RuleCounts = std::array<std::uint64_t, kRuleCount>;

struct ReduceAssign {
  Literal literal;
  Rule rule;
};

// Complete copies of the clauses holding x (with_pos) and ~x (with_neg) at the
// moment x was resolved away.
struct ResolutionEvent {
  Var var = 0;
  std::vector<Clause> with_pos;
  std::vector<Clause> with_neg;
};

struct SubsumptionDelete {
  ClauseId id;
};

struct BranchAssign {
  Literal literal;
  bool first_branch;
};

// Assignment performed by the branch selector without branching.
struct ForcedAssign {
  Literal literal;
};

using TrailEvent =
    std::variant<ReduceAssign, ResolutionEvent, SubsumptionDelete, BranchAssign, ForcedAssign>;
using Trail = std::vector<TrailEvent>;

// One line of the optional reduction trace.
struct RuleApplication {
  Rule rule;
  int subject;  // DIMACS literal (R1, R4, R5), variable (R3) or clause id (R2)
  std::size_t m_before;
  std::size_t m_after;
};
using TraceSink = std::function<void(const RuleApplication&)>;

// Each rule applies at most one instance per call, mutates `f`, appends its
// events to `trail` and reports whether it fired.
bool apply_unit_or_pure(Formula& f, Trail& trail);
bool apply_subsumption(Formula& f, Trail& trail);
bool apply_small_resolution(Formula& f, Trail& trail);
bool apply_autarky_23(Formula& f, Trail& trail);
bool apply_autarky_43(Formula& f, Trail& trail);

// Replaces every clause on `x` by the non-tautological resolvents.
ResolutionEvent resolve_variable(Formula& f, Var x);

// True iff every clause containing the negation of a member of `set` also
// contains a member. Throws std::invalid_argument if `set` holds a
// complementary pair.
bool is_autarkic(const Formula& f, std::span<const Literal> set);

struct ReduceOptions {
  RuleCounts* counts = nullptr;
  const TraceSink* trace = nullptr;
};

// Applies R1 > R2 > R3 > R4 > R5, restarting at R1 after every application,
// until none applies. Once an empty clause exists the remaining clauses are
// all subsumed by it, so the fixpoint is the single empty clause; that state
// is produced directly.
void reduce_fixpoint(Formula& f, Trail& trail, const ReduceOptions& options = {});

// Convenience: R(F) without trail.
Formula reduced(Formula f);

// True if no rule applies to `f`.
bool is_reduced(const Formula& f);

}  // namespace bnrsat
