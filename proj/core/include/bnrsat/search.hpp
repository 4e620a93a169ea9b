#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string_view>

#include "bnrsat/analysis.hpp"
#include "bnrsat/formula.hpp"
#include "bnrsat/formula_class.hpp"
#include "bnrsat/reducer.hpp"
#include "bnrsat/verdict.hpp"

namespace bnrsat {

// Branching cases, in dispatch order. Sub-letters split cases whose proof
// handles several situations with different guarantees.
enum class CaseLabel : std::uint8_t {
  Bad1,          // (3,4)-literal
  Bad2,          // only (3,3)-literals
  Good1,         // (3,5+)- or (4+,4+)-literal
  Good2_1,       // (3,4)-literal and a (2,3+)-literal
  Good2_2_1,     // (4,3)-literal sharing a clause with a (3,3+)-literal
  Good2_2_2a,    // coincident pair with a (3,4)-member
  Good2_2_2b,    // coincident pair of (3,3)-literals
  Good2_2_2c,    // coincident pair of (4,3)-literals
  Good2_2_2d,    // no coincident pair, a 2-clause
  Good3_1_1,
  Good3_1_2,
  Good3_1_3,
  Good3_1_4,
  Good3_1_5,
  Good3_2_1,
  Good3_2_2a,    // {x,y} and {~x,y}: y := 1 without branching
  Good3_2_2b,    // D is a 3-clause
  Good3_2_2c,    // D is a 4+-clause
  Good3_3_1,
  Good3_3_2,
  Good3_4_1,
  Good3_4_2,
  Good3_4_3,
  Good4_1_1,
  Good4_1_2,
  Good4_2,
};
inline constexpr std::size_t kCaseCount = static_cast<std::size_t>(CaseLabel::Good4_2) + 1;

std::string_view case_name(CaseLabel label);  // e.g. "Good-3.1.5"

// Raised when no branching case matches a reduced formula.
class NoCaseMatches : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NodeBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AuditViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BranchDecision {
  Literal literal;
  CaseLabel label = CaseLabel::Good1;
  // Position 0 is the branch literal := 1, position 1 the branch literal := 0.
  BranchingVector guaranteed;
  // A claimed branch leaves a Good formula (or decreases by one more).
  std::array<bool, 2> claims_good{false, false};
  // Set `literal` := 1 and continue reducing; no search node.
  bool zero_branch = false;
};

// Picks the branching literal for a reduced, nonempty formula without empty
// clauses. Ties go to the lowest variable, positive polarity first.
BranchDecision select_branch(const Formula& f, FormulaClass cls);

struct SearchNode {
  std::size_t m = 0;
  FormulaClass cls = FormulaClass::Good;
  BranchDecision decision;
  // Clause counts and classes of R(F_x) and R(F_~x), x the branch literal.
  std::array<std::size_t, 2> child_m{0, 0};
  std::array<FormulaClass, 2> child_cls{FormulaClass::Good, FormulaClass::Good};

  std::array<std::size_t, 2> decreases() const { return {m - child_m[0], m - child_m[1]}; }
};

struct AuditResult {
  double ratio = 0.0;  // (Phi(child_0) + Phi(child_1)) / Phi(F)
  bool potential_ok = true;
  bool vector_ok = true;
  bool claims_ok = true;

  bool ok() const { return potential_ok && vector_ok && claims_ok; }
};

// Terminal children (no clauses, or an empty clause) must carry
// FormulaClass::Good in `node.child_cls`.
AuditResult audit_node(const SearchNode& node, const PotentialConstants& k = {});

enum class BranchOrder { TrueFirst, FalseFirst };

struct AuditRecord {
  std::size_t depth;
  SearchNode node;
  AuditResult result;
};

struct SolverConfig {
  bool audit = true;
  bool strict_audit = false;   // throw AuditViolation on the first violation
  bool exhaustive = false;     // explore both branches even after SAT
  BranchOrder order = BranchOrder::TrueFirst;
  std::uint64_t node_budget = 10'000'000;
  PotentialConstants constants;
  std::function<void(const AuditRecord&)> audit_log;
  TraceSink trace;
};

struct SolveReport {
  std::uint64_t branching_nodes = 0;
  std::size_t max_depth = 0;
  std::array<std::uint64_t, kCaseCount> case_tallies{};
  RuleCounts reductions{};
  std::uint64_t audit_violations = 0;
  // Largest per-node potential ratio seen (<= 1 when every node is sound).
  double peak_node_ratio = 0.0;
  std::size_t root_m = 0;              // clauses of the reduced root
  FormulaClass root_cls = FormulaClass::Good;
  // (branching_nodes + 1) / Phi(reduced root)
  double potential_ratio = 0.0;
  std::uint64_t trace_hash = 0;
};

struct SolveResult {
  Verdict verdict;
  SolveReport report;
};

// Branch-and-reduce search. SAT models are checked against `f` before
// returning; a failed check throws std::logic_error.
SolveResult solve(const Formula& f, const SolverConfig& config = {});

// Replays `trail` backwards on top of `leaf`. Assignment events fix their
// literal; a resolution on x sets x := 1 iff some saved clause with x is
// unsatisfied. Variables nobody fixes read as 0. Throws std::logic_error if a
// clause with x and a clause with ~x are both unsatisfied.
Assignment reconstruct_model(std::span<const TrailEvent> trail, Assignment leaf, Var num_vars);

}  // namespace bnrsat
