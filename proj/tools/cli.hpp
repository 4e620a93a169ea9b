#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bnrsat/dimacs.hpp"
#include "bnrsat/search.hpp"
#include "json.hpp"

namespace bnrsat::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kBudgetExceeded = 2,
  kAuditFailed = 3,
  kOracleMismatch = 4,
  kSat = 10,
  kUnsat = 20,
};

// Oracle cross-checks are refused above this many variables.
inline constexpr Var kOracleCheckMaxVars = 14;

// Stats document with the fixed field set: verdict, m, n, branching_nodes,
// max_depth, case_tallies, reductions, audit_violations, potential_ratio,
// elapsed_ms, trace_hash.
nlohmann::ordered_json stats_json(const Formula& input, const SolveResult& result, double elapsed_ms);

// One audit log line for a branching node.
std::string format_audit_record(const AuditRecord& record);

// Entry point shared by main() and the tests. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace bnrsat::cli
