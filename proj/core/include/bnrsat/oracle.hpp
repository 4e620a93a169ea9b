#pragma once

#include "bnrsat/formula.hpp"

namespace bnrsat {

inline constexpr Var kOracleMaxVars = 25;

struct OracleResult {
  bool satisfiable = false;
  Assignment model;  // lexicographically first model when satisfiable
};

// Truth-table search over variables 1..f.num_vars(), x1 most significant and
// 0 tried before 1. Throws std::invalid_argument above kOracleMaxVars.
OracleResult solve_exhaustive(const Formula& f);

}  // namespace bnrsat
