#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bnrsat/formula.hpp"
#include "bnrsat/verdict.hpp"

namespace bnrsat {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct NormalizationLog {
  std::size_t tautologies_removed = 0;
  std::size_t duplicates_removed = 0;  // repeated literals dropped inside clauses
  bool count_mismatch = false;         // header clause count differs from actual
  bool vars_extended = false;          // a literal exceeded the declared variable count
};

struct ParsedInstance {
  Var declared_vars = 0;
  std::size_t declared_clauses = 0;
  Formula formula;
  // Clauses exactly as read, before tautology removal and literal dedup.
  std::vector<std::vector<int>> raw_clauses;
  NormalizationLog log;
};

ParsedInstance parse_dimacs(std::istream& in);
ParsedInstance parse_dimacs(std::string_view text);

// "s SATISFIABLE\nv <lits> 0\n" or "s UNSATISFIABLE\n".
std::string emit_result(const Verdict& verdict);

// Header plus one line per live clause, in id order.
std::string emit_dimacs(const Formula& f);

}  // namespace bnrsat
