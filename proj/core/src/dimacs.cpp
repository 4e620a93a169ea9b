#include "bnrsat/dimacs.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

namespace bnrsat {

std::string_view to_string(Status s) { return s == Status::Sat ? "SAT" : "UNSAT"; }

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

bool parse_int(std::string_view token, long long& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

void finish_clause(ParsedInstance& inst, std::vector<int>& raw) {
  std::vector<int> lits = raw;
  std::sort(lits.begin(), lits.end());
  const auto before = lits.size();
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  const auto dups = before - lits.size();

  bool tautology = false;
  for (int l : lits)
    if (l > 0 && std::binary_search(lits.begin(), lits.end(), -l)) tautology = true;

  inst.raw_clauses.push_back(raw);
  raw.clear();
  if (tautology) {
    ++inst.log.tautologies_removed;
    return;
  }
  inst.log.duplicates_removed += dups;
  std::vector<Literal> clause;
  clause.reserve(lits.size());
  for (int l : lits) clause.push_back(Literal::from_dimacs(l));
  inst.formula.add_clause(clause);
}

}  // namespace

ParsedInstance parse_dimacs(std::istream& in) {
  ParsedInstance inst;
  bool have_header = false;
  std::vector<int> current;
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens[0][0] == 'c') continue;
    if (tokens[0] == "%") break;  // SATLIB end marker
    if (tokens[0][0] == 'p') {
      if (have_header) throw ParseError(line_no, "duplicate header");
      if (tokens.size() != 4 || tokens[0] != "p" || tokens[1] != "cnf")
        throw ParseError(line_no, "malformed header, expected 'p cnf <vars> <clauses>'");
      long long n = 0;
      long long m = 0;
      if (!parse_int(tokens[2], n) || !parse_int(tokens[3], m) || n < 0 || m < 0 ||
          n > std::numeric_limits<int>::max())
        throw ParseError(line_no, "malformed header counts");
      inst.declared_vars = static_cast<Var>(n);
      inst.declared_clauses = static_cast<std::size_t>(m);
      inst.formula.reserve_vars(inst.declared_vars);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(line_no, "clause data before 'p cnf' header");
    for (std::string_view tok : tokens) {
      long long v = 0;
      if (!parse_int(tok, v)) throw ParseError(line_no, "non-integer token '" + std::string(tok) + "'");
      if (v < -std::numeric_limits<int>::max() || v > std::numeric_limits<int>::max())
        throw ParseError(line_no, "literal out of range");
      if (v == 0) {
        finish_clause(inst, current);
        continue;
      }
      if (static_cast<unsigned long long>(v < 0 ? -v : v) > inst.declared_vars)
        inst.log.vars_extended = true;
      current.push_back(static_cast<int>(v));
    }
  }
  if (!have_header) throw ParseError(line_no, "missing 'p cnf' header");
  if (!current.empty()) finish_clause(inst, current);
  inst.log.count_mismatch = inst.raw_clauses.size() != inst.declared_clauses;
  return inst;
}

ParsedInstance parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

std::string emit_result(const Verdict& verdict) {
  if (verdict.status == Status::Unsat) return "s UNSATISFIABLE\n";
  std::string out = "s SATISFIABLE\nv";
  for (Var v = 1; v <= verdict.model.num_vars(); ++v) {
    const bool truth = verdict.model.value(v) == Value::True;
    out += ' ';
    out += std::to_string(truth ? static_cast<long long>(v) : -static_cast<long long>(v));
  }
  out += " 0\n";
  return out;
}

std::string emit_dimacs(const Formula& f) {
  std::string out = "p cnf " + std::to_string(f.num_vars()) + " " +
                    std::to_string(f.num_clauses()) + "\n";
  for (const auto& clause : f.to_dimacs()) {
    for (int l : clause) {
      out += std::to_string(l);
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

}  // namespace bnrsat
