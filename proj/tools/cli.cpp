#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bnrsat/analysis.hpp"
#include "bnrsat/generator.hpp"
#include "bnrsat/oracle.hpp"

namespace bnrsat::cli {

namespace {

struct RunConfig {
  std::string verb;
  std::string input = "-";
  std::string stats_path;
  bool audit = false;
  bool strict_audit = false;
  bool exhaustive_audit = false;
  bool oracle_check = false;
  bool trace = false;
  std::uint64_t seed = 0;
  std::uint64_t node_budget = 10'000'000;
  std::string branch_order = "one-first";
  // gen
  Var vars = 10;
  std::size_t clauses = 42;
  std::string widths = "0,0,1,0,0";
  std::string mode = "uniform";
  // factor
  std::vector<unsigned> components;
};

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << v;
  return os.str();
}

std::string vector_with_claims(const BranchDecision& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.guaranteed.components.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(d.guaranteed.components[i]);
    if (i < 2 && d.claims_good[i]) out += '*';
  }
  return out + ")";
}

SolverConfig solver_config(const RunConfig& cfg, std::ostream& err, std::vector<AuditRecord>* records) {
  SolverConfig sc;
  sc.audit = true;
  sc.strict_audit = cfg.strict_audit;
  sc.exhaustive = cfg.exhaustive_audit;
  sc.node_budget = cfg.node_budget;
  sc.order = cfg.branch_order == "zero-first" ? BranchOrder::FalseFirst : BranchOrder::TrueFirst;
  if (records) {
    sc.audit_log = [records](const AuditRecord& r) { records->push_back(r); };
  } else if (cfg.audit) {
    sc.audit_log = [&err](const AuditRecord& r) { err << format_audit_record(r) << '\n'; };
  }
  if (cfg.trace) {
    sc.trace = [&err](const RuleApplication& a) {
      err << "c trace " << rule_name(a.rule) << ' ' << a.subject << ' ' << a.m_before << ' '
          << a.m_after << '\n';
    };
  }
  return sc;
}

ParsedInstance read_input(const std::string& path, std::istream& in) {
  if (path == "-") return parse_dimacs(in);
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open '" + path + "'");
  return parse_dimacs(file);
}

bool write_stats(const std::string& path, const nlohmann::ordered_json& doc, std::ostream& err) {
  if (path.empty()) return true;
  std::ofstream file(path);
  if (!file) {
    err << "c cannot write stats to '" << path << "'\n";
    return false;
  }
  file << doc.dump(2) << '\n';
  return true;
}

bool model_satisfies_raw(const Verdict& v, const ParsedInstance& inst) {
  if (v.status != Status::Sat) return true;
  for (const auto& clause : inst.raw_clauses)
    if (!v.model.satisfies_dimacs(clause)) return false;
  return true;
}

int run_solve(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  ParsedInstance inst = read_input(cfg.input, in);
  if (inst.log.count_mismatch)
    err << "c warning: header declares " << inst.declared_clauses << " clauses, read "
        << inst.raw_clauses.size() << '\n';
  if (inst.log.vars_extended) err << "c warning: literal exceeds declared variable count\n";

  const SolverConfig sc = solver_config(cfg, err, nullptr);
  const auto start = std::chrono::steady_clock::now();
  SolveResult result = solve(inst.formula, sc);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  // Tautologies dropped at parse time never mention new variables, but the
  // declared count may exceed what the formula saw.
  if (result.verdict.status == Status::Sat) {
    result.verdict.model.resize(std::max(inst.formula.num_vars(), inst.declared_vars));
    result.verdict.model.complete_with_default();
  }
  if (!model_satisfies_raw(result.verdict, inst)) {
    err << "c internal error: model does not satisfy the input clauses\n";
    return kAuditFailed;
  }

  int code = result.verdict.status == Status::Sat ? kSat : kUnsat;
  if (cfg.oracle_check) {
    if (inst.formula.num_vars() > kOracleCheckMaxVars) {
      err << "c oracle check refused: " << inst.formula.num_vars() << " variables exceeds the limit of "
          << kOracleCheckMaxVars << '\n';
    } else {
      const bool oracle_sat = solve_exhaustive(inst.formula).satisfiable;
      if (oracle_sat != (result.verdict.status == Status::Sat)) {
        err << "c oracle check FAILED: oracle says " << (oracle_sat ? "SAT" : "UNSAT") << '\n';
        code = kOracleMismatch;
      } else {
        err << "c oracle check passed\n";
      }
    }
  }

  out << emit_result(result.verdict);
  if (!write_stats(cfg.stats_path, stats_json(inst.formula, result, ms), err)) return kInputError;
  return code;
}

int run_audit(RunConfig cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  cfg.exhaustive_audit = true;
  ParsedInstance inst = read_input(cfg.input, in);
  std::vector<AuditRecord> records;
  const SolverConfig sc = solver_config(cfg, err, &records);
  const auto start = std::chrono::steady_clock::now();
  const SolveResult result = solve(inst.formula, sc);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  out << "# depth m class case literal guaranteed decreases child_classes node_ratio result\n";
  for (const auto& r : records) out << format_audit_record(r) << '\n';
  const auto& rep = result.report;
  out << "summary verdict=" << (result.verdict.status == Status::Sat ? "SAT" : "UNSAT")
      << " branching_nodes=" << rep.branching_nodes << " audit_violations=" << rep.audit_violations
      << " peak_node_ratio=" << fixed(rep.peak_node_ratio, 6)
      << " potential_ratio=" << fixed(rep.potential_ratio, 6) << '\n';
  if (!write_stats(cfg.stats_path, stats_json(inst.formula, result, ms), err)) return kInputError;
  return rep.audit_violations == 0 ? kOk : kAuditFailed;
}

int run_factor(const RunConfig& cfg, std::ostream& out) {
  const FactorResult r = branching_factor(BranchingVector{cfg.components});
  out << fixed(r.factor, 6) << '\n';
  return kOk;
}

GenConfig gen_config(const RunConfig& cfg) {
  GenConfig g;
  g.seed = cfg.seed;
  g.n = cfg.vars;
  g.m = cfg.clauses;
  g.mode = parse_gen_mode(cfg.mode);
  std::istringstream ws(cfg.widths);
  std::string w;
  for (std::size_t i = 0; i < 5; ++i) {
    if (!std::getline(ws, w, ',')) throw std::invalid_argument("--widths needs five comma-separated weights");
    g.width_weights[i] = static_cast<std::uint32_t>(std::stoul(w));
  }
  return g;
}

int run_gen(const RunConfig& cfg, std::ostream& out) {
  const GenConfig g = gen_config(cfg);
  out << "c " << format_manifest_line(g) << '\n' << emit_dimacs(generate(g));
  return kOk;
}

int run_bench(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<GenConfig> manifest;
  if (cfg.input == "-") {
    manifest = parse_manifest(in);
  } else {
    std::ifstream file(cfg.input);
    if (!file) throw std::runtime_error("cannot open manifest '" + cfg.input + "'");
    manifest = parse_manifest(file);
  }
  std::ofstream stats_file;
  if (!cfg.stats_path.empty()) {
    stats_file.open(cfg.stats_path);
    if (!stats_file) throw std::runtime_error("cannot write stats to '" + cfg.stats_path + "'");
  }
  RunConfig quiet = cfg;
  quiet.audit = false;
  quiet.trace = false;
  const SolverConfig sc = solver_config(quiet, err, nullptr);
  std::uint64_t violations = 0;
  for (const GenConfig& g : manifest) {
    const Formula f = generate(g);
    const auto start = std::chrono::steady_clock::now();
    const SolveResult result = solve(f, sc);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    violations += result.report.audit_violations;
    nlohmann::ordered_json row;
    row["instance"] = format_manifest_line(g);
    const auto stats = stats_json(f, result, ms);
    for (const auto& [key, value] : stats.items()) row[key] = value;
    out << row.dump() << '\n';
    if (stats_file) stats_file << row.dump() << '\n';
  }
  return violations == 0 ? kOk : kAuditFailed;
}

}  // namespace

nlohmann::ordered_json stats_json(const Formula& input, const SolveResult& result, double elapsed_ms) {
  const SolveReport& rep = result.report;
  nlohmann::ordered_json doc;
  doc["verdict"] = result.verdict.status == Status::Sat ? "SAT" : "UNSAT";
  doc["m"] = input.num_clauses();
  doc["n"] = input.num_live_vars();
  doc["branching_nodes"] = rep.branching_nodes;
  doc["max_depth"] = rep.max_depth;
  nlohmann::ordered_json tallies = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < kCaseCount; ++i)
    tallies[std::string(case_name(static_cast<CaseLabel>(i)))] = rep.case_tallies[i];
  doc["case_tallies"] = tallies;
  nlohmann::ordered_json reductions = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < kRuleCount; ++i)
    reductions[std::string(rule_name(static_cast<Rule>(i)))] = rep.reductions[i];
  doc["reductions"] = reductions;
  doc["audit_violations"] = rep.audit_violations;
  doc["potential_ratio"] = rep.potential_ratio;
  doc["elapsed_ms"] = elapsed_ms;
  doc["trace_hash"] = hex64(rep.trace_hash);
  return doc;
}

std::string format_audit_record(const AuditRecord& r) {
  const SearchNode& n = r.node;
  const auto dec = n.decreases();
  std::ostringstream os;
  os << r.depth << ' ' << n.m << ' ' << to_string(n.cls) << ' ' << case_name(n.decision.label) << ' '
     << n.decision.literal.to_dimacs() << ' ' << vector_with_claims(n.decision) << " (" << dec[0] << ','
     << dec[1] << ") " << to_string(n.child_cls[0]) << ',' << to_string(n.child_cls[1]) << ' '
     << fixed(r.result.ratio, 6) << ' ';
  if (r.result.ok()) {
    os << "OK";
  } else {
    os << "VIOLATION";
    if (!r.result.potential_ok) os << ":potential";
    if (!r.result.vector_ok) os << ":vector";
    if (!r.result.claims_ok) os << ":claims";
  }
  return os.str();
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"bnrsat: branch-and-reduce SAT solver with search-tree audits"};
  app.require_subcommand(1);

  auto add_solver_flags = [&cfg](CLI::App* sub) {
    sub->add_option("--stats", cfg.stats_path, "write the JSON stats document to this path");
    sub->add_flag("--strict-audit", cfg.strict_audit, "abort with exit code 3 on the first audit violation");
    sub->add_flag("--exhaustive-audit", cfg.exhaustive_audit, "explore both branches even after SAT");
    sub->add_flag("--trace", cfg.trace, "print one line per reduction rule application to stderr");
    sub->add_option("--node-budget", cfg.node_budget, "abort after this many branching nodes");
    sub->add_option("--branch-order", cfg.branch_order, "one-first (default) or zero-first")
        ->check(CLI::IsMember({"one-first", "zero-first"}));
  };

  auto* solve_cmd = app.add_subcommand("solve", "solve a DIMACS CNF file ('-' for stdin)");
  solve_cmd->add_option("input", cfg.input, "DIMACS file or '-'");
  solve_cmd->add_flag("--audit", cfg.audit, "write the per-node audit log to stderr");
  solve_cmd->add_flag("--oracle-check", cfg.oracle_check, "cross-check with the exhaustive oracle (n <= 14)");
  add_solver_flags(solve_cmd);

  auto* audit_cmd = app.add_subcommand("audit", "solve in exhaustive-audit mode and print the audit log");
  audit_cmd->add_option("input", cfg.input, "DIMACS file or '-'");
  add_solver_flags(audit_cmd);

  auto* factor_cmd = app.add_subcommand("factor", "print the branching factor of a vector");
  factor_cmd->add_option("components", cfg.components, "branching vector components")->required();

  auto* gen_cmd = app.add_subcommand("gen", "emit a generated instance as DIMACS");
  gen_cmd->add_option("--seed", cfg.seed, "generator seed");
  gen_cmd->add_option("--vars", cfg.vars, "number of variables");
  gen_cmd->add_option("--clauses", cfg.clauses, "number of clauses (uniform and reduced modes)");
  gen_cmd->add_option("--widths", cfg.widths, "weights of clause widths 1..5, e.g. 0,0,1,0,0");
  gen_cmd->add_option("--mode", cfg.mode, "uniform, degree3 or reduced")
      ->check(CLI::IsMember({"uniform", "degree3", "degree3-adversarial", "reduced", "reduced-fuzz"}));

  auto* bench_cmd = app.add_subcommand("bench", "solve every instance of a manifest, one JSON row each");
  bench_cmd->add_option("manifest", cfg.input, "manifest file or '-'");
  add_solver_flags(bench_cmd);

  std::vector<const char*> argv{"bnrsat"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*solve_cmd) return run_solve(cfg, in, out, err);
    if (*audit_cmd) return run_audit(cfg, in, out, err);
    if (*factor_cmd) return run_factor(cfg, out);
    if (*gen_cmd) return run_gen(cfg, out);
    if (*bench_cmd) return run_bench(cfg, in, out, err);
  } catch (const NodeBudgetExceeded& e) {
    err << "c " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const AuditViolation& e) {
    err << "c strict audit: " << e.what() << '\n';
    return kAuditFailed;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace bnrsat::cli
