#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bnrsat/dimacs.hpp"
#include "bnrsat/generator.hpp"
#include "cli.hpp"
#include "fixtures.hpp"

namespace bnrsat::cli {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("bnrsat_cli_test_" + name);
}

std::string dimacs_of(const std::vector<std::vector<int>>& cs) { return emit_dimacs(Formula::from_dimacs(cs)); }

TEST(Cli, SolveUnitInstance) {
  const CliRun r = run({"solve", "-"}, "p cnf 1 1\n1 0\n");
  EXPECT_EQ(r.code, kSat);
  EXPECT_EQ(r.out, "s SATISFIABLE\nv 1 0\n");
}

TEST(Cli, SolveUnsat) {
  const CliRun r = run({"solve", "-"}, "p cnf 1 2\n1 0\n-1 0\n");
  EXPECT_EQ(r.code, kUnsat);
  EXPECT_EQ(r.out, "s UNSATISFIABLE\n");
}

TEST(Cli, ModelCoversDeclaredVariables) {
  const CliRun r = run({"solve", "-"}, "p cnf 3 1\n2 0\n");
  EXPECT_EQ(r.out, "s SATISFIABLE\nv -1 2 -3 0\n");
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run({"solve", "-"}, "garbage\n").code, kInputError);
  EXPECT_EQ(run({"solve", "/nonexistent/file.cnf"}).code, kInputError);
  EXPECT_EQ(run({"solve", "--no-such-flag", "-"}, "p cnf 1 1\n1 0\n").code, kInputError);
  EXPECT_EQ(run({}).code, kInputError);
  EXPECT_EQ(run({"solve", "--branch-order", "sideways", "-"}, "p cnf 1 1\n1 0\n").code, kInputError);
}

TEST(Cli, Factor) {
  EXPECT_EQ(run({"factor", "3", "3"}).out, "1.259921\n");
  EXPECT_EQ(run({"factor", "3", "4"}).out, "1.220744\n");
  EXPECT_EQ(run({"factor", "0", "3"}).code, kInputError);
}

TEST(Cli, OracleCheck) {
  const CliRun small = run({"solve", "--oracle-check", "-"}, "p cnf 2 2\n1 2 0\n-1 0\n");
  EXPECT_EQ(small.code, kSat);
  EXPECT_NE(small.err.find("oracle check passed"), std::string::npos);

  const CliRun big = run({"solve", "--oracle-check", "-"}, dimacs_of(testing::kBadMixed));
  EXPECT_TRUE(big.code == kSat || big.code == kUnsat);
  EXPECT_NE(big.err.find("oracle check refused"), std::string::npos);
  EXPECT_NE(big.out.find("s "), std::string::npos);
}

TEST(Cli, BudgetExceeded) {
  const CliRun r = run({"solve", "--node-budget", "0", "-"}, dimacs_of(testing::kBadMixed));
  EXPECT_EQ(r.code, kBudgetExceeded);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, StatsDocumentHasExactlyTheFixedFields) {
  const auto path = temp_file("stats.json");
  const CliRun r = run({"solve", "--stats", path.string(), "-"}, dimacs_of(testing::kBadUniform33));
  ASSERT_TRUE(r.code == kSat || r.code == kUnsat);
  std::ifstream in(path);
  const auto doc = nlohmann::json::parse(in);
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  const std::vector<std::string> expected = {"audit_violations", "branching_nodes", "case_tallies", "elapsed_ms",
                                             "m", "max_depth", "n", "potential_ratio", "reductions",
                                             "trace_hash", "verdict"};
  EXPECT_EQ(keys, expected);
  EXPECT_EQ(doc["m"], 24);
  EXPECT_EQ(doc["n"], 12);
  EXPECT_EQ(doc["case_tallies"].size(), kCaseCount);
  EXPECT_EQ(doc["reductions"].size(), 5u);
  EXPECT_EQ(doc["audit_violations"], 0);
  EXPECT_GT(doc["case_tallies"]["Bad-2"].get<int>(), 0);
  std::filesystem::remove(path);
}

TEST(Cli, ExhaustiveAuditKeepsPotentialRatioBelowOne) {
  const auto path = temp_file("exhaustive.json");
  run({"solve", "--exhaustive-audit", "--stats", path.string(), "-"}, dimacs_of(testing::kBadMixed));
  std::ifstream in(path);
  const auto doc = nlohmann::json::parse(in);
  EXPECT_LE(doc["potential_ratio"].get<double>(), 1.0);
  std::filesystem::remove(path);
}

TEST(Cli, AuditVerb) {
  const CliRun r = run({"audit", "-"}, dimacs_of(testing::kBadMixed));
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find(" Bad Bad-1 "), std::string::npos);
  EXPECT_NE(r.out.find("summary verdict="), std::string::npos);
  EXPECT_NE(r.out.find("audit_violations=0"), std::string::npos);
  EXPECT_EQ(r.out.find("VIOLATION"), std::string::npos);
}

TEST(Cli, AuditLogAndTraceGoToStderr) {
  const CliRun r = run({"solve", "--audit", "--trace", "-"}, dimacs_of(testing::kBadMixed));
  EXPECT_NE(r.err.find("Bad-1"), std::string::npos);
  EXPECT_NE(r.err.find("c trace R"), std::string::npos);
  EXPECT_EQ(r.out.rfind("s ", 0), 0u);
}

TEST(Cli, GenIsDeterministicAndParses) {
  const CliRun a = run({"gen", "--seed", "5", "--vars", "12", "--clauses", "30"});
  const CliRun b = run({"gen", "--seed", "5", "--vars", "12", "--clauses", "30"});
  EXPECT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
  const auto parsed = parse_dimacs(a.out);
  EXPECT_EQ(parsed.formula.num_clauses(), 30u);
  GenConfig cfg;
  cfg.seed = 5;
  cfg.n = 12;
  cfg.m = 30;
  EXPECT_EQ(parsed.formula.to_dimacs(), generate(cfg).to_dimacs());

  EXPECT_EQ(run({"gen", "--mode", "degree3", "--vars", "30"}).code, kOk);
  EXPECT_EQ(run({"gen", "--mode", "bogus"}).code, kInputError);
  EXPECT_EQ(run({"gen", "--widths", "1,2"}).code, kInputError);
}

TEST(Cli, BenchRowsAreDeterministic) {
  const std::string manifest = "1 uniform 12 50 0,0,1,0,0\n2 degree3 20 0 0,0,1,0,0\n";
  const CliRun a = run({"bench", "-"}, manifest);
  const CliRun b = run({"bench", "-"}, manifest);
  ASSERT_EQ(a.code, kOk);
  std::istringstream la(a.out);
  std::istringstream lb(b.out);
  std::string x;
  std::string y;
  std::size_t rows = 0;
  while (std::getline(la, x) && std::getline(lb, y)) {
    auto ja = nlohmann::json::parse(x);
    auto jb = nlohmann::json::parse(y);
    EXPECT_EQ(ja["instance"], jb["instance"]);
    ja.erase("elapsed_ms");
    jb.erase("elapsed_ms");
    EXPECT_EQ(ja, jb);
    ++rows;
  }
  EXPECT_EQ(rows, 2u);
}

TEST(Cli, StrictAuditPassesOnSoundInput) {
  EXPECT_EQ(run({"solve", "--strict-audit", "--exhaustive-audit", "-"}, dimacs_of(testing::kBadMixed)).code == kAuditFailed,
            false);
}

TEST(Cli, AuditRecordFormat) {
  SearchNode n;
  n.m = 10;
  n.cls = FormulaClass::Bad;
  n.decision.literal = Literal::from_dimacs(-4);
  n.decision.label = CaseLabel::Bad2;
  n.decision.guaranteed = {{3, 3}};
  n.decision.claims_good = {true, true};
  n.child_m = {7, 6};
  AuditResult res;
  res.ratio = 0.5;
  EXPECT_EQ(format_audit_record({2, n, res}), "2 10 Bad Bad-2 -4 (3*,3*) (3,4) Good,Good 0.500000 OK");
  res.vector_ok = false;
  EXPECT_EQ(format_audit_record({2, n, res}), "2 10 Bad Bad-2 -4 (3*,3*) (3,4) Good,Good 0.500000 VIOLATION:vector");
}

}  // namespace
}  // namespace bnrsat::cli
