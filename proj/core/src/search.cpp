#include "bnrsat/search.hpp"

#include <cmath>
#include <optional>
#include <string>

#include "bnrsat/classify.hpp"

namespace bnrsat {

AuditResult audit_node(const SearchNode& node, const PotentialConstants& k) {
  AuditResult r;
  const auto dec = node.decreases();
  r.ratio = potential_ratio(node.child_m[0], node.child_cls[0], node.m, node.cls, k) +
            potential_ratio(node.child_m[1], node.child_cls[1], node.m, node.cls, k);
  r.potential_ok = r.ratio <= 1.0 + 1e-12;

  const auto& g = node.decision.guaranteed.components;
  r.vector_ok = g.size() == 2 && covers(node.decision.guaranteed, {{static_cast<unsigned>(dec[0]),
                                                                    static_cast<unsigned>(dec[1])}});
  for (std::size_t i = 0; i < 2 && i < g.size(); ++i) {
    if (!node.decision.claims_good[i]) continue;
    if (node.child_cls[i] != FormulaClass::Good && dec[i] < g[i] + 1) r.claims_ok = false;
  }
  return r;
}

Assignment reconstruct_model(std::span<const TrailEvent> trail, Assignment leaf, Var num_vars) {
  Assignment a = std::move(leaf);
  a.resize(std::max(num_vars, a.num_vars()));
  // Unfixed variables read as 0, matching the final default.
  auto holds = [&](const Clause& c) {
    for (Literal l : c) {
      const Value v = a.value(l.var());
      const bool truth = v == Value::True;
      if (truth != l.is_negative()) return true;
    }
    return false;
  };
  for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
    std::visit(
        [&](const auto& ev) {
          using T = std::decay_t<decltype(ev)>;
          if constexpr (std::is_same_v<T, ResolutionEvent>) {
            // Evaluate with x unset so only the other literals count.
            a.resize(std::max(a.num_vars(), ev.var));
            Clause dummy;
            bool pos_unsat = false;
            bool neg_unsat = false;
            const Literal px = Literal::positive(ev.var);
            const Literal nx = Literal::negative(ev.var);
            auto without = [&](const Clause& c, Literal drop) {
              dummy.clear();
              for (Literal l : c)
                if (l != drop) dummy.push_back(l);
              return holds(dummy);
            };
            for (const Clause& c : ev.with_pos)
              if (!without(c, px)) pos_unsat = true;
            for (const Clause& c : ev.with_neg)
              if (!without(c, nx)) neg_unsat = true;
            if (pos_unsat && neg_unsat)
              throw std::logic_error("model reconstruction: resolution on " + std::to_string(ev.var) +
                                     " cannot satisfy both sides");
            a.set(ev.var, pos_unsat);
          } else if constexpr (std::is_same_v<T, SubsumptionDelete>) {
            // Subsumed clauses are implied by their subsumer.
          } else {
            a.set(ev.literal);
          }
        },
        *it);
  }
  a.complete_with_default();
  return a;
}

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

void mix(std::uint64_t& h, std::uint64_t value) {
  for (int i = 0; i < 8; ++i) {
    h ^= (value >> (8 * i)) & 0xffu;
    h *= kFnvPrime;
  }
}

bool terminal(const Formula& f) { return f.empty() || f.has_empty_clause(); }

class Searcher {
 public:
  Searcher(const Formula& original, const SolverConfig& config)
      : original_(original), config_(config) {}

  SolveResult run() {
    Formula root = original_;
    Trail trail;
    reduce(root, trail);
    report_.root_m = root.num_clauses();
    report_.root_cls = classify(root);

    const bool sat = search(std::move(root), trail, 0);

    SolveResult result;
    result.verdict.status = sat ? Status::Sat : Status::Unsat;
    if (sat) {
      result.verdict.model = std::move(*model_);
      for (ClauseId id : original_.clause_ids())
        if (!result.verdict.model.satisfies(original_.clause(id)))
          throw std::logic_error("reconstructed model falsifies clause " + std::to_string(id));
    }

    const auto& k = config_.constants;
    const double log_phi = std::log(k.constant(report_.root_cls)) +
                           static_cast<double>(report_.root_m) * std::log(k.base);
    report_.potential_ratio =
        std::exp(std::log(static_cast<double>(report_.branching_nodes) + 1.0) - log_phi);
    mix(hash_, report_.branching_nodes);
    mix(hash_, sat ? 1 : 0);
    report_.trace_hash = hash_;
    result.report = report_;
    return result;
  }

 private:
  void reduce(Formula& f, Trail& trail) {
    ReduceOptions opts;
    opts.counts = &report_.reductions;
    opts.trace = config_.trace ? &config_.trace : nullptr;
    reduce_fixpoint(f, trail, opts);
  }

  void record_violation(const std::string& what) {
    ++report_.audit_violations;
    if (config_.strict_audit) throw AuditViolation(what);
  }

  // `f` is reduced; `trail` leads from the input to `f`.
  bool search(Formula f, Trail& trail, std::size_t depth) {
    BranchDecision decision;
    for (;;) {
      if (f.empty()) {
        if (!model_) model_ = reconstruct_model(trail, Assignment(original_.num_vars()), original_.num_vars());
        return true;
      }
      if (f.has_empty_clause()) return false;
      const FormulaClass cls = classify(f);
      decision = select_branch(f, cls);
      if (!decision.zero_branch) break;

      ++report_.case_tallies[static_cast<std::size_t>(decision.label)];
      mix(hash_, 0xfeedull ^ static_cast<std::uint64_t>(decision.label));
      mix(hash_, decision.literal.code());
      const std::size_t m_before = f.num_clauses();
      trail.push_back(ForcedAssign{decision.literal});
      f.assign(decision.literal);
      reduce(f, trail);
      if (config_.audit) {
        const FormulaClass after = terminal(f) ? FormulaClass::Good : classify(f);
        const double ratio = potential_ratio(f.num_clauses(), after, m_before, cls, config_.constants);
        if (ratio > 1.0 + 1e-12) record_violation("potential grew across a forced assignment");
      }
    }

    if (++report_.branching_nodes > config_.node_budget)
      throw NodeBudgetExceeded("node budget of " + std::to_string(config_.node_budget) + " exceeded");
    report_.max_depth = std::max(report_.max_depth, depth + 1);
    ++report_.case_tallies[static_cast<std::size_t>(decision.label)];

    SearchNode node;
    node.m = f.num_clauses();
    node.cls = classify(f);
    node.decision = decision;

    std::array<std::optional<Formula>, 2> children;
    std::array<Trail, 2> child_trails;
    for (std::size_t side = 0; side < 2; ++side) {
      const Literal lit = side == 0 ? decision.literal : ~decision.literal;
      Formula child = f;
      child.assign(lit);
      reduce(child, child_trails[side]);
      node.child_m[side] = child.num_clauses();
      node.child_cls[side] = terminal(child) ? FormulaClass::Good : classify(child);
      children[side] = std::move(child);
    }

    mix(hash_, static_cast<std::uint64_t>(decision.label));
    mix(hash_, decision.literal.code());
    mix(hash_, (static_cast<std::uint64_t>(node.child_m[0]) << 32) | node.child_m[1]);
    mix(hash_, (static_cast<std::uint64_t>(node.child_cls[0]) << 1) |
                   static_cast<std::uint64_t>(node.child_cls[1]));

    if (config_.audit) {
      const AuditResult result = audit_node(node, config_.constants);
      report_.peak_node_ratio = std::max(report_.peak_node_ratio, result.ratio);
      if (config_.audit_log) config_.audit_log(AuditRecord{depth, node, result});
      if (!result.ok())
        record_violation(std::string("audit failed at ") + std::string(case_name(decision.label)) +
                         " node with m=" + std::to_string(node.m));
    }

    const std::array<std::size_t, 2> order =
        config_.order == BranchOrder::TrueFirst ? std::array<std::size_t, 2>{0, 1}
                                                : std::array<std::size_t, 2>{1, 0};
    bool sat = false;
    for (std::size_t side : order) {
      const std::size_t mark = trail.size();
      const Literal lit = side == 0 ? decision.literal : ~decision.literal;
      trail.push_back(BranchAssign{lit, side == order[0]});
      for (auto& ev : child_trails[side]) trail.push_back(std::move(ev));
      const bool found = search(std::move(*children[side]), trail, depth + 1);
      trail.resize(mark);
      if (found) {
        sat = true;
        if (!config_.exhaustive) break;
      }
    }
    return sat;
  }

  const Formula& original_;
  const SolverConfig& config_;
  SolveReport report_;
  std::optional<Assignment> model_;
  std::uint64_t hash_ = kFnvOffset;
};

}  // namespace

SolveResult solve(const Formula& f, const SolverConfig& config) {
  Searcher searcher(f, config);
  return searcher.run();
}

}  // namespace bnrsat
