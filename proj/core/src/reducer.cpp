#include "bnrsat/reducer.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "bnrsat/classify.hpp"

namespace bnrsat {

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::UnitOrPure: return "R1";
    case Rule::Subsumption: return "R2";
    case Rule::Resolution: return "R3";
    case Rule::Autarky23: return "R4";
    case Rule::Autarky43: return "R5";
  }
  return "R?";
}

namespace {

// Literals of live variables, variable ascending, positive first.
std::vector<Literal> live_literals(const Formula& f) {
  std::vector<Literal> out;
  for (Var v : f.live_vars()) {
    out.push_back(Literal::positive(v));
    out.push_back(Literal::negative(v));
  }
  return out;
}

std::vector<ClauseId> sorted_occurrences(const Formula& f, Literal lit) {
  auto occ = f.occurrences(lit);
  std::vector<ClauseId> ids(occ.begin(), occ.end());
  std::sort(ids.begin(), ids.end());
  return ids;
}

void assign_all(Formula& f, Trail& trail, const std::vector<Literal>& lits, Rule rule) {
  for (Literal l : lits) {
    f.assign(l);
    trail.push_back(ReduceAssign{l, rule});
  }
}

}  // namespace

bool apply_unit_or_pure(Formula& f, Trail& trail) {
  for (ClauseId id : f.clause_ids()) {
    if (f.clause(id).size() == 1) {
      const Literal l = f.clause(id).front();
      f.assign(l);
      trail.push_back(ReduceAssign{l, Rule::UnitOrPure});
      return true;
    }
  }
  for (Literal l : live_literals(f)) {
    if (f.degree(l) > 0 && f.degree(~l) == 0) {
      f.assign(l);
      trail.push_back(ReduceAssign{l, Rule::UnitOrPure});
      return true;
    }
  }
  return false;
}

bool apply_subsumption(Formula& f, Trail& trail) {
  const auto ids = f.clause_ids();
  for (ClauseId small_id : ids) {
    const Clause& small = f.clause(small_id);
    std::vector<ClauseId> candidates;
    if (small.empty()) {
      candidates = ids;
    } else {
      Literal best = small.front();
      for (Literal l : small)
        if (f.degree(l) < f.degree(best)) best = l;
      candidates = sorted_occurrences(f, best);
    }
    for (ClauseId big_id : candidates) {
      if (big_id == small_id) continue;
      if (is_subset(small, f.clause(big_id))) {
        f.remove_clause(big_id);
        trail.push_back(SubsumptionDelete{big_id});
        return true;
      }
    }
  }
  return false;
}

ResolutionEvent resolve_variable(Formula& f, Var x) {
  const Literal pos = Literal::positive(x);
  const Literal neg = Literal::negative(x);
  ResolutionEvent event{x, {}, {}};
  const auto pos_ids = sorted_occurrences(f, pos);
  const auto neg_ids = sorted_occurrences(f, neg);
  for (ClauseId id : pos_ids) event.with_pos.push_back(f.clause(id));
  for (ClauseId id : neg_ids) event.with_neg.push_back(f.clause(id));
  for (ClauseId id : pos_ids) f.remove_clause(id);
  for (ClauseId id : neg_ids) f.remove_clause(id);

  Clause resolvent;
  for (const Clause& e : event.with_pos) {
    for (const Clause& d : event.with_neg) {
      resolvent.clear();
      for (Literal l : e)
        if (l != pos) resolvent.push_back(l);
      for (Literal l : d)
        if (l != neg) resolvent.push_back(l);
      std::sort(resolvent.begin(), resolvent.end());
      resolvent.erase(std::unique(resolvent.begin(), resolvent.end()), resolvent.end());
      bool tautology = false;
      for (std::size_t i = 0; i + 1 < resolvent.size(); ++i)
        if (resolvent[i].var() == resolvent[i + 1].var()) tautology = true;
      if (!tautology) f.add_clause(resolvent);
    }
  }
  return event;
}

// (1,b) literals go first: resolving them always removes a clause, while a
// (2,2) resolution can copy the lone clause of a (1,b)-literal and cancel
// that removal.
bool apply_small_resolution(Formula& f, Trail& trail) {
  const auto literals = live_literals(f);
  for (Literal l : literals) {
    const DegreePair d = f.degree_pair(l);
    if (d.pos == 1 && d.neg >= 1) {
      trail.push_back(resolve_variable(f, l.var()));
      return true;
    }
  }
  for (Literal l : literals) {
    const DegreePair d = f.degree_pair(l);
    if (d.pos == 2 && d.neg == 2) {
      trail.push_back(resolve_variable(f, l.var()));
      return true;
    }
  }
  return false;
}

bool is_autarkic(const Formula& f, std::span<const Literal> set) {
  std::unordered_set<Literal> members(set.begin(), set.end());
  for (Literal l : set)
    if (members.contains(~l)) throw std::invalid_argument("autarky candidate holds a complementary pair");
  for (Literal l : set) {
    for (ClauseId id : f.occurrences(~l)) {
      const Clause& c = f.clause(id);
      if (std::none_of(c.begin(), c.end(), [&](Literal y) { return members.contains(y); }))
        return false;
    }
  }
  return true;
}

bool apply_autarky_23(Formula& f, Trail& trail) {
  std::vector<Literal> guards;
  bool any_guarded = false;
  for (Literal l : live_literals(f)) {
    if (is_3plus_2(f, l)) guards.push_back(l);
    if (!is_2_3plus(f, l)) continue;
    any_guarded = true;
    for (ClauseId id : f.occurrences(l)) {
      const Clause& c = f.clause(id);
      if (std::none_of(c.begin(), c.end(), [&](Literal y) { return is_3plus_2(f, y); })) return false;
    }
  }
  // Vacuous premise (no (2,3+)-literal) does not fire.
  if (!any_guarded) return false;
  assign_all(f, trail, guards, Rule::Autarky23);
  return true;
}

bool apply_autarky_43(Formula& f, Trail& trail) {
  std::vector<Literal> set;
  for (Literal l : live_literals(f)) {
    if (!is_degree(f, l, 4, 3)) continue;
    for (ClauseId id : f.occurrences(l)) {
      const Clause& c = f.clause(id);
      if (std::any_of(c.begin(), c.end(), [&](Literal y) { return is_3_3plus(f, y); })) {
        set.push_back(l);
        break;
      }
    }
  }
  if (set.empty()) return false;
  for (Literal l : set) {
    for (ClauseId id : f.occurrences(~l)) {
      const Clause& c = f.clause(id);
      if (std::none_of(c.begin(), c.end(), [&](Literal y) { return is_degree(f, y, 4, 3); }))
        return false;
    }
  }
  assign_all(f, trail, set, Rule::Autarky43);
  return true;
}

namespace {

void collapse_to_empty_clause(Formula& f, Trail& trail, const ReduceOptions& options) {
  ClauseId keep = 0;
  bool kept = false;
  for (ClauseId id : f.clause_ids()) {
    if (!kept && f.clause(id).empty()) {
      keep = id;
      kept = true;
    }
  }
  for (ClauseId id : f.clause_ids()) {
    if (id == keep) continue;
    const std::size_t before = f.num_clauses();
    f.remove_clause(id);
    trail.push_back(SubsumptionDelete{id});
    if (options.counts) ++(*options.counts)[static_cast<std::size_t>(Rule::Subsumption)];
    if (options.trace && *options.trace)
      (*options.trace)({Rule::Subsumption, static_cast<int>(id), before, f.num_clauses()});
  }
}

int trace_subject(const TrailEvent& e) {
  return std::visit(
      [](const auto& ev) -> int {
        using T = std::decay_t<decltype(ev)>;
        if constexpr (std::is_same_v<T, ReduceAssign>) return ev.literal.to_dimacs();
        else if constexpr (std::is_same_v<T, ResolutionEvent>) return static_cast<int>(ev.var);
        else if constexpr (std::is_same_v<T, SubsumptionDelete>) return static_cast<int>(ev.id);
        else return ev.literal.to_dimacs();
      },
      e);
}

}  // namespace

void reduce_fixpoint(Formula& f, Trail& trail, const ReduceOptions& options) {
  using RuleFn = bool (*)(Formula&, Trail&);
  static constexpr std::array<std::pair<Rule, RuleFn>, kRuleCount> rules = {{
      {Rule::UnitOrPure, &apply_unit_or_pure},
      {Rule::Subsumption, &apply_subsumption},
      {Rule::Resolution, &apply_small_resolution},
      {Rule::Autarky23, &apply_autarky_23},
      {Rule::Autarky43, &apply_autarky_43},
  }};

  for (;;) {
    if (f.has_empty_clause()) {
      collapse_to_empty_clause(f, trail, options);
      return;
    }
    bool fired = false;
    for (const auto& [rule, fn] : rules) {
      const std::size_t before = f.num_clauses();
      const std::size_t mark = trail.size();
      if (!fn(f, trail)) continue;
      fired = true;
      if (options.counts) ++(*options.counts)[static_cast<std::size_t>(rule)];
      if (options.trace && *options.trace) {
        // Autarky rules append one event per assigned literal; trace the first.
        (*options.trace)({rule, trace_subject(trail[mark]), before, f.num_clauses()});
      }
      break;
    }
    if (!fired) return;
  }
}

Formula reduced(Formula f) {
  Trail trail;
  reduce_fixpoint(f, trail);
  return f;
}

bool is_reduced(const Formula& f) {
  Trail scratch;
  {
    Formula g = f;
    if (apply_unit_or_pure(g, scratch)) return false;
  }
  {
    Formula g = f;
    if (apply_subsumption(g, scratch)) return false;
  }
  {
    Formula g = f;
    if (apply_small_resolution(g, scratch)) return false;
  }
  {
    Formula g = f;
    if (apply_autarky_23(g, scratch)) return false;
  }
  Formula g = f;
  return !apply_autarky_43(g, scratch);
}

}  // namespace bnrsat
