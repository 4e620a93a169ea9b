#include "bnrsat/formula.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace bnrsat {

namespace {

std::uint64_t pair_key(Literal a, Literal b) {
  return (static_cast<std::uint64_t>(a.code()) << 32) | b.code();
}

}  // namespace

Formula::Formula(Var num_vars) { reserve_vars(num_vars); }

Formula Formula::from_dimacs(const std::vector<std::vector<int>>& clauses, Var num_vars) {
  Formula f(num_vars);
  std::vector<Literal> lits;
  for (const auto& raw : clauses) {
    lits.clear();
    for (int v : raw) lits.push_back(Literal::from_dimacs(v));
    f.add_clause(lits);
  }
  return f;
}

Formula Formula::from_dimacs(std::initializer_list<std::initializer_list<int>> clauses) {
  std::vector<std::vector<int>> raw;
  for (const auto& c : clauses) raw.emplace_back(c);
  return from_dimacs(raw);
}

void Formula::reserve_vars(Var num_vars) {
  if (num_vars <= num_vars_) return;
  num_vars_ = num_vars;
  occurrences_.resize(2 * (static_cast<std::size_t>(num_vars) + 1));
}

ClauseId Formula::add_clause(std::span<const Literal> literals) {
  Clause c(literals.begin(), literals.end());
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    if (c[i].var() == c[i + 1].var())
      throw std::invalid_argument("clause contains a literal and its negation");
  }
  for (Literal l : c) {
    if (l.var() == 0) throw std::invalid_argument("variable ids start at 1");
    reserve_vars(l.var());
  }

  const auto id = static_cast<ClauseId>(slots_.size());
  for (Literal l : c) occurrences_[l.code()].push_back(id);
  if (c.empty()) ++empty_clauses_;
  slots_.push_back(Slot{std::move(c), true});
  ++live_clauses_;
  return id;
}

void Formula::unlink(ClauseId id, Literal lit) {
  auto& occ = occurrences_[lit.code()];
  auto it = std::find(occ.begin(), occ.end(), id);
  if (it == occ.end()) throw std::logic_error("occurrence index out of sync");
  *it = occ.back();
  occ.pop_back();
}

void Formula::remove_clause(ClauseId id) {
  if (!alive(id)) throw std::out_of_range("clause id is not live");
  Slot& slot = slots_[id];
  for (Literal l : slot.literals) unlink(id, l);
  if (slot.literals.empty()) --empty_clauses_;
  slot.alive = false;
  slot.literals.clear();
  slot.literals.shrink_to_fit();
  --live_clauses_;
}

bool Formula::remove_literal(ClauseId id, Literal lit) {
  if (!alive(id)) throw std::out_of_range("clause id is not live");
  Clause& c = slots_[id].literals;
  auto it = std::lower_bound(c.begin(), c.end(), lit);
  if (it == c.end() || *it != lit) return false;
  c.erase(it);
  unlink(id, lit);
  if (c.empty()) ++empty_clauses_;
  return true;
}

void Formula::assign(Literal lit) {
  if (lit.var() > num_vars_) return;
  const std::vector<ClauseId> satisfied(occurrences_[lit.code()].begin(),
                                        occurrences_[lit.code()].end());
  for (ClauseId id : satisfied) remove_clause(id);
  const std::vector<ClauseId> shrunk(occurrences_[(~lit).code()].begin(),
                                     occurrences_[(~lit).code()].end());
  for (ClauseId id : shrunk) remove_literal(id, ~lit);
}

std::size_t Formula::num_live_vars() const {
  std::size_t n = 0;
  for (Var v = 1; v <= num_vars_; ++v)
    if (degree(Literal::positive(v)) + degree(Literal::negative(v)) > 0) ++n;
  return n;
}

std::vector<ClauseId> Formula::clause_ids() const {
  std::vector<ClauseId> ids;
  ids.reserve(live_clauses_);
  for (ClauseId id = 0; id < slots_.size(); ++id)
    if (slots_[id].alive) ids.push_back(id);
  return ids;
}

std::vector<Clause> Formula::clauses() const {
  std::vector<Clause> out;
  out.reserve(live_clauses_);
  for (const Slot& s : slots_)
    if (s.alive) out.push_back(s.literals);
  return out;
}

std::span<const ClauseId> Formula::occurrences(Literal lit) const {
  if (lit.code() >= occurrences_.size()) return {};
  return occurrences_[lit.code()];
}

std::size_t Formula::degree(Literal lit) const {
  return lit.code() < occurrences_.size() ? occurrences_[lit.code()].size() : 0;
}

std::vector<Var> Formula::live_vars() const {
  std::vector<Var> vars;
  for (Var v = 1; v <= num_vars_; ++v)
    if (degree(Literal::positive(v)) + degree(Literal::negative(v)) > 0) vars.push_back(v);
  return vars;
}

Formula Formula::compacted() const {
  Formula out(num_vars_);
  for (const Slot& s : slots_)
    if (s.alive) out.add_clause(s.literals);
  return out;
}

bool Formula::consistent() const {
  std::vector<std::vector<ClauseId>> expected(occurrences_.size());
  std::size_t live = 0;
  std::size_t empties = 0;
  for (ClauseId id = 0; id < slots_.size(); ++id) {
    const Slot& s = slots_[id];
    if (!s.alive) {
      if (!s.literals.empty()) return false;
      continue;
    }
    ++live;
    if (s.literals.empty()) ++empties;
    if (!std::is_sorted(s.literals.begin(), s.literals.end())) return false;
    for (std::size_t i = 0; i < s.literals.size(); ++i) {
      const Literal l = s.literals[i];
      if (l.var() == 0 || l.var() > num_vars_) return false;
      if (i > 0 && s.literals[i - 1].var() == l.var()) return false;
      expected[l.code()].push_back(id);
    }
  }
  if (live != live_clauses_ || empties != empty_clauses_) return false;
  for (std::size_t code = 0; code < occurrences_.size(); ++code) {
    auto actual = occurrences_[code];
    std::sort(actual.begin(), actual.end());
    if (actual != expected[code]) return false;
  }
  return true;
}

std::vector<std::vector<int>> Formula::to_dimacs() const {
  std::vector<std::vector<int>> out;
  out.reserve(live_clauses_);
  for (const Slot& s : slots_) {
    if (!s.alive) continue;
    std::vector<int> c;
    c.reserve(s.literals.size());
    for (Literal l : s.literals) c.push_back(l.to_dimacs());
    out.push_back(std::move(c));
  }
  return out;
}

DegreePair degree_pair(const Formula& f, Literal lit) { return f.degree_pair(lit); }

Formula assign_literal(Formula f, Literal lit) {
  f.assign(lit);
  return f;
}

std::vector<CoincidentPair> coincident_pairs(const Formula& f) {
  std::unordered_map<std::uint64_t, std::size_t> counts;
  for (ClauseId id : f.clause_ids()) {
    const Clause& c = f.clause(id);
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) ++counts[pair_key(c[i], c[j])];
  }
  std::vector<CoincidentPair> out;
  for (const auto& [key, n] : counts) {
    if (n < 2) continue;
    out.push_back({Literal::from_code(static_cast<std::uint32_t>(key >> 32)),
                   Literal::from_code(static_cast<std::uint32_t>(key & 0xffffffffu)), n});
  }
  std::sort(out.begin(), out.end(), [](const CoincidentPair& a, const CoincidentPair& b) {
    return std::pair(a.first, a.second) < std::pair(b.first, b.second);
  });
  return out;
}

bool has_coincident_pair(const Formula& f) {
  std::unordered_map<std::uint64_t, std::size_t> counts;
  for (ClauseId id : f.clause_ids()) {
    const Clause& c = f.clause(id);
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j)
        if (++counts[pair_key(c[i], c[j])] >= 2) return true;
  }
  return false;
}

bool is_subset(const Clause& small, const Clause& big) {
  return small.size() <= big.size() &&
         std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace bnrsat
