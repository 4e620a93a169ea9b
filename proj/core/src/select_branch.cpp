#include <algorithm>
#include <optional>
#include <string>

#include "bnrsat/classify.hpp"
#include "bnrsat/search.hpp"

namespace bnrsat {

std::string_view case_name(CaseLabel label) {
  static constexpr std::array<std::string_view, kCaseCount> names = {
      "Bad-1",       "Bad-2",       "Good-1",      "Good-2.1",    "Good-2.2.1",
      "Good-2.2.2a", "Good-2.2.2b", "Good-2.2.2c", "Good-2.2.2d", "Good-3.1.1",
      "Good-3.1.2",  "Good-3.1.3",  "Good-3.1.4",  "Good-3.1.5",  "Good-3.2.1",
      "Good-3.2.2a", "Good-3.2.2b", "Good-3.2.2c", "Good-3.3.1",  "Good-3.3.2",
      "Good-3.4.1",  "Good-3.4.2",  "Good-3.4.3",  "Good-4.1.1",  "Good-4.1.2",
      "Good-4.2",
  };
  return names[static_cast<std::size_t>(label)];
}

namespace {

struct Claim {
  unsigned decrease;
  bool good;
};

BranchDecision decide(Literal x, CaseLabel label, Claim on_true, Claim on_false) {
  BranchDecision d;
  d.literal = x;
  d.label = label;
  d.guaranteed.components = {on_true.decrease, on_false.decrease};
  d.claims_good = {on_true.good, on_false.good};
  return d;
}

constexpr Claim plain(unsigned c) { return {c, false}; }
constexpr Claim good(unsigned c) { return {c, true}; }

class Dispatcher {
 public:
  explicit Dispatcher(const Formula& f) : f_(f) {
    for (Var v : f.live_vars()) {
      literals_.push_back(Literal::positive(v));
      literals_.push_back(Literal::negative(v));
    }
    ids_ = f.clause_ids();
  }

  BranchDecision bad() const {
    for (Literal x : literals_)
      if (deg(x, 3, 4)) return decide(x, CaseLabel::Bad1, plain(3), plain(4));
    return decide(literals_.front(), CaseLabel::Bad2, good(3), good(3));
  }

  BranchDecision good_formula() const {
    for (Literal x : literals_) {
      const std::size_t a = f_.degree(x);
      const std::size_t b = f_.degree(~x);
      if (a == 3 && b >= 5) return decide(x, CaseLabel::Good1, plain(3), plain(5));
      if (a >= 4 && b >= 4) return decide(x, CaseLabel::Good1, plain(4), plain(4));
    }
    if (auto x = first_literal([&](Literal l) { return deg(l, 3, 4); })) return case2(*x);
    if (first_literal([&](Literal l) { return is_2_3plus(f_, l); })) return case3();
    return case4();
  }

 private:
  bool deg(Literal l, std::size_t a, std::size_t b) const { return is_degree(f_, l, a, b); }

  template <typename Pred>
  std::optional<Literal> first_literal(Pred pred) const {
    for (Literal l : literals_)
      if (pred(l)) return l;
    return std::nullopt;
  }

  bool has(ClauseId id, Literal l) const {
    const Clause& c = f_.clause(id);
    return std::binary_search(c.begin(), c.end(), l);
  }

  std::vector<ClauseId> with(Literal l) const {
    auto occ = f_.occurrences(l);
    std::vector<ClauseId> ids(occ.begin(), occ.end());
    std::sort(ids.begin(), ids.end());
    return ids;
  }

  bool some_clause_has_both(Literal a, Literal b) const {
    for (ClauseId id : f_.occurrences(a))
      if (has(id, b)) return true;
    return false;
  }

  // The clause other than `skip` holding `l`, for a literal of degree 2.
  ClauseId other_clause(Literal l, ClauseId skip) const {
    for (ClauseId id : with(l))
      if (id != skip) return id;
    throw NoCaseMatches("expected a second clause for a degree-2 literal");
  }

  std::size_t size(ClauseId id) const { return f_.clause(id).size(); }

  [[noreturn]] void fail(const std::string& where) const {
    throw NoCaseMatches("no branching case matches (" + where + ")");
  }

  // ---- Case 2: (3,4)-literals, nothing of degree (3,5+) or (4+,4+) ----
  BranchDecision case2(Literal x) const {
    std::vector<Literal> ys;
    for (Literal l : literals_)
      if (is_2_3plus(f_, l)) ys.push_back(l);

    if (!ys.empty()) {
      for (Literal y : ys)
        if (some_clause_has_both(x, y)) return decide(x, CaseLabel::Good2_1, plain(4), plain(4));
      for (Literal y : ys)
        if (some_clause_has_both(~x, y)) return decide(x, CaseLabel::Good2_1, plain(3), plain(5));
      return decide(x, CaseLabel::Good2_1, good(3), good(4));
    }

    // Only (3,4), (4,3) and (3,3) literals remain.
    std::vector<Literal> y_set;
    for (Literal l : literals_) {
      if (!deg(l, 4, 3)) continue;
      for (ClauseId id : f_.occurrences(l)) {
        const Clause& c = f_.clause(id);
        if (std::any_of(c.begin(), c.end(), [&](Literal z) { return is_3_3plus(f_, z); })) {
          y_set.push_back(l);
          break;
        }
      }
    }
    if (!y_set.empty()) {
      for (Literal cand : y_set) {
        for (ClauseId id : with(~cand)) {
          const Clause& c = f_.clause(id);
          if (std::none_of(c.begin(), c.end(), [&](Literal z) { return deg(z, 4, 3); }))
            return decide(cand, CaseLabel::Good2_2_1, good(4), good(3));
        }
      }
      fail("2.2.1 without a (4,3)-free clause; the (4,3) autarky rule should have fired");
    }

    const auto pairs = coincident_pairs(f_);
    if (!pairs.empty()) {
      for (const auto& p : pairs) {
        if (deg(p.first, 3, 4)) return decide(p.first, CaseLabel::Good2_2_2a, plain(4), plain(4));
        if (deg(p.second, 3, 4)) return decide(p.second, CaseLabel::Good2_2_2a, plain(4), plain(4));
      }
      const auto& p = pairs.front();
      if (deg(p.first, 3, 3) && deg(p.second, 3, 3))
        return decide(x, CaseLabel::Good2_2_2b, good(3), good(4));
      if (deg(p.first, 4, 3) && deg(p.second, 4, 3))
        return decide(p.first, CaseLabel::Good2_2_2c, good(4), good(3));
      fail("2.2.2 coincident pair of mixed degrees");
    }
    for (ClauseId id : ids_)
      if (size(id) == 2) return decide(f_.clause(id)[0], CaseLabel::Good2_2_2d, plain(3), plain(5));
    fail("2.2.2 with neither coincident pair nor 2-clause");
  }

  // ---- Case 3: (2,3+)-literals, no (3,4)/(4,3) ----
  BranchDecision case3() const {
    for (ClauseId id : ids_) {
      if (size(id) != 2) continue;
      const Clause& c = f_.clause(id);
      if (is_3plus_2plus(f_, c[0]) || is_3plus_2plus(f_, c[1])) return case31(id);
    }
    for (ClauseId id : ids_)
      if (size(id) == 2) return case32(id);

    for (ClauseId id : ids_) {
      const Clause& c = f_.clause(id);
      auto x = std::find_if(c.begin(), c.end(), [&](Literal l) { return deg(l, 3, 3); });
      auto y = std::find_if(c.begin(), c.end(), [&](Literal l) { return is_2_3plus(f_, l); });
      if (x == c.end() || y == c.end()) continue;
      const ClauseId c4 = other_clause(*y, id);
      if (has(c4, *x)) return decide(*x, CaseLabel::Good3_3_1, plain(5), plain(3));
      return decide(*x, CaseLabel::Good3_3_2, good(4), good(3));
    }

    for (ClauseId id : ids_) {
      std::vector<Literal> xs;
      for (Literal l : f_.clause(id))
        if (is_2_3plus(f_, l)) xs.push_back(l);
      if (xs.size() < 3) continue;
      xs.resize(3);
      std::array<ClauseId, 3> others{};
      for (std::size_t i = 0; i < 3; ++i) others[i] = other_clause(xs[i], id);

      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
          if (others[i] == others[j]) return decide(xs[i], CaseLabel::Good3_4_1, plain(5), plain(3));
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          if (i != j && has(others[i], ~xs[j]))
            return decide(xs[j], CaseLabel::Good3_4_2, plain(4), plain(4));
      return decide(xs[0], CaseLabel::Good3_4_3, good(4), good(3));
    }
    fail("case 3 exhausted");
  }

  BranchDecision case31(ClauseId cid) const {
    const Clause& c = f_.clause(cid);
    std::vector<std::pair<Literal, Literal>> orients;
    if (is_3plus_2plus(f_, c[0])) orients.emplace_back(c[0], c[1]);
    if (is_3plus_2plus(f_, c[1])) orients.emplace_back(c[1], c[0]);

    for (auto [x, y] : orients) {
      const auto neg = with(~x);
      if (std::all_of(neg.begin(), neg.end(), [&](ClauseId id) { return size(id) == 2; }))
        return decide(x, CaseLabel::Good3_1_1, plain(5), plain(3));
    }
    for (auto [x, y] : orients)
      if (deg(x, 3, 3)) return decide(x, CaseLabel::Good3_1_2, good(3), good(4));

    const auto [x, y] = orients.front();
    if (is_3plus_2(f_, y)) {
      const auto neg = with(~x);
      if (std::all_of(neg.begin(), neg.end(), [&](ClauseId id) { return has(id, y); }))
        return decide(y, CaseLabel::Good3_1_3, plain(5), plain(3));
      return decide(x, CaseLabel::Good3_1_3, good(3), good(4));
    }
    if (!is_2_3plus(f_, y)) fail("3.1 partner literal of unexpected degree");
    if (!some_clause_has_both(y, ~x)) return decide(x, CaseLabel::Good3_1_4, plain(4), plain(4));
    for (ClauseId id : f_.occurrences(x))
      if (id != cid && size(id) == 2) return decide(x, CaseLabel::Good3_1_5, plain(4), plain(4));
    if (f_.degree(x) >= 4) return decide(x, CaseLabel::Good3_1_5, plain(5), good(3));
    return decide(x, CaseLabel::Good3_1_5, good(4), good(3));
  }

  BranchDecision case32(ClauseId cid) const {
    const Literal x = f_.clause(cid)[0];
    const Literal y = f_.clause(cid)[1];
    const ClauseId d = other_clause(y, cid);
    if (!has(d, ~x)) return decide(x, CaseLabel::Good3_2_1, plain(3), plain(5));
    if (size(d) == 2) {
      BranchDecision z;
      z.literal = y;
      z.label = CaseLabel::Good3_2_2a;
      z.zero_branch = true;
      return z;
    }
    if (size(d) == 3) return decide(y, CaseLabel::Good3_2_2b, plain(3), plain(5));
    return decide(x, CaseLabel::Good3_2_2c, good(3), good(4));
  }

  // ---- Case 4: only (3,3)-literals ----
  BranchDecision case4() const {
    for (Literal l : literals_)
      if (!deg(l, 3, 3)) fail("case 4 with a literal that is not (3,3)");
    const auto pairs = coincident_pairs(f_);
    for (const auto& p : pairs)
      if (p.count >= 3) return decide(p.first, CaseLabel::Good4_1_1, plain(6), plain(3));
    if (!pairs.empty()) {
      const Literal x = pairs.front().first;
      for (ClauseId id : f_.occurrences(x))
        if (size(id) == 2) return decide(x, CaseLabel::Good4_1_2, plain(4), plain(4));
      return decide(x, CaseLabel::Good4_1_2, good(4), good(3));
    }
    for (ClauseId id : ids_)
      if (size(id) == 2) return decide(f_.clause(id)[0], CaseLabel::Good4_2, plain(3), plain(5));
    fail("case 4 formula is Bad");
  }

  const Formula& f_;
  std::vector<Literal> literals_;
  std::vector<ClauseId> ids_;
};

}  // namespace

BranchDecision select_branch(const Formula& f, FormulaClass cls) {
  if (f.empty() || f.has_empty_clause())
    throw std::invalid_argument("select_branch needs a nonempty formula without empty clauses");
  Dispatcher dispatch(f);
  return cls == FormulaClass::Bad ? dispatch.bad() : dispatch.good_formula();
}

}  // namespace bnrsat
