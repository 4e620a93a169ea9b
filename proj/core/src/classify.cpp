#include "bnrsat/classify.hpp"

#include <algorithm>

namespace bnrsat {

bool is_degree(const Formula& f, Literal x, std::size_t a, std::size_t b) {
  return f.degree(x) == a && f.degree(~x) == b;
}

bool is_2_3plus(const Formula& f, Literal x) { return f.degree(x) == 2 && f.degree(~x) >= 3; }
bool is_3plus_2(const Formula& f, Literal x) { return f.degree(x) >= 3 && f.degree(~x) == 2; }
bool is_3_3plus(const Formula& f, Literal x) { return f.degree(x) == 3 && f.degree(~x) >= 3; }
bool is_3plus_2plus(const Formula& f, Literal x) { return f.degree(x) >= 3 && f.degree(~x) >= 2; }

FormulaClass classify(const Formula& f) {
  if (f.empty() || f.has_empty_clause()) return FormulaClass::Good;

  for (Var v : f.live_vars()) {
    const DegreePair d = f.degree_pair(Literal::positive(v));
    const bool allowed = (d.pos == 3 && d.neg == 3) || (d.pos == 3 && d.neg == 4) ||
                         (d.pos == 4 && d.neg == 3);
    if (!allowed) return FormulaClass::Good;
  }

  for (ClauseId id : f.clause_ids()) {
    const Clause& c = f.clause(id);
    if (c.size() == 2) return FormulaClass::Good;
    const bool has_43 = std::any_of(c.begin(), c.end(), [&](Literal l) { return is_degree(f, l, 4, 3); });
    const bool has_33p = std::any_of(c.begin(), c.end(), [&](Literal l) { return is_3_3plus(f, l); });
    if (has_43 && has_33p) return FormulaClass::Good;
  }

  if (has_coincident_pair(f)) return FormulaClass::Good;
  return FormulaClass::Bad;
}

}  // namespace bnrsat
