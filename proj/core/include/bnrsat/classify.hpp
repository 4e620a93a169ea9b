#pragma once

#include "bnrsat/formula.hpp"
#include "bnrsat/formula_class.hpp"

namespace bnrsat {

// Degree-shape predicates on a literal of `f`. Names follow the (a,b)
// convention: a = degree of the literal, b = degree of its negation, a
// trailing "plus" meaning "at least".
bool is_degree(const Formula& f, Literal x, std::size_t a, std::size_t b);
bool is_2_3plus(const Formula& f, Literal x);   // (2,3+)
bool is_3plus_2(const Formula& f, Literal x);   // (3+,2)
bool is_3_3plus(const Formula& f, Literal x);   // (3,3+)
bool is_3plus_2plus(const Formula& f, Literal x);  // (3+,2+)

// A formula is Bad when all of the following hold:
//  (1) every literal is a (3,3)-, (3,4)- or (4,3)-literal,
//  (2) no two literals co-occur in two clauses,
//  (3) there is no 2-clause,
//  (4) no clause holds both a (4,3)-literal and a (3,3+)-literal.
// Everything else is Good, including the empty formula and formulas holding
// an empty clause.
FormulaClass classify(const Formula& f);

}  // namespace bnrsat
