#include "bnrsat/literal.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace bnrsat {

Literal Literal::from_dimacs(int value) {
  if (value == 0) throw std::invalid_argument("literal 0 is not a literal");
  const auto v = static_cast<Var>(std::abs(value));
  return value > 0 ? positive(v) : negative(v);
}

int Literal::to_dimacs() const {
  const int v = static_cast<int>(var());
  return is_negative() ? -v : v;
}

std::ostream& operator<<(std::ostream& os, Literal lit) { return os << lit.to_dimacs(); }

void Assignment::set(Var v, bool truth) {
  if (v >= values_.size()) values_.resize(v + 1, Value::Unassigned);
  values_[v] = truth ? Value::True : Value::False;
}

bool Assignment::is_true(Literal lit) const {
  const Value val = value(lit.var());
  if (val == Value::Unassigned) return false;
  return (val == Value::True) != lit.is_negative();
}

bool Assignment::is_false(Literal lit) const {
  const Value val = value(lit.var());
  if (val == Value::Unassigned) return false;
  return (val == Value::True) == lit.is_negative();
}

bool Assignment::satisfies(const Clause& clause) const {
  return std::any_of(clause.begin(), clause.end(), [&](Literal l) { return is_true(l); });
}

bool Assignment::satisfies_dimacs(const std::vector<int>& clause) const {
  return std::any_of(clause.begin(), clause.end(),
                     [&](int l) { return is_true(Literal::from_dimacs(l)); });
}

bool Assignment::complete() const {
  return std::all_of(values_.begin() + (values_.empty() ? 0 : 1), values_.end(),
                     [](Value v) { return v != Value::Unassigned; });
}

void Assignment::complete_with_default() {
  for (std::size_t v = 1; v < values_.size(); ++v)
    if (values_[v] == Value::Unassigned) values_[v] = Value::False;
}

}  // namespace bnrsat
