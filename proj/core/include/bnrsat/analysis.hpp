#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bnrsat/formula_class.hpp"

namespace bnrsat {

// Per-branch lower bounds on the clause-count decrease. Position i refers to
// the i-th branch as recorded by the caller.
struct BranchingVector {
  std::vector<unsigned> components;

  bool operator==(const BranchingVector&) const = default;
};

std::string to_string(const BranchingVector& v);

struct FactorResult {
  BranchingVector vector;
  double factor = 1.0;
  double residual = 0.0;  // 1 - sum factor^-c_i at the returned root
};

// Largest real root of 1 - sum_i x^{-c_i}. Bracketed bisection followed by
// Newton polishing; single-component vectors return 1. Throws
// std::invalid_argument on an empty vector or a zero component.
FactorResult branching_factor(const BranchingVector& v);

// `b` covers `c` iff, after sorting both descending, c_i >= b_i for every i.
// Throws std::invalid_argument on a length mismatch.
bool covers(const BranchingVector& b, const BranchingVector& c);

struct PotentialConstants {
  double c1 = 2.0;            // Good formulas
  double c2 = 2.0 / 0.9136;   // Bad formulas
  double base = 1.2226;

  double constant(FormulaClass cls) const { return cls == FormulaClass::Good ? c1 : c2; }
};

// c * base^m with c chosen by class.
double potential(std::size_t m, FormulaClass cls, const PotentialConstants& k = {});

// Phi(child) / Phi(parent) computed without forming base^m, so it stays finite
// for large clause counts.
double potential_ratio(std::size_t child_m, FormulaClass child_cls, std::size_t parent_m,
                       FormulaClass parent_cls, const PotentialConstants& k = {});

}  // namespace bnrsat
