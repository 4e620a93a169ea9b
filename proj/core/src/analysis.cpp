#include "bnrsat/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace bnrsat {

std::string to_string(const BranchingVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.components.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v.components[i]);
  }
  return out + ")";
}

namespace {

double characteristic(const std::vector<unsigned>& c, double x) {
  double sum = 0.0;
  for (unsigned ci : c) sum += std::pow(x, -static_cast<double>(ci));
  return 1.0 - sum;
}

double characteristic_derivative(const std::vector<unsigned>& c, double x) {
  double sum = 0.0;
  for (unsigned ci : c) sum += ci * std::pow(x, -static_cast<double>(ci) - 1.0);
  return sum;
}

}  // namespace

FactorResult branching_factor(const BranchingVector& v) {
  const auto& c = v.components;
  if (c.empty()) throw std::invalid_argument("branching vector is empty");
  if (std::any_of(c.begin(), c.end(), [](unsigned ci) { return ci == 0; }))
    throw std::invalid_argument("branching vector components must be positive");
  if (c.size() == 1) return {v, 1.0, characteristic(c, 1.0)};

  // f(1) = 1 - l < 0 and f increases on (1, inf); for l = 2 the root is in
  // (1, 2], longer vectors may need a wider bracket.
  double lo = 1.0 + 1e-9;
  double hi = 2.0;
  while (characteristic(c, hi) < 0.0) {
    lo = hi;
    hi *= 2.0;
  }
  for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (characteristic(c, mid) < 0.0 ? lo : hi) = mid;
  }
  double x = 0.5 * (lo + hi);
  for (int i = 0; i < 5; ++i) {
    const double fx = characteristic(c, x);
    const double dfx = characteristic_derivative(c, x);
    if (dfx <= 0.0) break;
    const double next = x - fx / dfx;
    if (!(next > 1.0)) break;
    x = next;
  }
  return {v, x, characteristic(c, x)};
}

bool covers(const BranchingVector& b, const BranchingVector& c) {
  if (b.components.size() != c.components.size())
    throw std::invalid_argument("branching vectors differ in length");
  auto bs = b.components;
  auto cs = c.components;
  std::sort(bs.begin(), bs.end(), std::greater<>());
  std::sort(cs.begin(), cs.end(), std::greater<>());
  for (std::size_t i = 0; i < bs.size(); ++i)
    if (cs[i] < bs[i]) return false;
  return true;
}

double potential(std::size_t m, FormulaClass cls, const PotentialConstants& k) {
  return k.constant(cls) * std::pow(k.base, static_cast<double>(m));
}

double potential_ratio(std::size_t child_m, FormulaClass child_cls, std::size_t parent_m,
                       FormulaClass parent_cls, const PotentialConstants& k) {
  const double exponent = static_cast<double>(child_m) - static_cast<double>(parent_m);
  return k.constant(child_cls) / k.constant(parent_cls) * std::pow(k.base, exponent);
}

}  // namespace bnrsat
