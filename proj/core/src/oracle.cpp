#include "bnrsat/oracle.hpp"

#include <stdexcept>
#include <string>

namespace bnrsat {

OracleResult solve_exhaustive(const Formula& f) {
  const Var n = f.num_vars();
  if (n > kOracleMaxVars)
    throw std::invalid_argument("exhaustive oracle limited to " + std::to_string(kOracleMaxVars) +
                                " variables, got " + std::to_string(n));

  // Bit (n - v) of the counter holds variable v, so counting upwards walks
  // assignments in lexicographic order.
  struct Masks {
    std::uint32_t pos = 0;
    std::uint32_t neg = 0;
  };
  std::vector<Masks> clauses;
  for (ClauseId id : f.clause_ids()) {
    Masks m;
    for (Literal l : f.clause(id)) {
      const std::uint32_t bit = 1u << (n - l.var());
      (l.is_negative() ? m.neg : m.pos) |= bit;
    }
    clauses.push_back(m);
  }

  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t k = 0; k < total; ++k) {
    const auto a = static_cast<std::uint32_t>(k);
    bool ok = true;
    for (const Masks& c : clauses) {
      if (((a & c.pos) | (~a & c.neg)) == 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    OracleResult r{true, Assignment(n)};
    for (Var v = 1; v <= n; ++v) r.model.set(v, ((a >> (n - v)) & 1u) != 0);
    return r;
  }
  return {false, Assignment(n)};
}

}  // namespace bnrsat
