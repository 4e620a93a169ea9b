#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <vector>

namespace bnrsat {

using Var = std::uint32_t;

// A literal is stored as 2*var + sign, so the two polarities of a variable
// are adjacent and sorting by code orders by variable, positive first.
class Literal {
 public:
  constexpr Literal() = default;

  static constexpr Literal positive(Var v) { return Literal{v << 1}; }
  static constexpr Literal negative(Var v) { return Literal{(v << 1) | 1u}; }
  static constexpr Literal from_code(std::uint32_t code) { return Literal{code}; }
  // Throws std::invalid_argument for 0.
  static Literal from_dimacs(int value);

  constexpr Var var() const { return code_ >> 1; }
  constexpr bool is_negative() const { return (code_ & 1u) != 0; }
  constexpr std::uint32_t code() const { return code_; }
  int to_dimacs() const;

  constexpr Literal operator~() const { return Literal{code_ ^ 1u}; }

  constexpr auto operator<=>(const Literal&) const = default;

 private:
  constexpr explicit Literal(std::uint32_t code) : code_(code) {}
  std::uint32_t code_ = 0;
};

std::ostream& operator<<(std::ostream& os, Literal lit);

// Clauses are kept sorted by literal code with no repeats.
using Clause = std::vector<Literal>;

enum class Value : std::uint8_t { False = 0, True = 1, Unassigned = 2 };

// Partial map from variables 1..num_vars to {0, 1}.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(Var num_vars) : values_(num_vars + 1, Value::Unassigned) {}

  Var num_vars() const { return values_.empty() ? 0 : static_cast<Var>(values_.size() - 1); }
  void resize(Var num_vars) { values_.resize(num_vars + 1, Value::Unassigned); }

  Value value(Var v) const { return v < values_.size() ? values_[v] : Value::Unassigned; }
  bool assigned(Var v) const { return value(v) != Value::Unassigned; }
  void set(Var v, bool truth);
  // Makes `lit` true.
  void set(Literal lit) { set(lit.var(), !lit.is_negative()); }

  bool is_true(Literal lit) const;
  bool is_false(Literal lit) const;
  bool satisfies(const Clause& clause) const;
  bool satisfies_dimacs(const std::vector<int>& clause) const;

  bool complete() const;
  // Unassigned variables become 0.
  void complete_with_default();

  bool operator==(const Assignment&) const = default;

 private:
  std::vector<Value> values_;
};

}  // namespace bnrsat

template <>
struct std::hash<bnrsat::Literal> {
  std::size_t operator()(bnrsat::Literal lit) const noexcept { return lit.code(); }
};
