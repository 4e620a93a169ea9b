#pragma once

#include <string_view>

#include "bnrsat/literal.hpp"

namespace bnrsat {

enum class Status { Sat, Unsat };

std::string_view to_string(Status s);

struct Verdict {
  Status status = Status::Unsat;
  Assignment model;  // meaningful only when status == Sat
};

}  // namespace bnrsat
