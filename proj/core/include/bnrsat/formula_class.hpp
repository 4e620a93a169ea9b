#pragma once

#include <string_view>

namespace bnrsat {

enum class FormulaClass { Good, Bad };

constexpr std::string_view to_string(FormulaClass c) { return c == FormulaClass::Good ? "Good" : "Bad"; }

}  // namespace bnrsat
