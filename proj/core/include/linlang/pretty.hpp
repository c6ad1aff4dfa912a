#pragma once

#include <string>

#include "linlang/ast.hpp"

namespace linlang {

// Prints a term back to surface syntax. pretty_print(t) reparses to a term
// structurally identical to t.
std::string pretty_print(const Term& term);

} // namespace linlang
