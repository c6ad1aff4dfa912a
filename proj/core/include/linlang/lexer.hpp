#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "linlang/diagnostic.hpp"
#include "linlang/token.hpp"

namespace linlang {

// Tokenizes UTF-8 source. The token sequence always ends with an Eof token.
// Any character outside the grammar yields a LexError diagnostic.
std::variant<std::vector<Token>, Diagnostic> tokenize(std::string_view source);

} // namespace linlang
