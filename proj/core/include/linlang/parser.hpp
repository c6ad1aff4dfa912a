#pragma once

#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "linlang/ast.hpp"
#include "linlang/diagnostic.hpp"
#include "linlang/token.hpp"

namespace linlang {

// Parses a token sequence into a Term. Application is left-associative,
// the function arrow is right-associative, `;` desugars to Seq. Shadowing a
// live binding is a parse error.
std::variant<TermPtr, Diagnostic> parse(std::span<const Token> tokens);

// tokenize + parse. The diagnostic is a LexError or ParseError.
std::variant<TermPtr, Diagnostic> parse_source(std::string_view source);

} // namespace linlang
