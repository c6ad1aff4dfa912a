#pragma once

#include <string>
#include <vector>

#include "linlang/mode.hpp"
#include "linlang/span.hpp"

namespace linlang {

enum class DiagCode {
    UseAfterConsume,
    UnusedLinear,
    UnusedRelevant,
    OutOfOrderUse,
    UnboundVariable,
    TypeMismatch,
    BranchUseMismatch,
    ArityError,
    ParseError,
    LexError,
};

const char* diag_code_name(DiagCode code);

struct Diagnostic {
    DiagCode code;
    Span span;
    std::string message;
    Mode mode = Mode::Linear;
};

using Diagnostics = std::vector<Diagnostic>;

} // namespace linlang
