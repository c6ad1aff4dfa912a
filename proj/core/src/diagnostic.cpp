#include "linlang/diagnostic.hpp"

namespace linlang {

const char* diag_code_name(DiagCode code) {
    switch (code) {
    case DiagCode::UseAfterConsume:
        return "UseAfterConsume";
    case DiagCode::UnusedLinear:
        return "UnusedLinear";
    case DiagCode::UnusedRelevant:
        return "UnusedRelevant";
    case DiagCode::OutOfOrderUse:
        return "OutOfOrderUse";
    case DiagCode::UnboundVariable:
        return "UnboundVariable";
    case DiagCode::TypeMismatch:
        return "TypeMismatch";
    case DiagCode::BranchUseMismatch:
        return "BranchUseMismatch";
    case DiagCode::ArityError:
        return "ArityError";
    case DiagCode::ParseError:
        return "ParseError";
    case DiagCode::LexError:
        return "LexError";
    }
    return "?";
}

} // namespace linlang
