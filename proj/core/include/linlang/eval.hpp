#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>

#include "linlang/ast.hpp"
#include "linlang/nonce.hpp"
#include "linlang/value.hpp"

namespace linlang {

struct RuntimeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Per-nonce consumption counts: how many times each nonce (by creation
// ordinal) was passed to a consuming primitive (nonce_get or encrypt).
// The dynamic oracle for the static single-use guarantee.
using UseLedger = std::map<std::uint64_t, int>;

// Call-by-value, left-to-right evaluation. Callers are expected to have
// checked the term first; ill-typed terms may raise RuntimeError.
Value eval(const Term& term, NonceSource& source);

// Evaluation with consumption counting. Type acceptance is not required:
// the oracle must observe misuse in rejected programs too. Every nonce
// created during the run gets a ledger entry, starting at zero.
std::pair<Value, UseLedger> eval_instrumented(const Term& term, NonceSource& source);

} // namespace linlang
