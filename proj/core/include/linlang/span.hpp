#pragma once

#include <cstdint>

namespace linlang {

// Source location of a token or term. 1-based line/column, length in
// characters. Synthetic nodes (inserted by the parser) use length 0.
struct Span {
    int line = 1;
    int column = 1;
    int length = 1;

    bool operator==(const Span&) const = default;
};

} // namespace linlang
