#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linlang/span.hpp"

namespace linlang {

enum class TokenKind {
    Let,
    In,
    If,
    Then,
    Else,
    Fun,
    True,
    False,
    Ident,
    Int,
    TyUnit,
    TyBool,
    TyInt,
    TyNonce,
    LParen,
    RParen,
    Comma,
    Semi,
    Colon,
    Arrow,
    Star,
    Eq,
    Eof,
};

const char* token_kind_name(TokenKind kind);

struct Token {
    TokenKind kind;
    Span span;
    std::string text;          // identifier spelling
    std::int64_t int_value = 0; // for TokenKind::Int
};

} // namespace linlang
