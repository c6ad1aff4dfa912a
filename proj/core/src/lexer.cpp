#include "linlang/lexer.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace linlang {

const char* token_kind_name(TokenKind kind) {
    switch (kind) {
    case TokenKind::Let:
        return "'let'";
    case TokenKind::In:
        return "'in'";
    case TokenKind::If:
        return "'if'";
    case TokenKind::Then:
        return "'then'";
    case TokenKind::Else:
        return "'else'";
    case TokenKind::Fun:
        return "'fun'";
    case TokenKind::True:
        return "'true'";
    case TokenKind::False:
        return "'false'";
    case TokenKind::Ident:
        return "identifier";
    case TokenKind::Int:
        return "integer literal";
    case TokenKind::TyUnit:
        return "'Unit'";
    case TokenKind::TyBool:
        return "'Bool'";
    case TokenKind::TyInt:
        return "'Int'";
    case TokenKind::TyNonce:
        return "'Nonce'";
    case TokenKind::LParen:
        return "'('";
    case TokenKind::RParen:
        return "')'";
    case TokenKind::Comma:
        return "','";
    case TokenKind::Semi:
        return "';'";
    case TokenKind::Colon:
        return "':'";
    case TokenKind::Arrow:
        return "'->'";
    case TokenKind::Star:
        return "'*'";
    case TokenKind::Eq:
        return "'='";
    case TokenKind::Eof:
        return "end of input";
    }
    return "?";
}

namespace {

struct Lexer {
    std::string_view src;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;

    bool done() const { return pos >= src.size(); }
    char peek() const { return src[pos]; }

    char advance() {
        char c = src[pos++];
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        return c;
    }
};

bool ident_start(char c) { return c >= 'a' && c <= 'z'; }
bool ident_cont(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

TokenKind keyword_kind(const std::string& word) {
    if (word == "let")
        return TokenKind::Let;
    if (word == "in")
        return TokenKind::In;
    if (word == "if")
        return TokenKind::If;
    if (word == "then")
        return TokenKind::Then;
    if (word == "else")
        return TokenKind::Else;
    if (word == "fun")
        return TokenKind::Fun;
    if (word == "true")
        return TokenKind::True;
    if (word == "false")
        return TokenKind::False;
    return TokenKind::Ident;
}

} // namespace

std::variant<std::vector<Token>, Diagnostic> tokenize(std::string_view source) {
    Lexer lx{source};
    std::vector<Token> out;

    auto fail = [&](std::string msg) {
        return Diagnostic{DiagCode::LexError, Span{lx.line, lx.col, 1}, std::move(msg)};
    };

    while (!lx.done()) {
        char c = lx.peek();
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            lx.advance();
            continue;
        }

        int line = lx.line, col = lx.col;
        auto emit = [&](TokenKind kind, int length, std::string text = {},
                        std::int64_t value = 0) {
            out.push_back(Token{kind, Span{line, col, length}, std::move(text), value});
        };

        if (ident_start(c)) {
            std::string word;
            while (!lx.done() && ident_cont(lx.peek()))
                word += lx.advance();
            int len = static_cast<int>(word.size());
            TokenKind kind = keyword_kind(word);
            emit(kind, len, kind == TokenKind::Ident ? std::move(word) : std::string{});
            continue;
        }
        if (c >= 'A' && c <= 'Z') {
            std::string word;
            while (!lx.done() && ident_cont(lx.peek()))
                word += lx.advance();
            TokenKind kind;
            if (word == "Unit")
                kind = TokenKind::TyUnit;
            else if (word == "Bool")
                kind = TokenKind::TyBool;
            else if (word == "Int")
                kind = TokenKind::TyInt;
            else if (word == "Nonce")
                kind = TokenKind::TyNonce;
            else
                return Diagnostic{DiagCode::LexError, Span{line, col, static_cast<int>(word.size())},
                                  "unknown type name '" + word + "'"};
            emit(kind, static_cast<int>(word.size()));
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '-' && lx.pos + 1 < source.size() &&
             std::isdigit(static_cast<unsigned char>(source[lx.pos + 1])))) {
            std::string digits;
            digits += lx.advance(); // sign or first digit
            while (!lx.done() && std::isdigit(static_cast<unsigned char>(lx.peek())))
                digits += lx.advance();
            std::int64_t value = 0;
            try {
                value = std::stoll(digits);
            } catch (const std::out_of_range&) {
                return Diagnostic{DiagCode::LexError,
                                  Span{line, col, static_cast<int>(digits.size())},
                                  "integer literal out of 64-bit range"};
            }
            emit(TokenKind::Int, static_cast<int>(digits.size()), {}, value);
            continue;
        }
        switch (c) {
        case '(':
            lx.advance();
            emit(TokenKind::LParen, 1);
            continue;
        case ')':
            lx.advance();
            emit(TokenKind::RParen, 1);
            continue;
        case ',':
            lx.advance();
            emit(TokenKind::Comma, 1);
            continue;
        case ';':
            lx.advance();
            emit(TokenKind::Semi, 1);
            continue;
        case ':':
            lx.advance();
            emit(TokenKind::Colon, 1);
            continue;
        case '*':
            lx.advance();
            emit(TokenKind::Star, 1);
            continue;
        case '=':
            lx.advance();
            emit(TokenKind::Eq, 1);
            continue;
        case '-':
            lx.advance();
            if (!lx.done() && lx.peek() == '>') {
                lx.advance();
                emit(TokenKind::Arrow, 2);
                continue;
            }
            return Diagnostic{DiagCode::LexError, Span{line, col, 1},
                              "stray '-' (expected '->' or a negative literal)"};
        default:
            return fail("unexpected character");
        }
    }

    out.push_back(Token{TokenKind::Eof, Span{lx.line, lx.col, 1}, {}, 0});
    return out;
}

} // namespace linlang
