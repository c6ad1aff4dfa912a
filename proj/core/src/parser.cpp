#include "linlang/parser.hpp"

#include <algorithm>
#include <optional>

#include "linlang/lexer.hpp"

namespace linlang {

namespace {

std::optional<PrimOp> prim_from_name(std::string_view name) {
    if (name == "new_nonce")
        return PrimOp::NewNonce;
    if (name == "nonce_get")
        return PrimOp::NonceGet;
    if (name == "encrypt")
        return PrimOp::Encrypt;
    if (name == "eq")
        return PrimOp::IntEq;
    if (name == "add")
        return PrimOp::IntAdd;
    return std::nullopt;
}

struct ParseFail {
    Diagnostic diag;
};

class Parser {
public:
    explicit Parser(std::span<const Token> tokens) : tokens_(tokens) {}

    TermPtr run() {
        TermPtr term = parse_expr();
        expect(TokenKind::Eof, "expected end of input");
        return term;
    }

private:
    std::span<const Token> tokens_;
    std::size_t pos_ = 0;
    std::vector<std::string> live_; // binders currently in scope

    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
        return tokens_[i];
    }
    const Token& advance() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }
    bool at(TokenKind kind) const { return peek().kind == kind; }

    [[noreturn]] void fail(Span span, std::string msg) {
        throw ParseFail{Diagnostic{DiagCode::ParseError, span, std::move(msg)}};
    }

    const Token& expect(TokenKind kind, std::string msg) {
        if (!at(kind))
            fail(peek().span, msg + ", got " + token_kind_name(peek().kind));
        return advance();
    }

    std::string expect_binder() {
        const Token& tok = expect(TokenKind::Ident, "expected identifier");
        if (prim_from_name(tok.text))
            fail(tok.span, "'" + tok.text + "' is a reserved primitive name");
        if (std::find(live_.begin(), live_.end(), tok.text) != live_.end())
            fail(tok.span, "shadowing not permitted: '" + tok.text + "' is already bound");
        return tok.text;
    }

    TermPtr parse_expr() {
        const Token& tok = peek();
        if (tok.kind == TokenKind::Let) {
            advance();
            if (at(TokenKind::LParen)) {
                advance();
                std::string n1 = expect_binder();
                expect(TokenKind::Comma, "expected ','");
                live_.push_back(n1); // n1 live so (x, x) patterns are caught
                std::string n2 = expect_binder();
                live_.pop_back();
                expect(TokenKind::RParen, "expected ')'");
                expect(TokenKind::Eq, "expected '='");
                TermPtr bound = parse_expr();
                expect(TokenKind::In, "expected 'in'");
                live_.push_back(n1);
                live_.push_back(n2);
                TermPtr body = parse_expr();
                live_.pop_back();
                live_.pop_back();
                return make_term<LetPair>(tok.span, std::move(n1), std::move(n2),
                                          std::move(bound), std::move(body));
            }
            std::string name = expect_binder();
            expect(TokenKind::Eq, "expected '='");
            TermPtr bound = parse_expr();
            expect(TokenKind::In, "expected 'in'");
            live_.push_back(name);
            TermPtr body = parse_expr();
            live_.pop_back();
            return make_term<Let>(tok.span, std::move(name), std::move(bound), std::move(body));
        }
        if (tok.kind == TokenKind::Fun) {
            advance();
            std::string param = expect_binder();
            expect(TokenKind::Colon, "expected ':'");
            // Annotation stops before '->' so the body arrow is unambiguous;
            // function-typed parameters need parentheses: fun f: (Int -> Int) -> ...
            Type annot = parse_type_prod();
            expect(TokenKind::Arrow, "expected '->'");
            live_.push_back(param);
            TermPtr body = parse_expr();
            live_.pop_back();
            return make_term<Lambda>(tok.span, std::move(param), std::move(annot),
                                     std::move(body));
        }
        if (tok.kind == TokenKind::If) {
            advance();
            TermPtr cond = parse_expr();
            expect(TokenKind::Then, "expected 'then'");
            TermPtr then_branch = parse_expr();
            expect(TokenKind::Else, "expected 'else'");
            TermPtr else_branch = parse_expr();
            return make_term<If>(tok.span, std::move(cond), std::move(then_branch),
                                 std::move(else_branch));
        }
        return parse_seq();
    }

    TermPtr parse_seq() {
        TermPtr term = parse_app();
        while (at(TokenKind::Semi)) {
            Span span = advance().span;
            TermPtr rhs = parse_app();
            term = make_term<Seq>(span, std::move(term), std::move(rhs));
        }
        return term;
    }

    TermPtr parse_app() {
        TermPtr term = parse_atom();
        while (starts_atom(peek().kind)) {
            Span span = peek().span;
            TermPtr arg = parse_atom();
            term = make_term<App>(span, std::move(term), std::move(arg));
        }
        return term;
    }

    static bool starts_atom(TokenKind kind) {
        switch (kind) {
        case TokenKind::Ident:
        case TokenKind::Int:
        case TokenKind::True:
        case TokenKind::False:
        case TokenKind::LParen:
            return true;
        default:
            return false;
        }
    }

    TermPtr parse_atom() {
        const Token& tok = peek();
        switch (tok.kind) {
        case TokenKind::Int:
            advance();
            return make_term<IntLit>(tok.span, tok.int_value);
        case TokenKind::True:
            advance();
            return make_term<BoolLit>(tok.span, true);
        case TokenKind::False:
            advance();
            return make_term<BoolLit>(tok.span, false);
        case TokenKind::Ident: {
            advance();
            if (auto op = prim_from_name(tok.text))
                return parse_prim_call(*op, tok.span);
            return make_term<Var>(tok.span, tok.text);
        }
        case TokenKind::LParen: {
            advance();
            if (at(TokenKind::RParen)) {
                const Token& close = advance();
                Span span{tok.span.line, tok.span.column,
                          close.span.column - tok.span.column + close.span.length};
                return make_term<UnitLit>(span);
            }
            TermPtr first = parse_expr();
            if (at(TokenKind::Comma)) {
                advance();
                TermPtr second = parse_expr();
                expect(TokenKind::RParen, "expected ')'");
                return make_term<Pair>(tok.span, std::move(first), std::move(second));
            }
            expect(TokenKind::RParen, "expected ')' or ','");
            return first;
        }
        default:
            fail(tok.span, std::string("expected expression, got ") + token_kind_name(tok.kind));
        }
    }

    TermPtr parse_prim_call(PrimOp op, Span name_span) {
        expect(TokenKind::LParen, std::string("expected '(' after '") + prim_name(op) + "'");
        std::vector<TermPtr> args;
        if (at(TokenKind::RParen)) {
            const Token& close = advance();
            if (op == PrimOp::NewNonce) {
                // new_nonce() carries an implicit unit argument
                Span span{close.span.line, close.span.column, 0};
                args.push_back(make_term<UnitLit>(span));
            }
        } else {
            args.push_back(parse_expr());
            while (at(TokenKind::Comma)) {
                advance();
                args.push_back(parse_expr());
            }
            expect(TokenKind::RParen, "expected ')'");
        }
        return make_term<Prim>(name_span, op, std::move(args));
    }

    // type := prod ('->' type)?   prod := atom ('*' prod)?
    Type parse_type() {
        Type lhs = parse_type_prod();
        if (at(TokenKind::Arrow)) {
            advance();
            return Type::fn(std::move(lhs), parse_type());
        }
        return lhs;
    }

    Type parse_type_prod() {
        Type lhs = parse_type_atom();
        if (at(TokenKind::Star)) {
            advance();
            return Type::prod(std::move(lhs), parse_type_prod());
        }
        return lhs;
    }

    Type parse_type_atom() {
        const Token& tok = peek();
        switch (tok.kind) {
        case TokenKind::TyUnit:
            advance();
            return Type::unit();
        case TokenKind::TyBool:
            advance();
            return Type::boolean();
        case TokenKind::TyInt:
            advance();
            return Type::integer();
        case TokenKind::TyNonce:
            advance();
            return Type::nonce();
        case TokenKind::LParen: {
            advance();
            Type t = parse_type();
            expect(TokenKind::RParen, "expected ')'");
            return t;
        }
        default:
            fail(tok.span, std::string("expected type, got ") + token_kind_name(tok.kind));
        }
    }
};

} // namespace

std::variant<TermPtr, Diagnostic> parse(std::span<const Token> tokens) {
    try {
        return Parser(tokens).run();
    } catch (ParseFail& f) {
        return std::move(f.diag);
    }
}

std::variant<TermPtr, Diagnostic> parse_source(std::string_view source) {
    auto tokens = tokenize(source);
    if (auto* diag = std::get_if<Diagnostic>(&tokens))
        return std::move(*diag);
    return parse(std::get<std::vector<Token>>(tokens));
}

} // namespace linlang
