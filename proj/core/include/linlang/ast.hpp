#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "linlang/span.hpp"
#include "linlang/type.hpp"

namespace linlang {

struct Term;
using TermPtr = std::unique_ptr<Term>;

enum class PrimOp {
    NewNonce, // Unit -> Nonce; the only introduction form for Nonce
    NonceGet, // Nonce -> Int; consumes its argument
    Encrypt,  // Int -> Nonce -> Int; consumes its nonce argument
    IntEq,    // Int -> Int -> Bool
    IntAdd,   // Int -> Int -> Int
};

const char* prim_name(PrimOp op);
int prim_arity(PrimOp op);

struct Var {
    std::string name;
};
struct UnitLit {};
struct BoolLit {
    bool value;
};
struct IntLit {
    std::int64_t value;
};
struct Lambda {
    std::string param;
    Type annot;
    TermPtr body;
};
struct App {
    TermPtr fn;
    TermPtr arg;
};
struct Pair {
    TermPtr first;
    TermPtr second;
};
struct LetPair {
    std::string name1;
    std::string name2;
    TermPtr bound;
    TermPtr body;
};
struct Let {
    std::string name;
    TermPtr bound;
    TermPtr body;
};
struct If {
    TermPtr cond;
    TermPtr then_branch;
    TermPtr else_branch;
};
struct Seq {
    TermPtr first;
    TermPtr second;
};
struct Prim {
    PrimOp op;
    std::vector<TermPtr> args;
};

using TermNode =
    std::variant<Var, UnitLit, BoolLit, IntLit, Lambda, App, Pair, LetPair, Let, If, Seq, Prim>;

struct Term {
    Span span;
    TermNode node;

    template <typename T>
    const T* as() const {
        return std::get_if<T>(&node);
    }
};

template <typename T, typename... Args>
TermPtr make_term(Span span, Args&&... args) {
    return std::make_unique<Term>(Term{span, T{std::forward<Args>(args)...}});
}

// Structural equality ignoring spans. Used by round-trip tests.
bool same_structure(const Term& a, const Term& b);

} // namespace linlang
