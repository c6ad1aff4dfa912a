// Independent naive simply-typed checker used as the oracle for
// unrestricted-mode equivalence. Deliberately shares no code with the
// production checker: plain environment lookup, no use tracking.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linlang/ast.hpp"
#include "linlang/type.hpp"

namespace linlang::testing {

using StlcEnv = std::vector<std::pair<std::string, Type>>;

inline std::optional<Type> stlc_check(const Term& t, StlcEnv& env) {
    if (auto* v = t.as<Var>()) {
        for (auto it = env.rbegin(); it != env.rend(); ++it)
            if (it->first == v->name)
                return it->second;
        return std::nullopt;
    }
    if (t.as<UnitLit>())
        return Type::unit();
    if (t.as<BoolLit>())
        return Type::boolean();
    if (t.as<IntLit>())
        return Type::integer();
    if (auto* l = t.as<Lambda>()) {
        env.emplace_back(l->param, l->annot);
        auto body = stlc_check(*l->body, env);
        env.pop_back();
        if (!body)
            return std::nullopt;
        return Type::fn(l->annot, *body);
    }
    if (auto* a = t.as<App>()) {
        auto fn = stlc_check(*a->fn, env);
        auto arg = stlc_check(*a->arg, env);
        if (!fn || !arg || fn->kind() != TypeKind::Fn || !(fn->left() == *arg))
            return std::nullopt;
        return fn->right();
    }
    if (auto* p = t.as<Pair>()) {
        auto first = stlc_check(*p->first, env);
        auto second = stlc_check(*p->second, env);
        if (!first || !second)
            return std::nullopt;
        return Type::prod(*first, *second);
    }
    if (auto* l = t.as<Let>()) {
        auto bound = stlc_check(*l->bound, env);
        if (!bound)
            return std::nullopt;
        env.emplace_back(l->name, *bound);
        auto body = stlc_check(*l->body, env);
        env.pop_back();
        return body;
    }
    if (auto* l = t.as<LetPair>()) {
        auto bound = stlc_check(*l->bound, env);
        if (!bound || bound->kind() != TypeKind::Prod)
            return std::nullopt;
        env.emplace_back(l->name1, bound->left());
        env.emplace_back(l->name2, bound->right());
        auto body = stlc_check(*l->body, env);
        env.pop_back();
        env.pop_back();
        return body;
    }
    if (auto* c = t.as<If>()) {
        auto cond = stlc_check(*c->cond, env);
        auto then_type = stlc_check(*c->then_branch, env);
        auto else_type = stlc_check(*c->else_branch, env);
        if (!cond || cond->kind() != TypeKind::Bool || !then_type || !else_type ||
            !(*then_type == *else_type))
            return std::nullopt;
        return then_type;
    }
    if (auto* s = t.as<Seq>()) {
        auto first = stlc_check(*s->first, env);
        if (!first || first->kind() != TypeKind::Unit)
            return std::nullopt;
        return stlc_check(*s->second, env);
    }
    auto* p = t.as<Prim>();
    if (!p)
        return std::nullopt;
    std::vector<Type> args;
    for (const auto& arg : p->args) {
        auto at = stlc_check(*arg, env);
        if (!at)
            return std::nullopt;
        args.push_back(*at);
    }
    auto want = [&](std::initializer_list<Type> params, Type result) -> std::optional<Type> {
        if (args.size() != params.size())
            return std::nullopt;
        std::size_t i = 0;
        for (const Type& param : params)
            if (!(args[i++] == param))
                return std::nullopt;
        return result;
    };
    switch (p->op) {
    case PrimOp::NewNonce:
        return want({Type::unit()}, Type::nonce());
    case PrimOp::NonceGet:
        return want({Type::nonce()}, Type::integer());
    case PrimOp::Encrypt:
        return want({Type::integer(), Type::nonce()}, Type::integer());
    case PrimOp::IntEq:
        return want({Type::integer(), Type::integer()}, Type::boolean());
    case PrimOp::IntAdd:
        return want({Type::integer(), Type::integer()}, Type::integer());
    }
    return std::nullopt;
}

inline bool stlc_accepts(const Term& t) {
    StlcEnv env;
    return stlc_check(t, env).has_value();
}

} // namespace linlang::testing
