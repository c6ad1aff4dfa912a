// Random program generator for property tests. Produces scope-correct,
// mostly well-typed terms; a small fraction of deliberately ill-typed
// subterms keeps the reject paths covered.
#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "linlang/ast.hpp"

namespace linlang::testing {

inline TermPtr clone(const Term& t) {
    if (auto* v = t.as<Var>())
        return make_term<Var>(t.span, v->name);
    if (t.as<UnitLit>())
        return make_term<UnitLit>(t.span);
    if (auto* b = t.as<BoolLit>())
        return make_term<BoolLit>(t.span, b->value);
    if (auto* i = t.as<IntLit>())
        return make_term<IntLit>(t.span, i->value);
    if (auto* l = t.as<Lambda>())
        return make_term<Lambda>(t.span, l->param, l->annot, clone(*l->body));
    if (auto* a = t.as<App>())
        return make_term<App>(t.span, clone(*a->fn), clone(*a->arg));
    if (auto* p = t.as<Pair>())
        return make_term<Pair>(t.span, clone(*p->first), clone(*p->second));
    if (auto* l = t.as<LetPair>())
        return make_term<LetPair>(t.span, l->name1, l->name2, clone(*l->bound), clone(*l->body));
    if (auto* l = t.as<Let>())
        return make_term<Let>(t.span, l->name, clone(*l->bound), clone(*l->body));
    if (auto* c = t.as<If>())
        return make_term<If>(t.span, clone(*c->cond), clone(*c->then_branch),
                             clone(*c->else_branch));
    if (auto* s = t.as<Seq>())
        return make_term<Seq>(t.span, clone(*s->first), clone(*s->second));
    auto* p = t.as<Prim>();
    std::vector<TermPtr> args;
    for (const auto& arg : p->args)
        args.push_back(clone(*arg));
    return make_term<Prim>(t.span, p->op, std::move(args));
}

class Generator {
public:
    explicit Generator(std::uint64_t seed) : rng_(seed) {}

    // A random closed program of depth <= max_depth.
    TermPtr program(int max_depth) {
        next_name_ = 0;
        scope_.clear();
        return gen(random_type(2), max_depth);
    }

    // let x = <closed> in let y = <closed> in <body using both>, where the
    // two bindings are independent and safe to swap.
    struct SwappablePair {
        TermPtr original;
        TermPtr swapped;
    };
    SwappablePair swappable(int max_depth) {
        next_name_ = 0;
        scope_.clear();
        Type tx = random_type(1);
        Type ty = random_type(1);
        TermPtr bx = gen(tx, max_depth - 2);
        TermPtr by = gen(ty, max_depth - 2);
        std::string x = fresh_name();
        std::string y = fresh_name();
        scope_.push_back({x, tx});
        scope_.push_back({y, ty});
        TermPtr body = gen(random_type(1), max_depth - 2);
        scope_.clear();

        Span s{1, 1, 1};
        TermPtr original = make_term<Let>(
            s, x, clone(*bx), make_term<Let>(s, y, clone(*by), clone(*body)));
        TermPtr swapped = make_term<Let>(
            s, y, std::move(by), make_term<Let>(s, x, std::move(bx), std::move(body)));
        return {std::move(original), std::move(swapped)};
    }

    // let v0 = .. in ... let vk = .. in add(..) using every binding exactly
    // once, in a random permutation of the introduction order. Accepted in
    // every exchange mode; accepted in ordered mode iff the permutation is
    // the identity.
    TermPtr chain(int bindings) {
        next_name_ = 0;
        scope_.clear();
        Span s{1, 1, 1};
        std::vector<std::string> names;
        std::vector<TermPtr> bounds;
        for (int i = 0; i < bindings; ++i) {
            names.push_back(fresh_name());
            bounds.push_back(gen(Type::integer(), 1));
        }
        std::vector<std::string> order = names;
        std::shuffle(order.begin(), order.end(), rng_);

        TermPtr body = make_term<Var>(s, order[0]);
        for (std::size_t i = 1; i < order.size(); ++i) {
            std::vector<TermPtr> args;
            args.push_back(std::move(body));
            args.push_back(make_term<Var>(s, order[i]));
            body = make_term<Prim>(s, PrimOp::IntAdd, std::move(args));
        }
        for (int i = bindings - 1; i >= 0; --i)
            body = make_term<Let>(s, names[static_cast<std::size_t>(i)],
                                  std::move(bounds[static_cast<std::size_t>(i)]),
                                  std::move(body));
        return body;
    }

private:
    struct Scoped {
        std::string name;
        Type type;
    };

    std::mt19937_64 rng_;
    int next_name_ = 0;
    std::vector<Scoped> scope_;

    int pick(int n) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }
    bool chance(int percent) { return pick(100) < percent; }

    std::string fresh_name() { return "v" + std::to_string(next_name_++); }

    Type random_type(int depth) {
        int roll = pick(depth > 0 ? 6 : 4);
        switch (roll) {
        case 0:
            return Type::unit();
        case 1:
            return Type::boolean();
        case 2:
        case 3:
            return Type::integer();
        case 4:
            return Type::prod(random_type(depth - 1), random_type(depth - 1));
        default:
            return Type::fn(random_type(depth - 1), random_type(depth - 1));
        }
    }

    const Scoped* var_of(const Type& target) {
        std::vector<const Scoped*> matching;
        for (const auto& s : scope_)
            if (s.type == target)
                matching.push_back(&s);
        if (matching.empty())
            return nullptr;
        return matching[static_cast<std::size_t>(pick(static_cast<int>(matching.size())))];
    }

    TermPtr leaf(const Type& target) {
        static const Span s{1, 1, 1};
        if (const Scoped* var = var_of(target); var && chance(70))
            return make_term<Var>(s, var->name);
        switch (target.kind()) {
        case TypeKind::Unit:
            return make_term<UnitLit>(s);
        case TypeKind::Bool:
            return make_term<BoolLit>(s, chance(50));
        case TypeKind::Int:
            return make_term<IntLit>(s, static_cast<std::int64_t>(pick(100)));
        case TypeKind::Nonce: {
            std::vector<TermPtr> args;
            args.push_back(make_term<UnitLit>(s));
            return make_term<Prim>(s, PrimOp::NewNonce, std::move(args));
        }
        case TypeKind::Prod: {
            TermPtr first = leaf(target.left());
            TermPtr second = leaf(target.right());
            return make_term<Pair>(s, std::move(first), std::move(second));
        }
        case TypeKind::Fn: {
            std::string param = fresh_name();
            scope_.push_back({param, target.left()});
            TermPtr body = leaf(target.right());
            scope_.pop_back();
            return make_term<Lambda>(s, std::move(param), target.left(), std::move(body));
        }
        default:
            return make_term<UnitLit>(s);
        }
    }

    TermPtr gen(const Type& target, int depth) {
        static const Span s{1, 1, 1};
        if (depth <= 0)
            return leaf(target);

        // rare deliberate type error
        if (chance(3)) {
            Type wrong = random_type(1);
            if (!(wrong == target))
                return gen(wrong, depth - 1);
        }

        switch (pick(10)) {
        case 0:
            return leaf(target);
        case 1: { // let
            Type bound_type = random_type(1);
            TermPtr bound = gen(bound_type, depth - 1);
            std::string name = fresh_name();
            scope_.push_back({name, bound_type});
            TermPtr body = gen(target, depth - 1);
            scope_.pop_back();
            return make_term<Let>(s, std::move(name), std::move(bound), std::move(body));
        }
        case 2: { // let-pair
            Type a = random_type(1), b = random_type(1);
            TermPtr bound = gen(Type::prod(a, b), depth - 1);
            std::string n1 = fresh_name(), n2 = fresh_name();
            scope_.push_back({n1, a});
            scope_.push_back({n2, b});
            TermPtr body = gen(target, depth - 1);
            scope_.pop_back();
            scope_.pop_back();
            return make_term<LetPair>(s, std::move(n1), std::move(n2), std::move(bound),
                                      std::move(body));
        }
        case 3: { // if
            TermPtr cond = gen(Type::boolean(), depth - 1);
            TermPtr then_branch = gen(target, depth - 1);
            TermPtr else_branch = gen(target, depth - 1);
            return make_term<If>(s, std::move(cond), std::move(then_branch),
                                 std::move(else_branch));
        }
        case 4: { // seq
            TermPtr first = gen(Type::unit(), depth - 1);
            TermPtr second = gen(target, depth - 1);
            return make_term<Seq>(s, std::move(first), std::move(second));
        }
        case 5: { // redex
            Type arg_type = random_type(1);
            std::string param = fresh_name();
            scope_.push_back({param, arg_type});
            TermPtr body = gen(target, depth - 1);
            scope_.pop_back();
            TermPtr fn = make_term<Lambda>(s, std::move(param), arg_type, std::move(body));
            TermPtr arg = gen(arg_type, depth - 1);
            return make_term<App>(s, std::move(fn), std::move(arg));
        }
        case 6: { // primitive producing the target, when one exists
            if (target.kind() == TypeKind::Int) {
                std::vector<TermPtr> args;
                if (chance(40)) {
                    args.push_back(gen(Type::nonce(), depth - 1));
                    return make_term<Prim>(s, PrimOp::NonceGet, std::move(args));
                }
                if (chance(50)) {
                    args.push_back(gen(Type::integer(), depth - 1));
                    args.push_back(gen(Type::nonce(), depth - 1));
                    return make_term<Prim>(s, PrimOp::Encrypt, std::move(args));
                }
                args.push_back(gen(Type::integer(), depth - 1));
                args.push_back(gen(Type::integer(), depth - 1));
                return make_term<Prim>(s, PrimOp::IntAdd, std::move(args));
            }
            if (target.kind() == TypeKind::Bool && chance(50)) {
                std::vector<TermPtr> args;
                args.push_back(gen(Type::integer(), depth - 1));
                args.push_back(gen(Type::integer(), depth - 1));
                return make_term<Prim>(s, PrimOp::IntEq, std::move(args));
            }
            return gen(target, depth - 1);
        }
        case 7: { // pair / lambda introduction when the target asks for one
            if (target.kind() == TypeKind::Prod) {
                TermPtr first = gen(target.left(), depth - 1);
                TermPtr second = gen(target.right(), depth - 1);
                return make_term<Pair>(s, std::move(first), std::move(second));
            }
            if (target.kind() == TypeKind::Fn) {
                std::string param = fresh_name();
                scope_.push_back({param, target.left()});
                TermPtr body = gen(target.right(), depth - 1);
                scope_.pop_back();
                return make_term<Lambda>(s, std::move(param), target.left(), std::move(body));
            }
            return leaf(target);
        }
        default:
            return leaf(target);
        }
    }
};

} // namespace linlang::testing
