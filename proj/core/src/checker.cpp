#include "linlang/checker.hpp"

#include <algorithm>
#include <cassert>

namespace linlang {

Binding& Context::push(std::string name, Type type, Span span) {
    bindings.push_back(Binding{std::move(name), std::move(type), next_intro++, 0, false, span});
    return bindings.back();
}

Binding* Context::find(std::string_view name) {
    for (auto& b : bindings)
        if (b.name == name)
            return &b;
    return nullptr;
}

std::optional<Type> use_variable(Context& ctx, std::string_view name, Mode mode, Span use_span,
                                 Diagnostics& out) {
    Binding* b = ctx.find(name);
    if (!b) {
        out.push_back(Diagnostic{DiagCode::UnboundVariable, use_span,
                                 "unbound variable '" + std::string(name) + "'", mode});
        return std::nullopt;
    }
    StructuralRuleSet rules = rules_for(mode);

    if (!rules.contraction && b->consumed) {
        // Recovery: keep the binding usable so later errors are still found,
        // but do not grow its use count.
        out.push_back(Diagnostic{DiagCode::UseAfterConsume, use_span,
                                 "variable '" + b->name + "': value used here after move", mode});
        return b->type;
    }

    if (!rules.exchange) {
        // FIFO: the oldest live binding must be consumed first.
        const Binding* oldest = nullptr;
        for (const auto& other : ctx.bindings)
            if (!other.consumed && (!oldest || other.intro_index < oldest->intro_index))
                oldest = &other;
        if (oldest && oldest->intro_index != b->intro_index) {
            out.push_back(Diagnostic{
                DiagCode::OutOfOrderUse, use_span,
                "variable '" + b->name + "' used out of introduction order ('" + oldest->name +
                    "' must be used first)",
                mode});
        }
    }

    b->use_count += 1;
    if (!rules.contraction)
        b->consumed = true;
    return b->type;
}

void exit_scope(Context& ctx, std::size_t index, Mode mode, Diagnostics& out) {
    assert(index < ctx.bindings.size());
    const Binding& b = ctx.bindings[index];
    StructuralRuleSet rules = rules_for(mode);
    if (rules.weakening || b.use_count > 0)
        return;
    if (rules.contraction) {
        out.push_back(Diagnostic{DiagCode::UnusedRelevant, b.span,
                                 "variable '" + b.name +
                                     "' is never used (must be used at least once)",
                                 mode});
    } else {
        out.push_back(Diagnostic{DiagCode::UnusedLinear, b.span,
                                 "variable '" + b.name +
                                     "' is never used (must be used exactly once)",
                                 mode});
    }
}

Context check_branches(const Context& ctx_then, const Context& ctx_else, Mode mode, Span span,
                       Diagnostics& out) {
    assert(ctx_then.bindings.size() == ctx_else.bindings.size());
    StructuralRuleSet rules = rules_for(mode);

    Context merged = ctx_then;
    merged.next_intro = std::max(ctx_then.next_intro, ctx_else.next_intro);

    std::string mismatched;
    for (std::size_t i = 0; i < merged.bindings.size(); ++i) {
        const Binding& bt = ctx_then.bindings[i];
        const Binding& be = ctx_else.bindings[i];
        Binding& bm = merged.bindings[i];
        if (!rules.weakening && (bt.use_count > 0) != (be.use_count > 0)) {
            if (!mismatched.empty())
                mismatched += ", ";
            mismatched += "'" + bt.name + "'";
        }
        bm.use_count = std::max(bt.use_count, be.use_count);
        bm.consumed = bt.consumed || be.consumed;
    }
    if (!mismatched.empty()) {
        out.push_back(Diagnostic{DiagCode::BranchUseMismatch, span,
                                 "branches disagree on the use of " + mismatched, mode});
    }
    return merged;
}

namespace {

struct PrimSig {
    Type params[2];
    int arity;
    Type result;
};

PrimSig prim_sig(PrimOp op) {
    switch (op) {
    case PrimOp::NewNonce:
        return {{Type::unit(), {}}, 1, Type::nonce()};
    case PrimOp::NonceGet:
        return {{Type::nonce(), {}}, 1, Type::integer()};
    case PrimOp::Encrypt:
        return {{Type::integer(), Type::nonce()}, 2, Type::integer()};
    case PrimOp::IntEq:
        return {{Type::integer(), Type::integer()}, 2, Type::boolean()};
    case PrimOp::IntAdd:
        return {{Type::integer(), Type::integer()}, 2, Type::integer()};
    }
    return {{}, 0, Type::error()};
}

class Checker {
public:
    Checker(Mode mode) : mode_(mode) {}

    CheckResult run(const Term& term) {
        Context ctx;
        Type type = check(term, ctx);
        CheckResult result;
        result.diagnostics = std::move(diags_);
        result.max_final_use_count = max_use_;
        if (result.diagnostics.empty())
            result.type = std::move(type);
        return result;
    }

private:
    Mode mode_;
    Diagnostics diags_;
    int max_use_ = 0;

    void mismatch(Span span, const Type& expected, const Type& found) {
        diags_.push_back(Diagnostic{DiagCode::TypeMismatch, span,
                                    "type mismatch: expected " + expected.to_string() +
                                        ", found " + found.to_string(),
                                    mode_});
    }

    void leave(Context& ctx, std::size_t index) {
        max_use_ = std::max(max_use_, ctx.bindings[index].use_count);
        exit_scope(ctx, index, mode_, diags_);
    }

    Type check(const Term& t, Context& ctx) {
        if (auto* v = t.as<Var>()) {
            auto type = use_variable(ctx, v->name, mode_, t.span, diags_);
            return type ? *type : Type::error();
        }
        if (t.as<UnitLit>())
            return Type::unit();
        if (t.as<BoolLit>())
            return Type::boolean();
        if (t.as<IntLit>())
            return Type::integer();

        if (auto* l = t.as<Lambda>()) {
            // Checking the body here makes capture consume free variables at
            // the construction site.
            std::size_t index = ctx.bindings.size();
            ctx.push(l->param, l->annot, t.span);
            Type body_type = check(*l->body, ctx);
            leave(ctx, index);
            ctx.bindings.erase(ctx.bindings.begin() + static_cast<std::ptrdiff_t>(index));
            return Type::fn(l->annot, std::move(body_type));
        }
        if (auto* a = t.as<App>()) {
            Type fn_type = check(*a->fn, ctx);
            Type arg_type = check(*a->arg, ctx);
            if (fn_type.is_error())
                return Type::error();
            if (fn_type.kind() != TypeKind::Fn) {
                diags_.push_back(Diagnostic{DiagCode::TypeMismatch, a->fn->span,
                                            "type mismatch: expected a function, found " +
                                                fn_type.to_string(),
                                            mode_});
                return Type::error();
            }
            if (!arg_type.compatible(fn_type.left()))
                mismatch(a->arg->span, fn_type.left(), arg_type);
            return fn_type.right();
        }
        if (auto* p = t.as<Pair>()) {
            Type first = check(*p->first, ctx);
            Type second = check(*p->second, ctx);
            return Type::prod(std::move(first), std::move(second));
        }
        if (auto* l = t.as<Let>()) {
            Type bound_type = check(*l->bound, ctx);
            std::size_t index = ctx.bindings.size();
            ctx.push(l->name, std::move(bound_type), t.span);
            Type body_type = check(*l->body, ctx);
            leave(ctx, index);
            ctx.bindings.erase(ctx.bindings.begin() + static_cast<std::ptrdiff_t>(index));
            return body_type;
        }
        if (auto* l = t.as<LetPair>()) {
            Type bound_type = check(*l->bound, ctx);
            Type first = Type::error(), second = Type::error();
            if (bound_type.kind() == TypeKind::Prod) {
                first = bound_type.left();
                second = bound_type.right();
            } else if (!bound_type.is_error()) {
                diags_.push_back(Diagnostic{DiagCode::TypeMismatch, l->bound->span,
                                            "type mismatch: expected a pair, found " +
                                                bound_type.to_string(),
                                            mode_});
            }
            std::size_t index = ctx.bindings.size();
            ctx.push(l->name1, std::move(first), t.span);
            ctx.push(l->name2, std::move(second), t.span);
            Type body_type = check(*l->body, ctx);
            leave(ctx, index + 1);
            leave(ctx, index);
            ctx.bindings.erase(ctx.bindings.begin() + static_cast<std::ptrdiff_t>(index),
                               ctx.bindings.end());
            return body_type;
        }
        if (auto* c = t.as<If>()) {
            Type cond_type = check(*c->cond, ctx);
            if (!cond_type.compatible(Type::boolean()))
                mismatch(c->cond->span, Type::boolean(), cond_type);
            Context ctx_then = ctx;
            Context ctx_else = ctx;
            Type then_type = check(*c->then_branch, ctx_then);
            Type else_type = check(*c->else_branch, ctx_else);
            if (!then_type.compatible(else_type))
                mismatch(c->else_branch->span, then_type, else_type);
            ctx = check_branches(ctx_then, ctx_else, mode_, t.span, diags_);
            return then_type.is_error() ? else_type : then_type;
        }
        if (auto* s = t.as<Seq>()) {
            Type first = check(*s->first, ctx);
            if (!first.compatible(Type::unit()))
                mismatch(s->first->span, Type::unit(), first);
            return check(*s->second, ctx);
        }
        auto* p = t.as<Prim>();
        assert(p);
        PrimSig sig = prim_sig(p->op);
        if (static_cast<int>(p->args.size()) != sig.arity) {
            diags_.push_back(Diagnostic{DiagCode::ArityError, t.span,
                                        std::string("'") + prim_name(p->op) + "' expects " +
                                            std::to_string(sig.arity) + " argument(s), got " +
                                            std::to_string(p->args.size()),
                                        mode_});
        }
        for (std::size_t i = 0; i < p->args.size(); ++i) {
            Type arg_type = check(*p->args[i], ctx);
            if (i < static_cast<std::size_t>(sig.arity) &&
                !arg_type.compatible(sig.params[i]))
                mismatch(p->args[i]->span, sig.params[i], arg_type);
        }
        return sig.result;
    }
};

} // namespace

CheckResult check_program(const Term& term, Mode mode) { return Checker(mode).run(term); }

} // namespace linlang
