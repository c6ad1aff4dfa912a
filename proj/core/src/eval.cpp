#include "linlang/eval.hpp"

namespace linlang {

namespace {

class Evaluator {
public:
    Evaluator(NonceSource& source) : source_(source) {}

    Value eval(const Term& t, const std::shared_ptr<const Env>& env) {
        if (auto* v = t.as<Var>()) {
            const Value* found = env_lookup(env.get(), v->name);
            if (!found)
                throw RuntimeError("unbound variable '" + v->name + "'");
            return *found;
        }
        if (t.as<UnitLit>())
            return Value{UnitV{}};
        if (auto* b = t.as<BoolLit>())
            return Value{BoolV{b->value}};
        if (auto* i = t.as<IntLit>())
            return Value{IntV{i->value}};
        if (auto* l = t.as<Lambda>())
            return Value{ClosureV{l->param, l->body.get(), env}};
        if (auto* a = t.as<App>()) {
            Value fn = eval(*a->fn, env);
            Value arg = eval(*a->arg, env);
            auto* closure = fn.as<ClosureV>();
            if (!closure)
                throw RuntimeError("application of a non-function value");
            auto inner = env_bind(closure->env, closure->param, std::move(arg));
            return eval(*closure->body, inner);
        }
        if (auto* p = t.as<Pair>()) {
            Value first = eval(*p->first, env);
            Value second = eval(*p->second, env);
            return Value{PairV{std::make_shared<Value>(std::move(first)),
                               std::make_shared<Value>(std::move(second))}};
        }
        if (auto* l = t.as<Let>()) {
            Value bound = eval(*l->bound, env);
            return eval(*l->body, env_bind(env, l->name, std::move(bound)));
        }
        if (auto* l = t.as<LetPair>()) {
            Value bound = eval(*l->bound, env);
            auto* pair = bound.as<PairV>();
            if (!pair)
                throw RuntimeError("let-pair on a non-pair value");
            auto inner = env_bind(env, l->name1, *pair->first);
            inner = env_bind(inner, l->name2, *pair->second);
            return eval(*l->body, inner);
        }
        if (auto* c = t.as<If>()) {
            Value cond = eval(*c->cond, env);
            auto* flag = cond.as<BoolV>();
            if (!flag)
                throw RuntimeError("condition is not a boolean");
            return eval(flag->value ? *c->then_branch : *c->else_branch, env);
        }
        if (auto* s = t.as<Seq>()) {
            eval(*s->first, env);
            return eval(*s->second, env);
        }
        auto* p = t.as<Prim>();
        std::vector<Value> args;
        args.reserve(p->args.size());
        for (const auto& arg : p->args)
            args.push_back(eval(*arg, env));
        return apply_prim(p->op, args);
    }

    UseLedger take_ledger() { return std::move(ledger_); }

private:
    NonceSource& source_;
    UseLedger ledger_;

    const NonceV& consume_nonce(const Value& value) {
        auto* nonce = value.as<NonceV>();
        if (!nonce)
            throw RuntimeError("primitive expected a nonce");
        ledger_[nonce->id] += 1;
        return *nonce;
    }

    std::int64_t int_arg(const Value& value) {
        auto* i = value.as<IntV>();
        if (!i)
            throw RuntimeError("primitive expected an integer");
        return i->value;
    }

    Value apply_prim(PrimOp op, const std::vector<Value>& args) {
        if (static_cast<int>(args.size()) != prim_arity(op))
            throw RuntimeError(std::string("wrong argument count for '") + prim_name(op) + "'");
        switch (op) {
        case PrimOp::NewNonce: {
            NonceV nonce = source_.fresh();
            ledger_.emplace(nonce.id, 0);
            return Value{nonce};
        }
        case PrimOp::NonceGet: {
            const NonceV& nonce = consume_nonce(args[0]);
            return Value{IntV{static_cast<std::int64_t>(nonce.payload_lo)}};
        }
        case PrimOp::Encrypt: {
            std::int64_t message = int_arg(args[0]);
            const NonceV& nonce = consume_nonce(args[1]);
            // toy cipher: XOR with the low payload word
            return Value{IntV{static_cast<std::int64_t>(static_cast<std::uint64_t>(message) ^
                                                        nonce.payload_lo)}};
        }
        case PrimOp::IntEq:
            return Value{BoolV{int_arg(args[0]) == int_arg(args[1])}};
        case PrimOp::IntAdd:
            return Value{IntV{static_cast<std::int64_t>(
                static_cast<std::uint64_t>(int_arg(args[0])) +
                static_cast<std::uint64_t>(int_arg(args[1])))}};
        }
        throw RuntimeError("unknown primitive");
    }
};

} // namespace

Value eval(const Term& term, NonceSource& source) {
    Evaluator ev(source);
    return ev.eval(term, nullptr);
}

std::pair<Value, UseLedger> eval_instrumented(const Term& term, NonceSource& source) {
    Evaluator ev(source);
    Value value = ev.eval(term, nullptr);
    return {std::move(value), ev.take_ledger()};
}

} // namespace linlang
