#include "linlang/value.hpp"

namespace linlang {

std::shared_ptr<const Env> env_bind(std::shared_ptr<const Env> parent, std::string name,
                                    Value value) {
    return std::make_shared<Env>(
        Env{std::move(parent), std::move(name), std::make_shared<Value>(std::move(value))});
}

const Value* env_lookup(const Env* env, std::string_view name) {
    for (; env; env = env->parent.get())
        if (env->name == name)
            return env->value.get();
    return nullptr;
}

std::string value_to_string(const Value& value) {
    if (value.as<UnitV>())
        return "()";
    if (auto* b = value.as<BoolV>())
        return b->value ? "true" : "false";
    if (auto* i = value.as<IntV>())
        return std::to_string(i->value);
    if (auto* n = value.as<NonceV>())
        return "<nonce #" + std::to_string(n->id) + ">";
    if (auto* p = value.as<PairV>())
        return "(" + value_to_string(*p->first) + ", " + value_to_string(*p->second) + ")";
    return "<closure>";
}

} // namespace linlang
