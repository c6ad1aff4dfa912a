#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>

#include "linlang/ast.hpp"

namespace linlang {

struct Value;

struct Env {
    std::shared_ptr<const Env> parent;
    std::string name;
    std::shared_ptr<const Value> value;
};

std::shared_ptr<const Env> env_bind(std::shared_ptr<const Env> parent, std::string name,
                                    Value value);
const Value* env_lookup(const Env* env, std::string_view name);

struct UnitV {};
struct BoolV {
    bool value;
};
struct IntV {
    std::int64_t value;
};
struct NonceV {
    std::uint64_t id; // creation ordinal within the run
    std::uint64_t payload_hi;
    std::uint64_t payload_lo;
};
struct PairV {
    std::shared_ptr<const Value> first;
    std::shared_ptr<const Value> second;
};
struct ClosureV {
    std::string param;
    const Term* body; // borrowed from the AST being evaluated
    std::shared_ptr<const Env> env;
};

struct Value {
    std::variant<UnitV, BoolV, IntV, NonceV, PairV, ClosureV> v;

    template <typename T>
    const T* as() const {
        return std::get_if<T>(&v);
    }
};

// Display form used by the CLI: (), true, 42, <nonce #0>, (1, 2), <closure>.
std::string value_to_string(const Value& value);

} // namespace linlang
