#pragma once

#include <memory>
#include <string>

namespace linlang {

enum class TypeKind {
    Unit,
    Bool,
    Int,
    Nonce,
    Prod,
    Fn,
    // Internal placeholder produced during error recovery. Compatible with
    // every type so one mistake does not cascade. Never printed on the
    // accept path: a program that reaches Error also carries a diagnostic.
    Error,
};

// Object-language type. Value-semantic; children are shared immutable nodes.
class Type {
public:
    Type() : kind_(TypeKind::Error) {}

    static Type unit() { return Type(TypeKind::Unit); }
    static Type boolean() { return Type(TypeKind::Bool); }
    static Type integer() { return Type(TypeKind::Int); }
    static Type nonce() { return Type(TypeKind::Nonce); }
    static Type error() { return Type(TypeKind::Error); }
    static Type prod(Type left, Type right) {
        return Type(TypeKind::Prod, std::move(left), std::move(right));
    }
    static Type fn(Type arg, Type ret) {
        return Type(TypeKind::Fn, std::move(arg), std::move(ret));
    }

    TypeKind kind() const { return kind_; }
    bool is_error() const { return kind_ == TypeKind::Error; }

    // Left of Prod, argument of Fn.
    const Type& left() const { return *left_; }
    // Right of Prod, result of Fn.
    const Type& right() const { return *right_; }

    // Structural equality.
    bool operator==(const Type& other) const;

    // Equality up to Error, which matches anything.
    bool compatible(const Type& other) const;

    std::string to_string() const;

private:
    explicit Type(TypeKind kind) : kind_(kind) {}
    Type(TypeKind kind, Type left, Type right)
        : kind_(kind),
          left_(std::make_shared<Type>(std::move(left))),
          right_(std::make_shared<Type>(std::move(right))) {}

    TypeKind kind_;
    std::shared_ptr<Type> left_;
    std::shared_ptr<Type> right_;
};

} // namespace linlang
