#include "linlang/type.hpp"

namespace linlang {

bool Type::operator==(const Type& other) const {
    if (kind_ != other.kind_)
        return false;
    if (kind_ == TypeKind::Prod || kind_ == TypeKind::Fn)
        return left() == other.left() && right() == other.right();
    return true;
}

bool Type::compatible(const Type& other) const {
    if (kind_ == TypeKind::Error || other.kind_ == TypeKind::Error)
        return true;
    if (kind_ != other.kind_)
        return false;
    if (kind_ == TypeKind::Prod || kind_ == TypeKind::Fn)
        return left().compatible(other.left()) && right().compatible(other.right());
    return true;
}

namespace {

// prec 0 = arrow, 1 = product, 2 = atom
void print(const Type& t, int min_prec, std::string& out) {
    switch (t.kind()) {
    case TypeKind::Unit:
        out += "Unit";
        return;
    case TypeKind::Bool:
        out += "Bool";
        return;
    case TypeKind::Int:
        out += "Int";
        return;
    case TypeKind::Nonce:
        out += "Nonce";
        return;
    case TypeKind::Error:
        out += "<error>";
        return;
    case TypeKind::Prod: {
        bool paren = min_prec > 1;
        if (paren)
            out += '(';
        print(t.left(), 2, out);
        out += " * ";
        print(t.right(), 1, out);
        if (paren)
            out += ')';
        return;
    }
    case TypeKind::Fn: {
        bool paren = min_prec > 0;
        if (paren)
            out += '(';
        print(t.left(), 1, out);
        out += " -> ";
        print(t.right(), 0, out);
        if (paren)
            out += ')';
        return;
    }
    }
}

} // namespace

std::string Type::to_string() const {
    std::string out;
    print(*this, 0, out);
    return out;
}

} // namespace linlang
