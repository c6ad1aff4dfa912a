#include "linlang/ast.hpp"

namespace linlang {

const char* prim_name(PrimOp op) {
    switch (op) {
    case PrimOp::NewNonce:
        return "new_nonce";
    case PrimOp::NonceGet:
        return "nonce_get";
    case PrimOp::Encrypt:
        return "encrypt";
    case PrimOp::IntEq:
        return "eq";
    case PrimOp::IntAdd:
        return "add";
    }
    return "?";
}

int prim_arity(PrimOp op) {
    switch (op) {
    case PrimOp::NewNonce:
        return 1;
    case PrimOp::NonceGet:
        return 1;
    case PrimOp::Encrypt:
    case PrimOp::IntEq:
    case PrimOp::IntAdd:
        return 2;
    }
    return 0;
}

bool same_structure(const Term& a, const Term& b) {
    if (a.node.index() != b.node.index())
        return false;
    if (auto* va = a.as<Var>())
        return va->name == b.as<Var>()->name;
    if (a.as<UnitLit>())
        return true;
    if (auto* ba = a.as<BoolLit>())
        return ba->value == b.as<BoolLit>()->value;
    if (auto* ia = a.as<IntLit>())
        return ia->value == b.as<IntLit>()->value;
    if (auto* la = a.as<Lambda>()) {
        auto* lb = b.as<Lambda>();
        return la->param == lb->param && la->annot == lb->annot &&
               same_structure(*la->body, *lb->body);
    }
    if (auto* aa = a.as<App>()) {
        auto* ab = b.as<App>();
        return same_structure(*aa->fn, *ab->fn) && same_structure(*aa->arg, *ab->arg);
    }
    if (auto* pa = a.as<Pair>()) {
        auto* pb = b.as<Pair>();
        return same_structure(*pa->first, *pb->first) && same_structure(*pa->second, *pb->second);
    }
    if (auto* la = a.as<LetPair>()) {
        auto* lb = b.as<LetPair>();
        return la->name1 == lb->name1 && la->name2 == lb->name2 &&
               same_structure(*la->bound, *lb->bound) && same_structure(*la->body, *lb->body);
    }
    if (auto* la = a.as<Let>()) {
        auto* lb = b.as<Let>();
        return la->name == lb->name && same_structure(*la->bound, *lb->bound) &&
               same_structure(*la->body, *lb->body);
    }
    if (auto* ia = a.as<If>()) {
        auto* ib = b.as<If>();
        return same_structure(*ia->cond, *ib->cond) &&
               same_structure(*ia->then_branch, *ib->then_branch) &&
               same_structure(*ia->else_branch, *ib->else_branch);
    }
    if (auto* sa = a.as<Seq>()) {
        auto* sb = b.as<Seq>();
        return same_structure(*sa->first, *sb->first) && same_structure(*sa->second, *sb->second);
    }
    if (auto* pa = a.as<Prim>()) {
        auto* pb = b.as<Prim>();
        if (pa->op != pb->op || pa->args.size() != pb->args.size())
            return false;
        for (std::size_t i = 0; i < pa->args.size(); ++i)
            if (!same_structure(*pa->args[i], *pb->args[i]))
                return false;
        return true;
    }
    return false;
}

} // namespace linlang
