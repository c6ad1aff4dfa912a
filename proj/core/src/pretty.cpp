#include "linlang/pretty.hpp"

#include <string>

namespace linlang {

namespace {

// 0 = expr (let/fun/if reach here), 1 = seq, 2 = app, 3 = atom
void print(const Term& t, int min_prec, std::string& out);

void paren_print(const Term& t, std::string& out) {
    out += '(';
    print(t, 0, out);
    out += ')';
}

void print(const Term& t, int min_prec, std::string& out) {
    if (auto* v = t.as<Var>()) {
        out += v->name;
        return;
    }
    if (t.as<UnitLit>()) {
        out += "()";
        return;
    }
    if (auto* b = t.as<BoolLit>()) {
        out += b->value ? "true" : "false";
        return;
    }
    if (auto* i = t.as<IntLit>()) {
        out += std::to_string(i->value);
        return;
    }
    if (auto* p = t.as<Pair>()) {
        out += '(';
        print(*p->first, 0, out);
        out += ", ";
        print(*p->second, 0, out);
        out += ')';
        return;
    }
    if (auto* p = t.as<Prim>()) {
        out += prim_name(p->op);
        out += '(';
        bool implicit_unit = p->op == PrimOp::NewNonce && p->args.size() == 1 &&
                             p->args[0]->as<UnitLit>() != nullptr;
        if (!implicit_unit) {
            for (std::size_t i = 0; i < p->args.size(); ++i) {
                if (i)
                    out += ", ";
                print(*p->args[i], 0, out);
            }
        }
        out += ')';
        return;
    }
    if (auto* a = t.as<App>()) {
        if (min_prec > 2) {
            paren_print(t, out);
            return;
        }
        print(*a->fn, 2, out);
        out += ' ';
        print(*a->arg, 3, out);
        return;
    }
    if (auto* s = t.as<Seq>()) {
        if (min_prec > 1) {
            paren_print(t, out);
            return;
        }
        print(*s->first, 1, out);
        out += "; ";
        print(*s->second, 2, out);
        return;
    }
    // let / let-pair / fun / if only appear at expression level
    if (min_prec > 0) {
        paren_print(t, out);
        return;
    }
    if (auto* l = t.as<Let>()) {
        out += "let " + l->name + " = ";
        print(*l->bound, 0, out);
        out += " in ";
        print(*l->body, 0, out);
        return;
    }
    if (auto* l = t.as<LetPair>()) {
        out += "let (" + l->name1 + ", " + l->name2 + ") = ";
        print(*l->bound, 0, out);
        out += " in ";
        print(*l->body, 0, out);
        return;
    }
    if (auto* l = t.as<Lambda>()) {
        std::string annot = l->annot.to_string();
        if (l->annot.kind() == TypeKind::Fn)
            annot = "(" + annot + ")";
        out += "fun " + l->param + ": " + annot + " -> ";
        print(*l->body, 0, out);
        return;
    }
    if (auto* c = t.as<If>()) {
        out += "if ";
        print(*c->cond, 0, out);
        out += " then ";
        print(*c->then_branch, 0, out);
        out += " else ";
        print(*c->else_branch, 0, out);
        return;
    }
}

} // namespace

std::string pretty_print(const Term& term) {
    std::string out;
    print(term, 0, out);
    return out;
}

} // namespace linlang
