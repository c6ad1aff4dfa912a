#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linlang/ast.hpp"
#include "linlang/diagnostic.hpp"
#include "linlang/mode.hpp"
#include "linlang/type.hpp"

namespace linlang {

// One tracked context entry, the x : tau of a typing context.
struct Binding {
    std::string name;
    Type type;
    int intro_index = 0; // strictly increasing left to right
    int use_count = 0;
    bool consumed = false;
    Span span; // introduction site
};

// Ordered sequence of bindings (the typing context). The checker threads a
// single context through subterms; exchange becomes implicit wherever the
// mode admits it.
struct Context {
    std::vector<Binding> bindings;
    int next_intro = 0;

    Binding& push(std::string name, Type type, Span span);
    Binding* find(std::string_view name);
};

// Resolves and consumes a variable use. With contraction the binding stays
// live and its use count grows; without contraction the first use consumes
// it and later uses report UseAfterConsume. Ordered mode additionally
// requires the used binding to be the oldest live one (FIFO).
//
// Returns the binding's type whenever the name resolves, even when a use
// error was reported, so checking can continue. Diagnostics go to `out`.
std::optional<Type> use_variable(Context& ctx, std::string_view name, Mode mode, Span use_span,
                                 Diagnostics& out);

// Scope-exit discipline for the binding at `index`: without weakening, an
// unused binding is UnusedLinear (Linear/Ordered) or UnusedRelevant
// (Relevant). Does not remove the binding.
void exit_scope(Context& ctx, std::size_t index, Mode mode, Diagnostics& out);

// Merges two branch contexts descending from the same pre-branch context.
// Without weakening both branches must consume the same bindings
// (BranchUseMismatch otherwise); with weakening a binding is consumed if
// consumed in either branch.
Context check_branches(const Context& ctx_then, const Context& ctx_else, Mode mode, Span span,
                       Diagnostics& out);

struct CheckResult {
    std::optional<Type> type; // present iff accepted
    Diagnostics diagnostics;
    // Largest final use count observed over all bindings; <= 1 in any mode
    // without contraction.
    int max_final_use_count = 0;

    bool accepted() const { return diagnostics.empty() && type.has_value(); }
};

// Checks a whole program in the given mode, starting from the empty
// context. Collects every diagnostic it can find; the verdict is reject iff
// any diagnostic was produced.
CheckResult check_program(const Term& term, Mode mode);

} // namespace linlang
