#include "linlang/mode.hpp"

namespace linlang {

StructuralRuleSet rules_for(Mode mode) {
    switch (mode) {
    case Mode::Unrestricted:
        return {.exchange = true, .weakening = true, .contraction = true};
    case Mode::Affine:
        return {.exchange = true, .weakening = true, .contraction = false};
    case Mode::Relevant:
        return {.exchange = true, .weakening = false, .contraction = true};
    case Mode::Linear:
        return {.exchange = true, .weakening = false, .contraction = false};
    case Mode::Ordered:
        return {.exchange = false, .weakening = false, .contraction = false};
    }
    return {};
}

const char* mode_name(Mode mode) {
    switch (mode) {
    case Mode::Unrestricted:
        return "unrestricted";
    case Mode::Affine:
        return "affine";
    case Mode::Relevant:
        return "relevant";
    case Mode::Linear:
        return "linear";
    case Mode::Ordered:
        return "ordered";
    }
    return "?";
}

std::optional<Mode> mode_from_name(std::string_view name) {
    for (Mode m : all_modes)
        if (name == mode_name(m))
            return m;
    return std::nullopt;
}

} // namespace linlang
