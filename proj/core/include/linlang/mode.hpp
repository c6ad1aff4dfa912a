#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace linlang {

// The five substructural disciplines, ordered bottom-up in the lattice.
enum class Mode {
    Ordered,
    Linear,
    Affine,
    Relevant,
    Unrestricted,
};

inline constexpr std::array<Mode, 5> all_modes = {
    Mode::Unrestricted, Mode::Affine, Mode::Relevant, Mode::Linear, Mode::Ordered};

struct StructuralRuleSet {
    bool exchange = false;
    bool weakening = false;
    bool contraction = false;

    bool operator==(const StructuralRuleSet&) const = default;
};

// Fixed table:
//   unrestricted {E,W,C}   affine {E,W}   relevant {E,C}
//   linear {E}             ordered {}
StructuralRuleSet rules_for(Mode mode);

const char* mode_name(Mode mode);
std::optional<Mode> mode_from_name(std::string_view name);

} // namespace linlang
