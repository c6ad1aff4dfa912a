#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "linlang/diagnostic.hpp"
#include "linlang/mode.hpp"

namespace linlang {

// accept, or reject with the code of the first diagnostic.
struct Verdict {
    bool accept = false;
    std::optional<DiagCode> code; // set when reject

    bool operator==(const Verdict&) const = default;

    std::string to_string() const;
    static std::optional<Verdict> from_string(std::string_view text);
};

struct CorpusEntry {
    std::string name;
    std::filesystem::path path; // relative to the manifest directory
    Verdict expected[5];        // indexed by the tsv column order below

    const Verdict& expected_for(Mode mode) const;
};

// Column order of corpus.tsv:
//   name  path  verdict_unrestricted  verdict_affine  verdict_relevant
//   verdict_linear  verdict_ordered
inline constexpr Mode manifest_mode_order[5] = {
    Mode::Unrestricted, Mode::Affine, Mode::Relevant, Mode::Linear, Mode::Ordered};

// Parses a manifest. Lines starting with '#' and blank lines are ignored.
// Entry paths are resolved against the manifest's directory.
std::variant<std::vector<CorpusEntry>, std::string> load_manifest(
    const std::filesystem::path& manifest_path);

// Checks the entry's program file in the given mode and reports the actual
// verdict. A lex/parse failure counts as reject with that code.
Verdict actual_verdict(const CorpusEntry& entry, Mode mode);

} // namespace linlang
