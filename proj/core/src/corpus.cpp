#include "linlang/corpus.hpp"

#include <fstream>
#include <sstream>

#include "linlang/checker.hpp"
#include "linlang/parser.hpp"

namespace linlang {

namespace {

std::optional<DiagCode> diag_code_from_name(std::string_view name) {
    static constexpr DiagCode codes[] = {
        DiagCode::UseAfterConsume, DiagCode::UnusedLinear,    DiagCode::UnusedRelevant,
        DiagCode::OutOfOrderUse,   DiagCode::UnboundVariable, DiagCode::TypeMismatch,
        DiagCode::BranchUseMismatch, DiagCode::ArityError,    DiagCode::ParseError,
        DiagCode::LexError,
    };
    for (DiagCode code : codes)
        if (name == diag_code_name(code))
            return code;
    return std::nullopt;
}

} // namespace

std::string Verdict::to_string() const {
    if (accept)
        return "accept";
    return std::string("reject:") + (code ? diag_code_name(*code) : "?");
}

std::optional<Verdict> Verdict::from_string(std::string_view text) {
    if (text == "accept")
        return Verdict{true, std::nullopt};
    constexpr std::string_view prefix = "reject:";
    if (text.starts_with(prefix)) {
        auto code = diag_code_from_name(text.substr(prefix.size()));
        if (code)
            return Verdict{false, code};
    }
    return std::nullopt;
}

const Verdict& CorpusEntry::expected_for(Mode mode) const {
    for (int i = 0; i < 5; ++i)
        if (manifest_mode_order[i] == mode)
            return expected[i];
    return expected[0];
}

std::variant<std::vector<CorpusEntry>, std::string> load_manifest(
    const std::filesystem::path& manifest_path) {
    std::ifstream in(manifest_path);
    if (!in)
        return "cannot open manifest: " + manifest_path.string();

    std::filesystem::path base = manifest_path.parent_path();
    std::vector<CorpusEntry> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream fields(line);
        CorpusEntry entry;
        std::string path_field;
        std::string verdicts[5];
        if (!(fields >> entry.name >> path_field >> verdicts[0] >> verdicts[1] >> verdicts[2] >>
              verdicts[3] >> verdicts[4]))
            return "manifest line " + std::to_string(lineno) + ": expected 7 columns";
        entry.path = base / path_field;
        for (int i = 0; i < 5; ++i) {
            auto v = Verdict::from_string(verdicts[i]);
            if (!v)
                return "manifest line " + std::to_string(lineno) + ": bad verdict '" +
                       verdicts[i] + "'";
            entry.expected[i] = *v;
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

Verdict actual_verdict(const CorpusEntry& entry, Mode mode) {
    std::ifstream in(entry.path);
    if (!in)
        return Verdict{false, DiagCode::ParseError};
    std::stringstream buffer;
    buffer << in.rdbuf();

    auto parsed = parse_source(buffer.str());
    if (auto* diag = std::get_if<Diagnostic>(&parsed))
        return Verdict{false, diag->code};

    CheckResult result = check_program(*std::get<TermPtr>(parsed), mode);
    if (result.accepted())
        return Verdict{true, std::nullopt};
    return Verdict{false, result.diagnostics.front().code};
}

} // namespace linlang
