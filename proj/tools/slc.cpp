// slc -- substructural language checker and runner.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _WIN32
#include <io.h>
#define isatty _isatty
#define fileno _fileno
#else
#include <unistd.h>
#endif

#include "linlang/checker.hpp"
#include "linlang/corpus.hpp"
#include "linlang/eval.hpp"
#include "linlang/parser.hpp"

namespace {

constexpr int kExitAccept = 0;
constexpr int kExitTypeError = 1;
constexpr int kExitSyntaxError = 2;
constexpr int kExitRuntimeError = 3;
constexpr int kExitUsage = 64;

using namespace linlang;

bool color_enabled() {
    const char* env = std::getenv("SLC_COLOR");
    if (env && std::string_view(env) == "0")
        return false;
    return isatty(fileno(stderr));
}

void print_diagnostic_human(const Diagnostic& diag, const std::string& file) {
    bool color = color_enabled();
    std::cerr << file << ':' << diag.span.line << ':' << diag.span.column << ": "
              << (color ? "\x1b[31m" : "") << "error[" << diag_code_name(diag.code) << "]"
              << (color ? "\x1b[0m" : "") << " (" << mode_name(diag.mode) << "): "
              << diag.message << '\n';
}

void print_diagnostic_json(const Diagnostic& diag) {
    nlohmann::json obj = {
        {"code", diag_code_name(diag.code)}, {"message", diag.message},
        {"line", diag.span.line},            {"col", diag.span.column},
        {"len", diag.span.length},           {"mode", mode_name(diag.mode)},
    };
    std::cout << obj.dump() << '\n';
}

void report(const Diagnostics& diags, const std::string& file, bool json) {
    for (const auto& diag : diags) {
        if (json)
            print_diagnostic_json(diag);
        else
            print_diagnostic_human(diag, file);
    }
}

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return std::nullopt;
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct CheckedProgram {
    TermPtr term;       // set on syntax success
    CheckResult result; // meaningful when term is set
    int exit_code = kExitAccept;
};

CheckedProgram check_file(const std::string& file, Mode mode, bool json) {
    auto source = read_file(file);
    if (!source) {
        std::cerr << "slc: cannot open '" << file << "'\n";
        return {nullptr, {}, kExitUsage};
    }
    auto parsed = parse_source(*source);
    if (auto* diag = std::get_if<Diagnostic>(&parsed)) {
        diag->mode = mode;
        report({*diag}, file, json);
        return {nullptr, {}, kExitSyntaxError};
    }
    CheckedProgram out;
    out.term = std::move(std::get<TermPtr>(parsed));
    out.result = check_program(*out.term, mode);
    if (!out.result.accepted()) {
        report(out.result.diagnostics, file, json);
        out.exit_code = kExitTypeError;
    }
    return out;
}

int cmd_check(const std::string& file, Mode mode, bool json) {
    CheckedProgram checked = check_file(file, mode, json);
    if (checked.exit_code == kExitAccept)
        std::cout << checked.result.type->to_string() << '\n';
    return checked.exit_code;
}

int cmd_run(const std::string& file, Mode mode, std::uint64_t seed, bool entropy, bool json) {
    CheckedProgram checked = check_file(file, mode, json);
    if (checked.exit_code != kExitAccept)
        return checked.exit_code;
    NonceSource source =
        entropy ? NonceSource::system_entropy() : NonceSource::seeded(seed);
    try {
        Value value = eval(*checked.term, source);
        std::cout << value_to_string(value) << '\n';
        return kExitAccept;
    } catch (const std::runtime_error& e) {
        std::cerr << "slc: runtime error: " << e.what() << '\n';
        return kExitRuntimeError;
    }
}

int cmd_corpus(const std::string& manifest, bool json) {
    auto loaded = load_manifest(manifest);
    if (auto* error = std::get_if<std::string>(&loaded)) {
        std::cerr << "slc: " << *error << '\n';
        return kExitSyntaxError;
    }
    const auto& entries = std::get<std::vector<CorpusEntry>>(loaded);

    int mismatches = 0;
    if (!json) {
        std::cout << "name";
        for (Mode mode : manifest_mode_order)
            std::cout << '\t' << mode_name(mode);
        std::cout << '\n';
    }
    for (const auto& entry : entries) {
        nlohmann::json verdicts = nlohmann::json::object();
        bool entry_ok = true;
        std::string row = entry.name;
        for (Mode mode : manifest_mode_order) {
            Verdict actual = actual_verdict(entry, mode);
            const Verdict& expected = entry.expected_for(mode);
            if (actual == expected) {
                row += '\t' + actual.to_string();
            } else {
                entry_ok = false;
                row += "\texpected " + expected.to_string() + ", got " + actual.to_string();
            }
            verdicts[mode_name(mode)] = actual.to_string();
        }
        if (!entry_ok)
            ++mismatches;
        if (json) {
            nlohmann::json obj = {
                {"name", entry.name}, {"verdicts", verdicts}, {"ok", entry_ok}};
            std::cout << obj.dump() << '\n';
        } else {
            std::cout << row << '\n';
        }
    }
    if (mismatches && !json)
        std::cout << mismatches << " entr" << (mismatches == 1 ? "y" : "ies")
                  << " did not match the manifest\n";
    return mismatches ? kExitTypeError : kExitAccept;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"substructural type checker and interpreter for LinLang"};
    app.require_subcommand(1);

    std::string mode_str = "linear";
    std::string file;
    std::string manifest = "corpus/corpus.tsv";
    bool json = false;
    std::uint64_t seed = 0;
    bool entropy = false;

    auto add_mode = [&](CLI::App* cmd) {
        cmd->add_option("--mode", mode_str, "typing discipline")
            ->check(CLI::IsMember({"unrestricted", "affine", "relevant", "linear", "ordered"}))
            ->capture_default_str();
    };

    CLI::App* check = app.add_subcommand("check", "type-check a program");
    add_mode(check);
    check->add_flag("--json", json, "one JSON object per diagnostic on stdout");
    check->add_option("file", file, "program file (.lin)")->required();

    CLI::App* run = app.add_subcommand("run", "check, then evaluate a program");
    add_mode(run);
    auto* seed_opt = run->add_option("--seed", seed, "nonce PRNG seed")->capture_default_str();
    run->add_flag("--entropy", entropy, "use system entropy for nonces")->excludes(seed_opt);
    run->add_flag("--json", json, "one JSON object per diagnostic on stdout");
    run->add_option("file", file, "program file (.lin)")->required();

    CLI::App* corpus = app.add_subcommand("corpus", "verify the corpus acceptance matrix");
    corpus->add_option("--manifest", manifest, "manifest path")->capture_default_str();
    corpus->add_flag("--json", json, "one JSON object per entry on stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            app.exit(e);
            return kExitAccept;
        }
        app.exit(e);
        return kExitUsage;
    }

    Mode mode = *mode_from_name(mode_str);
    if (check->parsed())
        return cmd_check(file, mode, json);
    if (run->parsed())
        return cmd_run(file, mode, seed, entropy, json);
    return cmd_corpus(manifest, json);
}
