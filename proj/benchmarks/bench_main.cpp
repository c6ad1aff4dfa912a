#include <benchmark/benchmark.h>

#include <string>

#include "linlang/checker.hpp"
#include "linlang/eval.hpp"
#include "linlang/parser.hpp"

using namespace linlang;

namespace {

const std::string kProgram =
    "let c1 = encrypt(1, new_nonce()) in "
    "let c2 = encrypt(2, new_nonce()) in "
    "let p = (c1, c2) in "
    "let (a, b) = p in "
    "if eq(a, b) then add(a, b) else add(b, a)";

TermPtr parse_program(const std::string& src) {
    auto result = parse_source(src);
    return std::move(std::get<TermPtr>(result));
}

void BM_Parse(benchmark::State& state) {
    for (auto _ : state) {
        auto result = parse_source(kProgram);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_Parse);

void BM_Check(benchmark::State& state) {
    TermPtr term = parse_program(kProgram);
    Mode mode = static_cast<Mode>(state.range(0));
    for (auto _ : state) {
        auto result = check_program(*term, mode);
        benchmark::DoNotOptimize(result);
    }
    state.SetLabel(mode_name(mode));
}
BENCHMARK(BM_Check)->DenseRange(0, 4);

void BM_Eval(benchmark::State& state) {
    TermPtr term = parse_program(kProgram);
    for (auto _ : state) {
        NonceSource source = NonceSource::seeded(42);
        auto value = eval(*term, source);
        benchmark::DoNotOptimize(value);
    }
}
BENCHMARK(BM_Eval);

void BM_EvalInstrumented(benchmark::State& state) {
    TermPtr term = parse_program(kProgram);
    for (auto _ : state) {
        NonceSource source = NonceSource::seeded(42);
        auto result = eval_instrumented(*term, source);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_EvalInstrumented);

} // namespace

BENCHMARK_MAIN();
