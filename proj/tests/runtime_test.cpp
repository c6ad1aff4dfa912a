#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "linlang/checker.hpp"
#include "linlang/eval.hpp"
#include "linlang/parser.hpp"

using namespace linlang;

namespace {

TermPtr parse_ok(std::string_view src) {
    auto result = parse_source(src);
    if (auto* diag = std::get_if<Diagnostic>(&result))
        FAIL("parse failed: ", diag->message);
    return std::move(std::get<TermPtr>(result));
}

Value run(std::string_view src, std::uint64_t seed = 0) {
    NonceSource source = NonceSource::seeded(seed);
    return eval(*parse_ok(src), source);
}

} // namespace

// First splitmix64 outputs for seed 42, computed independently.
constexpr std::uint64_t kSeed42First = 0xbdd732262feb6e95ULL;
constexpr std::uint64_t kSeed42Second = 0x28efe333b266f103ULL;

TEST_CASE("seeded source emits the pinned first payload") {
    NonceSource source = NonceSource::seeded(42);
    NonceV nonce = source.fresh();
    CHECK(nonce.id == 0);
    CHECK(nonce.payload_hi == kSeed42First);
    CHECK(nonce.payload_lo == kSeed42Second);
}

TEST_CASE("ordinals and payloads are distinct") {
    NonceSource source = NonceSource::seeded(42);
    NonceV first = source.fresh();
    NonceV second = source.fresh();
    CHECK(first.id == 0);
    CHECK(second.id == 1);
    CHECK((first.payload_hi != second.payload_hi || first.payload_lo != second.payload_lo));
}

TEST_CASE("same seed, same payload sequence") {
    NonceSource a = NonceSource::seeded(42);
    NonceSource b = NonceSource::seeded(42);
    for (int i = 0; i < 16; ++i) {
        NonceV na = a.fresh();
        NonceV nb = b.fresh();
        CHECK(na.payload_hi == nb.payload_hi);
        CHECK(na.payload_lo == nb.payload_lo);
    }
}

TEST_CASE("arithmetic") {
    auto value = run("add(1, 2)");
    REQUIRE(value.as<IntV>());
    CHECK(value.as<IntV>()->value == 3);
}

TEST_CASE("branch selection") {
    auto value = run("if true then 1 else 2");
    REQUIRE(value.as<IntV>());
    CHECK(value.as<IntV>()->value == 1);
}

TEST_CASE("reading the same nonce twice yields equal payload words") {
    const char* src = "let n = new_nonce() in eq(nonce_get(n), nonce_get(n))";
    REQUIRE(check_program(*parse_ok(src), Mode::Unrestricted).accepted());
    auto value = run(src, 7);
    REQUIRE(value.as<BoolV>());
    CHECK(value.as<BoolV>()->value);
}

TEST_CASE("nonce_get returns the low payload word") {
    auto value = run("nonce_get(new_nonce())", 42);
    REQUIRE(value.as<IntV>());
    CHECK(static_cast<std::uint64_t>(value.as<IntV>()->value) == kSeed42Second);
}

TEST_CASE("encrypt is xor with the low payload word") {
    auto value = run("encrypt(5, new_nonce())", 42);
    REQUIRE(value.as<IntV>());
    CHECK(static_cast<std::uint64_t>(value.as<IntV>()->value) == (5ULL ^ kSeed42Second));
}

TEST_CASE("pairs, closures, let-pair") {
    auto value = run("let (a, b) = (1, true) in if b then add(a, 1) else 0");
    REQUIRE(value.as<IntV>());
    CHECK(value.as<IntV>()->value == 2);

    auto closure = run("fun x: Int -> x");
    CHECK(closure.as<ClosureV>());
    CHECK(value_to_string(closure) == "<closure>");
}

TEST_CASE("eval is deterministic for a fixed seed") {
    const char* src =
        "let c1 = encrypt(1, new_nonce()) in let c2 = encrypt(2, new_nonce()) in add(c1, c2)";
    auto a = run(src, 42);
    auto b = run(src, 42);
    REQUIRE(a.as<IntV>());
    REQUIRE(b.as<IntV>());
    CHECK(a.as<IntV>()->value == b.as<IntV>()->value);
}

TEST_CASE("instrumented run counts consumptions") {
    auto count = [](std::string_view src) {
        NonceSource source = NonceSource::seeded(0);
        auto [value, ledger] = eval_instrumented(*parse_ok(src), source);
        return ledger;
    };

    SUBCASE("fresh nonces are consumed once each") {
        auto ledger = count(
            "let c1 = encrypt(1, new_nonce()) in let c2 = encrypt(2, new_nonce()) in add(c1, c2)");
        REQUIRE(ledger.size() == 2);
        for (const auto& [id, uses] : ledger)
            CHECK(uses == 1);
    }
    SUBCASE("reuse shows up as a double consumption") {
        auto ledger = count(
            "let n = new_nonce() in let c1 = encrypt(1, n) in let c2 = encrypt(2, n) in add(c1, c2)");
        REQUIRE(ledger.size() == 1);
        CHECK(ledger.at(0) == 2);
    }
    SUBCASE("a nonce captured in a never-applied closure stays unconsumed") {
        auto ledger =
            count("let n = new_nonce() in let f = fun u: Unit -> u; nonce_get(n) in 0");
        REQUIRE(ledger.size() == 1);
        CHECK(ledger.at(0) == 0);
    }
}

TEST_CASE("runtime errors surface as RuntimeError") {
    CHECK_THROWS_AS(run("1 2"), RuntimeError);
    CHECK_THROWS_AS(run("ghost"), RuntimeError);
}

TEST_CASE("system entropy produces distinct payloads") {
    NonceSource source = NonceSource::system_entropy();
    NonceV a = source.fresh();
    NonceV b = source.fresh();
    CHECK((a.payload_hi != b.payload_hi || a.payload_lo != b.payload_lo));
}
