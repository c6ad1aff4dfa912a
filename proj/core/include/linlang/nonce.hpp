#pragma once

#include <cstdint>
#include <stdexcept>

#include "linlang/value.hpp"

namespace linlang {

struct EntropyUnavailable : std::runtime_error {
    EntropyUnavailable() : std::runtime_error("system entropy unavailable") {}
};

// Produces nonce payloads. SeededPrng is a splitmix64 generator sampled
// twice per nonce (high word first), so the payload stream is a pure
// function of the seed. SystemEntropy reads the platform RNG.
class NonceSource {
public:
    static NonceSource seeded(std::uint64_t seed) { return NonceSource(seed, false); }
    static NonceSource system_entropy() { return NonceSource(0, true); }

    // Next nonce value; ordinal = number of nonces created so far.
    NonceV fresh();

    std::uint64_t created() const { return next_id_; }

private:
    NonceSource(std::uint64_t seed, bool entropy) : state_(seed), entropy_(entropy) {}
    std::uint64_t next_u64();

    std::uint64_t state_;
    bool entropy_;
    std::uint64_t next_id_ = 0;
};

} // namespace linlang
