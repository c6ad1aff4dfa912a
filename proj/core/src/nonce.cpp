#include "linlang/nonce.hpp"

#include <random>

namespace linlang {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace

std::uint64_t NonceSource::next_u64() {
    if (!entropy_)
        return splitmix64(state_);
    try {
        static thread_local std::random_device device;
        return (static_cast<std::uint64_t>(device()) << 32) | device();
    } catch (const std::exception&) {
        throw EntropyUnavailable{};
    }
}

NonceV NonceSource::fresh() {
    std::uint64_t hi = next_u64();
    std::uint64_t lo = next_u64();
    return NonceV{next_id_++, hi, lo};
}

} // namespace linlang
