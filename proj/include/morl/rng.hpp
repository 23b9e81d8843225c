#pragma once

#include <cstdint>
#include <random>

namespace morl {

/// Deterministic random source. Uniform doubles are produced from the raw
/// 64-bit stream of a mt19937_64, so identical seeds give bit-identical
/// draw sequences on every platform (std::uniform_real_distribution makes
/// no such guarantee).
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    /// Integer in [0, n).
    std::uint64_t next_below(std::uint64_t n) {
        // rejection-free modulo is fine here; n is tiny in this codebase
        return gen_() % n;
    }

    /// Independent generator for a sub-stream (one per trial).
    SeededRng split(std::uint64_t stream) const { return SeededRng(seed_ + stream); }

private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

}  // namespace morl
