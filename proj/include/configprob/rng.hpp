// Seedable 64-bit RNG with a fixed stream-derivation rule.
//
// The generator is xoshiro256** (Blackman/Vigna), state-initialized from the
// seed by splitmix64. Both algorithms are pinned here so that edge lists and
// Monte Carlo runs stay byte-reproducible across platforms and releases;
// std::shuffle / std::uniform_int_distribution give no such guarantee.
//
// Parallel streams: child_seed = derive_seed(master_seed, stream_index).

#pragma once

#include <cstdint>
#include <vector>

namespace configprob {

namespace detail {

// splitmix64 finalizer (no state update)
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t rotl64(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace detail

// One splitmix64 step; advances `state` and returns the next output.
constexpr std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    return detail::mix64(state);
}

// Stream derivation: child seeds for parallel work items. Order-independent,
// collision-resistant enough for trial indices.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    return detail::mix64(master + 0x9e3779b97f4a7c15ULL * (stream + 1));
}

class Xoshiro256 {
public:
    explicit Xoshiro256(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : state_) w = splitmix64_next(sm);
    }

    std::uint64_t next() {
        const std::uint64_t result = detail::rotl64(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = detail::rotl64(state_[3], 45);
        return result;
    }

    // Unbiased integer in [0, bound) by rejection on the wraparound remainder.
    std::uint64_t uniform_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_[4];
};

// Fisher-Yates with the pinned generator.
template <typename T>
void shuffle(std::vector<T>& v, Xoshiro256& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.uniform_below(i));
        std::swap(v[i - 1], v[j]);
    }
}

} // namespace configprob
