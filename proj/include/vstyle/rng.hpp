#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace vstyle {

// PCG32 (Melissa O'Neill's pcg32_random_r). Chosen over std::mt19937 +
// std::*_distribution because libstdc++/libc++ distributions are not
// bit-compatible; this generator produces the same stream everywhere.
class Pcg32 {
public:
    explicit Pcg32(uint64_t seed, uint64_t stream = 0xda3e39cb94b95bdbULL) {
        state_ = 0u;
        inc_ = (stream << 1u) | 1u;
        next_u32();
        state_ += seed;
        next_u32();
    }

    uint32_t next_u32() {
        uint64_t old = state_;
        state_ = old * 6364136223846793005ULL + inc_;
        uint32_t xorshifted = static_cast<uint32_t>(((old >> 18u) ^ old) >> 27u);
        uint32_t rot = static_cast<uint32_t>(old >> 59u);
        return (xorshifted >> rot) | (xorshifted << ((-rot) & 31u));
    }

    uint64_t next_u64() {
        uint64_t hi = next_u32();
        return (hi << 32) | next_u32();
    }

    // Uniform in [0,1), 24 bits of mantissa.
    float uniform() { return static_cast<float>(next_u32() >> 8) * 0x1p-24f; }

    float uniform(float lo, float hi) { return lo + (hi - lo) * uniform(); }

    // Integer in [0, n). Bounded rejection to kill modulo bias.
    uint32_t below(uint32_t n) {
        uint32_t threshold = (-n) % n;
        for (;;) {
            uint32_t r = next_u32();
            if (r >= threshold) return r % n;
        }
    }

    // Standard normal via polar Box-Muller (rejection loop is deterministic
    // given the stream).
    float normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        float u, v, s;
        do {
            u = uniform() * 2.0f - 1.0f;
            v = uniform() * 2.0f - 1.0f;
            s = u * u + v * v;
        } while (s >= 1.0f || s == 0.0f);
        float m = std::sqrt(-2.0f * std::log(s) / s);
        spare_ = v * m;
        have_spare_ = true;
        return u * m;
    }

private:
    uint64_t state_ = 0;
    uint64_t inc_ = 0;
    bool have_spare_ = false;
    float spare_ = 0.0f;
};

// FNV-1a, used to derive independent sub-seeds from (seed, purpose string)
// so parameter init does not depend on construction order.
inline uint64_t hash64(std::string_view s) {
    uint64_t h = 1469598103934665603ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

inline uint64_t sub_seed(uint64_t seed, std::string_view purpose) {
    uint64_t h = hash64(purpose);
    // splitmix-style finalizer over the combination
    uint64_t z = seed ^ (h + 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace vstyle
