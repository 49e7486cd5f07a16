#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "depthrank/numerics.hpp"

// Seeded, platform-independent random streams. A stream is identified by a
// (seed, stream_id) pair; the same pair always yields the same draw sequence,
// which is what makes Monte Carlo runs reproducible and schedule-independent:
// replication r simply consumes RngStream(seed, r).
//
// The generator is xoshiro256++ with splitmix64 state expansion. Normal
// variates come from a hand-rolled Box-Muller transform rather than
// std::normal_distribution, whose algorithm the standard leaves unspecified.

namespace depthrank {

class RngStream {
public:
    RngStream() : RngStream(0, 0) {}

    RngStream(std::uint64_t seed, std::uint64_t stream_id) {
        std::uint64_t x = splitmix_mix(seed) ^ splitmix_mix(~stream_id * 0x9E3779B97F4A7C15ULL + 1);
        for (auto& w : s_) {
            x += 0x9E3779B97F4A7C15ULL;
            w = splitmix_mix(x);
        }
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 0x9E3779B97F4A7C15ULL;
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform on [0,1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Standard normal; Box-Muller pairs with one value cached.
    double next_normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u1 = next_double();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        double u2 = next_double();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * kPi * u2;
        cached_ = r * std::sin(a);
        have_cached_ = true;
        return r * std::cos(a);
    }

    // Uniform direction on the unit sphere in R^d.
    std::vector<double> next_unit_vector(std::size_t d) {
        std::vector<double> u(d);
        double norm2 = 0.0;
        do {
            norm2 = 0.0;
            for (auto& v : u) {
                v = next_normal();
                norm2 += v * v;
            }
        } while (norm2 == 0.0);
        double inv = 1.0 / std::sqrt(norm2);
        for (auto& v : u) v *= inv;
        return u;
    }

    // Uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n) {
        // Rejection to avoid modulo bias.
        std::uint64_t limit = n * (UINT64_MAX / n);
        std::uint64_t x;
        do { x = next_u64(); } while (x >= limit);
        return x % n;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    static std::uint64_t splitmix_mix(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t s_[4];
    double cached_ = 0.0;
    bool have_cached_ = false;
};

} // namespace depthrank
