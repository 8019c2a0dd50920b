// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

#include "chainlab/sha256.hpp"

namespace chainlab {

// All simulation randomness flows from one run seed through named
// sub-streams ("network", "mining", "sortition", "node/3", ...), so separate
// concerns never perturb each other's draws. Samplers are hand-rolled on top
// of mt19937_64 to keep byte-identical replays independent of the standard
// library's unspecified distribution algorithms.
class RngStream {
public:
    explicit RngStream(uint64_t seed) : eng_(seed) {}

    static RngStream derive(uint64_t run_seed, std::string_view name) {
        Sha256 h;
        ByteWriter w;
        w.u64(run_seed);
        h.update(w.bytes());
        h.update(name);
        return RngStream(digest_prefix_u64(h.finish()));
    }

    uint64_t next_u64() { return eng_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n). n must be positive.
    uint64_t uniform_below(uint64_t n) {
        // Lemire's multiply-shift rejection method.
        uint64_t x = next_u64();
        __uint128_t m = static_cast<__uint128_t>(x) * n;
        uint64_t l = static_cast<uint64_t>(m);
        if (l < n) {
            uint64_t t = -n % n;
            while (l < t) {
                x = next_u64();
                m = static_cast<__uint128_t>(x) * n;
                l = static_cast<uint64_t>(m);
            }
        }
        return static_cast<uint64_t>(m >> 64);
    }

    /// Uniform integer in [lo, hi] inclusive.
    uint64_t uniform_range(uint64_t lo, uint64_t hi) {
        return lo + uniform_below(hi - lo + 1);
    }

    /// Exponential with the given rate (mean 1/rate).
    double exponential(double rate) {
        double u = uniform01();
        return -std::log1p(-u) / rate;
    }

    /// Standard normal via Box-Muller (one value per pair of uniforms).
    double normal() {
        double u1 = uniform01();
        double u2 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    double lognormal(double mu, double sigma) { return std::exp(mu + sigma * normal()); }

    Digest256 next_digest() {
        ByteWriter w;
        for (int i = 0; i < 4; ++i) w.u64(next_u64());
        Digest256 d;
        std::memcpy(d.bytes.data(), w.bytes().data(), 32);
        return d;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace chainlab
