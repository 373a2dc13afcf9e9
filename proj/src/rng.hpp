#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace hnilm {

// Deterministic draws built directly on the mt19937_64 bit stream. The
// std::*_distribution adaptors are implementation-defined, which would break
// byte-identical corpus regeneration across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t bits() { return engine_(); }

    // Uniform in [0, 1).
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    // Index in [0, n).
    std::size_t index(std::size_t n) {
        return static_cast<std::size_t>(uniform01() * static_cast<double>(n)) % n;
    }

    // Box-Muller; no cached state so derived seeds stay order-independent.
    double gaussian(double mean, double sigma) {
        double u1 = uniform01();
        double u2 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        return mean + sigma * r * std::cos(2.0 * M_PI * u2);
    }

    // Knuth's product-of-uniforms method; fine for the rates used here.
    int poisson(double rate) {
        if (rate <= 0.0) return 0;
        double limit = std::exp(-rate);
        double p = 1.0;
        int k = 0;
        do {
            ++k;
            p *= uniform01();
        } while (p > limit);
        return k - 1;
    }

private:
    std::mt19937_64 engine_;
};

constexpr std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

constexpr std::uint64_t mix_seed(std::uint64_t seed, std::string_view tag) {
    std::uint64_t h = seed ^ fnv1a64(tag);
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdull;
    h ^= h >> 33;
    h *= 0xc4ceb9fe1a85ec53ull;
    h ^= h >> 33;
    return h;
}

} // namespace hnilm
