// Thin deterministic layer over std::mt19937_64. The standard distributions
// are implementation-defined, so the few draws we need are spelled out here
// to keep seeded runs reproducible.

#ifndef OPINION_RANDOM_HPP
#define OPINION_RANDOM_HPP

#include <cstdint>
#include <limits>
#include <random>

namespace opinion {

class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

    /// Uniform in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return next_double() < p; }

    /// Uniform in [-1, 1).
    double opinion() { return 2.0 * next_double() - 1.0; }

    /// Uniform integer in [0, bound), rejection-sampled to avoid modulo bias.
    std::uint64_t index(std::uint64_t bound) {
        const std::uint64_t limit =
            std::numeric_limits<std::uint64_t>::max() -
            std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t v = rng_();
        while (v >= limit) v = rng_();
        return v % bound;
    }

private:
    std::mt19937_64 rng_;
};

} // namespace opinion

#endif
