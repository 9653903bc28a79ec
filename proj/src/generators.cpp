#include "opinion/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "opinion/random.hpp"
#include "opinion/types.hpp"

namespace opinion {

namespace {

constexpr int kMaxAttempts = 100;

void check_common(std::size_t n, double p_positive) {
    if (n < 2) throw std::invalid_argument("generator requires n >= 2");
    if (p_positive < 0.0 || p_positive > 1.0)
        throw std::invalid_argument("p_positive must be a probability");
}

// Assigns +-1 to every off-diagonal edge, row-major order.
void sign_edges(SignedDigraph& g, double p_positive, RandomSource& rng) {
    const std::size_t n = g.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && g.weight(i, j) != 0)
                g.set_weight(i, j, rng.bernoulli(p_positive) ? 1 : -1);
}

// In-edge source offsets for the circulant lattice: k/2 on each side.
std::vector<std::size_t> lattice_sources(std::size_t n, std::size_t k_in, std::size_t agent) {
    std::vector<std::size_t> src;
    for (std::size_t d = 1; d <= k_in / 2; ++d) {
        src.push_back((agent + n - d) % n);
        src.push_back((agent + d) % n);
    }
    return src;
}

template <typename Builder>
SignedDigraph generate_connected(Builder&& build, RandomSource& rng) {
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        SignedDigraph g = build(rng);
        if (is_strongly_connected(g)) return g;
    }
    throw GenerationError("could not generate a strongly connected digraph in " +
                          std::to_string(kMaxAttempts) + " attempts");
}

} // namespace

SignedDigraph gen_complete(std::size_t n, double p_positive, std::uint64_t seed) {
    check_common(n, p_positive);
    RandomSource rng(seed);
    return generate_connected(
        [&](RandomSource& r) {
            SignedDigraph g(n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (i != j) g.set_weight(i, j, 1);
            sign_edges(g, p_positive, r);
            return g;
        },
        rng);
}

SignedDigraph gen_ring(std::size_t n, double p_positive, std::uint64_t seed) {
    check_common(n, p_positive);
    RandomSource rng(seed);
    return generate_connected(
        [&](RandomSource& r) {
            SignedDigraph g(n);
            for (std::size_t i = 0; i < n; ++i) g.set_weight(i, (i + n - 1) % n, 1);
            sign_edges(g, p_positive, r);
            return g;
        },
        rng);
}

SignedDigraph gen_lattice(std::size_t n, std::size_t k_in, double p_positive,
                          std::uint64_t seed) {
    check_common(n, p_positive);
    if (k_in % 2 != 0) throw std::invalid_argument("lattice k_in must be even");
    if (k_in >= n) throw std::invalid_argument("lattice k_in must be < n");
    RandomSource rng(seed);
    return generate_connected(
        [&](RandomSource& r) {
            SignedDigraph g(n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t s : lattice_sources(n, k_in, i)) g.set_weight(i, s, 1);
            sign_edges(g, p_positive, r);
            return g;
        },
        rng);
}

SignedDigraph gen_small_world(std::size_t n, std::size_t k_in, double p_rewire,
                              double p_positive, std::uint64_t seed) {
    check_common(n, p_positive);
    if (k_in % 2 != 0) throw std::invalid_argument("small-world k_in must be even");
    if (k_in >= n) throw std::invalid_argument("small-world k_in must be < n");
    if (p_rewire < 0.0 || p_rewire > 1.0)
        throw std::invalid_argument("p_rewire must be a probability");

    RandomSource rng(seed);
    return generate_connected(
        [&](RandomSource& r) {
            SignedDigraph g(n);
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<std::size_t> sources = lattice_sources(n, k_in, i);
                for (std::size_t e = 0; e < sources.size(); ++e) {
                    if (!r.bernoulli(p_rewire)) continue;
                    // No alternative source exists when every other agent is
                    // already an in-neighbour; keep the lattice edge then.
                    if (k_in + 1 >= n) continue;
                    for (;;) {
                        std::size_t cand = static_cast<std::size_t>(r.index(n));
                        if (cand == i) continue;
                        if (std::find(sources.begin(), sources.end(), cand) != sources.end())
                            continue;
                        sources[e] = cand;
                        break;
                    }
                }
                for (std::size_t s : sources) g.set_weight(i, s, 1);
            }
            sign_edges(g, p_positive, r);
            return g;
        },
        rng);
}

} // namespace opinion
