#include "opinion/dynamics.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

namespace opinion {

namespace {

constexpr double kInnerBand = 2.0 / 5.0;
constexpr double kOuterBand = 6.0 / 5.0;

enum class Band { MuchLess, Less, Comparable, More, MuchMore };

inline Band band_of(double delta) {
    assert(delta >= -2.0 && delta <= 2.0);
    if (delta >= kOuterBand) return Band::MuchLess;
    if (delta >= kInnerBand) return Band::Less;
    if (delta > -kInnerBand) return Band::Comparable;
    if (delta > -kOuterBand) return Band::More;
    return Band::MuchMore;
}

inline void count_band(NeighbourPartition& p, double delta) {
    switch (band_of(delta)) {
        case Band::MuchLess: ++p.much_less; break;
        case Band::Less: ++p.less; break;
        case Band::Comparable: ++p.comparable; break;
        case Band::More: ++p.more; break;
        case Band::MuchMore: ++p.much_more; break;
    }
}

void check_dimensions(const OpinionVector& x, const SignedDigraph& g,
                      const TraitAssignment& psi) {
    if (x.size() != g.size())
        throw std::invalid_argument("opinion vector length does not match digraph size");
    if (psi.size() != g.size())
        throw std::invalid_argument("trait assignment length does not match digraph size");
    validate_opinions(x);
}

} // namespace

NeighbourPartition classify_neighbours(std::size_t agent, const OpinionVector& x,
                                       const SignedDigraph& g) {
    if (agent >= g.size()) throw std::out_of_range("agent index out of range");
    if (x.size() != g.size())
        throw std::invalid_argument("opinion vector length does not match digraph size");
    validate_opinions(x);

    NeighbourPartition p;
    const double xi = x[agent];
    for (std::size_t j = 0; j < g.size(); ++j) {
        int w = g.weight(agent, j);
        if (w == 0) continue;
        count_band(p, xi - w * x[j]);
    }
    return p;
}

double saturate(double value) {
    if (!std::isfinite(value)) throw std::domain_error("saturate: non-finite input");
    if (value > 1.0) return 1.0;
    if (value < -1.0) return -1.0;
    return value;
}

namespace {

// Shared by step() and evolve(): one synchronous update using a precompiled
// adjacency. Arithmetic is kept identical between the two entry points so
// that evolve(x, K) reproduces K chained step() calls bit for bit.
void step_into(const OpinionVector& x, const SignedDigraph::Adjacency& adj,
               const TraitAssignment& psi, const EvolutionParams& params,
               OpinionVector& out) {
    const std::size_t n = psi.size();
    for (std::size_t i = 0; i < n; ++i) {
        NeighbourPartition p;
        const double xi = x[i];
        for (std::uint32_t e = adj.offsets[i]; e < adj.offsets[i + 1]; ++e) {
            const auto [j, w] = adj.edges[e];
            count_band(p, xi - w * x[j]);
        }
        const double degree = static_cast<double>(p.total());
        const auto& t = psi[i];
        const double conf = t.conformism *
                            (params.xi * (static_cast<double>(p.much_more) -
                                          static_cast<double>(p.much_less)) +
                             (static_cast<double>(p.more) - static_cast<double>(p.less)));
        const double rad = t.radicalism * params.mu * static_cast<double>(p.comparable) * xi;
        out[i] = saturate(xi + (params.lambda / degree) * (conf + rad));
    }
}

} // namespace

OpinionVector step(const OpinionVector& x, const SignedDigraph& g,
                   const TraitAssignment& psi, const EvolutionParams& params) {
    check_dimensions(x, g, psi);
    params.validate();
    auto adj = g.compile_adjacency();
    OpinionVector next(x.size());
    step_into(x, adj, psi, params, next);
    return next;
}

OpinionVector evolve(const OpinionVector& x0, const SignedDigraph& g,
                     const TraitAssignment& psi, const EvolutionParams& params,
                     std::size_t steps) {
    check_dimensions(x0, g, psi);
    params.validate();
    auto adj = g.compile_adjacency();
    OpinionVector cur = x0;
    OpinionVector next(x0.size());
    for (std::size_t k = 0; k < steps; ++k) {
        step_into(cur, adj, psi, params, next);
        cur.swap(next);
    }
    return cur;
}

std::vector<OpinionVector> evolve_trajectory(const OpinionVector& x0, const SignedDigraph& g,
                                             const TraitAssignment& psi,
                                             const EvolutionParams& params, std::size_t steps) {
    check_dimensions(x0, g, psi);
    params.validate();
    auto adj = g.compile_adjacency();
    std::vector<OpinionVector> traj;
    traj.reserve(steps + 1);
    traj.push_back(x0);
    for (std::size_t k = 0; k < steps; ++k) {
        OpinionVector next(x0.size());
        step_into(traj.back(), adj, psi, params, next);
        traj.push_back(std::move(next));
    }
    return traj;
}

InnerTraits average_traits(const TraitAssignment& psi) {
    if (psi.empty()) throw std::invalid_argument("average_traits: empty assignment");
    double a = 0.0, b = 0.0, c = 0.0;
    for (const auto& t : psi) {
        a += t.conformism;
        b += t.radicalism;
        c += t.stubbornness;
    }
    const double n = static_cast<double>(psi.size());
    return InnerTraits{a / n, b / n, c / n};
}

} // namespace opinion
