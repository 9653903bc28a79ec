#include "opinion/baselines.hpp"

#include <cmath>
#include <stdexcept>

namespace opinion {

StochasticDigraph to_row_stochastic(const SignedDigraph& g) {
    const std::size_t n = g.size();
    StochasticDigraph s;
    s.n = n;
    s.w.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t nnz = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (g.weight(i, j) != 0) ++nnz;
        if (nnz == 0) throw std::invalid_argument("to_row_stochastic: zero row");
        const double share = 1.0 / static_cast<double>(nnz);
        for (std::size_t j = 0; j < n; ++j)
            if (g.weight(i, j) != 0) s.w[i * n + j] = share;
    }
    return s;
}

SusceptibilityVector traits_to_susceptibility(const TraitAssignment& psi) {
    SusceptibilityVector a;
    a.reserve(psi.size());
    for (const auto& t : psi) {
        const double denom = t.conformism + t.stubbornness;
        a.push_back(denom == 0.0 ? 0.5 : t.conformism / denom);
    }
    return a;
}

namespace {

void check_sizes(const OpinionVector& x, const StochasticDigraph& g) {
    if (x.size() != g.n)
        throw std::invalid_argument("opinion vector length does not match digraph size");
}

void fj_step(const OpinionVector& cur, const StochasticDigraph& g,
             const SusceptibilityVector& a, const OpinionVector& anchor,
             OpinionVector& out) {
    const std::size_t n = g.n;
    for (std::size_t i = 0; i < n; ++i) {
        double dot = 0.0;
        for (std::size_t j = 0; j < n; ++j) dot += g.w[i * n + j] * cur[j];
        out[i] = a[i] * dot + (1.0 - a[i]) * anchor[i];
    }
}

} // namespace

OpinionVector fj_evolve(const OpinionVector& x0, const StochasticDigraph& g,
                        const SusceptibilityVector& a, std::size_t steps) {
    check_sizes(x0, g);
    if (a.size() != g.n)
        throw std::invalid_argument("susceptibility length does not match digraph size");
    OpinionVector cur = x0, next(x0.size());
    for (std::size_t k = 0; k < steps; ++k) {
        fj_step(cur, g, a, x0, next);
        cur.swap(next);
    }
    return cur;
}

std::vector<OpinionVector> fj_trajectory(const OpinionVector& x0, const StochasticDigraph& g,
                                         const SusceptibilityVector& a, std::size_t steps) {
    check_sizes(x0, g);
    if (a.size() != g.n)
        throw std::invalid_argument("susceptibility length does not match digraph size");
    std::vector<OpinionVector> traj{x0};
    traj.reserve(steps + 1);
    for (std::size_t k = 0; k < steps; ++k) {
        OpinionVector next(x0.size());
        fj_step(traj.back(), g, a, x0, next);
        traj.push_back(std::move(next));
    }
    return traj;
}

namespace {

void fg_step(const OpinionVector& cur, const StochasticDigraph& g, OpinionVector& out) {
    const std::size_t n = g.n;
    for (std::size_t i = 0; i < n; ++i) {
        double dot = 0.0;
        for (std::size_t j = 0; j < n; ++j) dot += g.w[i * n + j] * cur[j];
        out[i] = dot;
    }
}

} // namespace

OpinionVector fg_evolve(const OpinionVector& x0, const StochasticDigraph& g,
                        std::size_t steps) {
    check_sizes(x0, g);
    OpinionVector cur = x0, next(x0.size());
    for (std::size_t k = 0; k < steps; ++k) {
        fg_step(cur, g, next);
        cur.swap(next);
    }
    return cur;
}

std::vector<OpinionVector> fg_trajectory(const OpinionVector& x0, const StochasticDigraph& g,
                                         std::size_t steps) {
    check_sizes(x0, g);
    std::vector<OpinionVector> traj{x0};
    traj.reserve(steps + 1);
    for (std::size_t k = 0; k < steps; ++k) {
        OpinionVector next(x0.size());
        fg_step(traj.back(), g, next);
        traj.push_back(std::move(next));
    }
    return traj;
}

OpinionVector null_evolve(const OpinionVector& x0, std::size_t) { return x0; }

} // namespace opinion
