// Comparison models: Friedkin-Johnsen, French-DeGroot, and the Null model,
// plus the bridges that turn signed digraphs and inner traits into their
// parameter spaces.

#ifndef OPINION_BASELINES_HPP
#define OPINION_BASELINES_HPP

#include <cstddef>
#include <vector>

#include "opinion/signed_digraph.hpp"
#include "opinion/types.hpp"

namespace opinion {

/// Unsigned, row-stochastic influence matrix; every row sums to 1.
struct StochasticDigraph {
    std::size_t n = 0;
    std::vector<double> w;  // row-major

    double weight(std::size_t i, std::size_t j) const { return w[i * n + j]; }
};

/// Per-agent susceptibility a_i in [0, 1]; prejudice is 1 - a_i.
using SusceptibilityVector = std::vector<double>;

/// Uniform row normalisation: entry (i, j) = |w_ij| / (nonzeros in row i).
StochasticDigraph to_row_stochastic(const SignedDigraph& g);

/// a_i = conformism / (conformism + stubbornness); 0.5 when that sum is 0.
SusceptibilityVector traits_to_susceptibility(const TraitAssignment& psi);

/// x[k+1]_i = a_i * (row i . x[k]) + (1 - a_i) * x[0]_i, prejudice anchored
/// to the initial state captured at call time.
OpinionVector fj_evolve(const OpinionVector& x0, const StochasticDigraph& g,
                        const SusceptibilityVector& a, std::size_t steps);

std::vector<OpinionVector> fj_trajectory(const OpinionVector& x0, const StochasticDigraph& g,
                                         const SusceptibilityVector& a, std::size_t steps);

/// x[k+1] = G x[k].
OpinionVector fg_evolve(const OpinionVector& x0, const StochasticDigraph& g,
                        std::size_t steps);

std::vector<OpinionVector> fg_trajectory(const OpinionVector& x0, const StochasticDigraph& g,
                                         std::size_t steps);

/// Opinions never change.
OpinionVector null_evolve(const OpinionVector& x0, std::size_t steps);

} // namespace opinion

#endif
