// Classification-based opinion update: neighbour classification into five
// perceived-agreement buckets, the trait-weighted update law, and multi-step
// evolution.

#ifndef OPINION_DYNAMICS_HPP
#define OPINION_DYNAMICS_HPP

#include <cstddef>
#include <vector>

#include "opinion/signed_digraph.hpp"
#include "opinion/types.hpp"

namespace opinion {

/// Bucket counts for one agent's in-neighbours, keyed by how much the
/// neighbour is perceived to agree relative to the classifying agent.
/// The weighted difference D = x_i - w_ij * x_j falls into exactly one band:
///   much_less   6/5 <= D <= 2
///   less        2/5 <= D <  6/5
///   comparable -2/5 <  D <  2/5
///   more       -6/5 <  D <= -2/5
///   much_more    -2 <= D <= -6/5
/// Band comparisons are exact floating-point comparisons; no epsilon.
struct NeighbourPartition {
    std::size_t much_less = 0;
    std::size_t less = 0;
    std::size_t comparable = 0;
    std::size_t more = 0;
    std::size_t much_more = 0;

    std::size_t total() const { return much_less + less + comparable + more + much_more; }
};

NeighbourPartition classify_neighbours(std::size_t agent, const OpinionVector& x,
                                       const SignedDigraph& g);

/// Clamps to [-1, 1]: identity inside, sign outside. Throws on non-finite input.
double saturate(double value);

/// One synchronous update of the whole population; all classifications are
/// computed from the input state.
OpinionVector step(const OpinionVector& x, const SignedDigraph& g,
                   const TraitAssignment& psi, const EvolutionParams& params);

/// Applies step() `steps` times.
OpinionVector evolve(const OpinionVector& x0, const SignedDigraph& g,
                     const TraitAssignment& psi, const EvolutionParams& params,
                     std::size_t steps);

/// As evolve(), but returns all steps + 1 states including the initial one.
std::vector<OpinionVector> evolve_trajectory(const OpinionVector& x0, const SignedDigraph& g,
                                             const TraitAssignment& psi,
                                             const EvolutionParams& params, std::size_t steps);

/// Componentwise mean of an assignment; the traits of an average agent.
InnerTraits average_traits(const TraitAssignment& psi);

} // namespace opinion

#endif
