// Seeded signed-digraph generators: complete, ring, lattice, and a directed
// small-world construction (lattice plus random in-edge rewiring).

#ifndef OPINION_GENERATORS_HPP
#define OPINION_GENERATORS_HPP

#include <cstdint>

#include "opinion/signed_digraph.hpp"

namespace opinion {

/// Every off-diagonal pair connected; each edge positive with probability
/// p_positive, negative otherwise.
SignedDigraph gen_complete(std::size_t n, double p_positive, std::uint64_t seed);

/// Directed cycle: agent i is influenced by agent (i - 1) mod n.
SignedDigraph gen_ring(std::size_t n, double p_positive, std::uint64_t seed);

/// Circulant lattice: agent i is influenced by the k_in/2 nearest agents on
/// each side. k_in must be even and < n.
SignedDigraph gen_lattice(std::size_t n, std::size_t k_in, double p_positive,
                          std::uint64_t seed);

/// Watts-Strogatz style: start from the lattice, rewire each in-edge with
/// probability p_rewire to a uniformly random new source (no duplicates, no
/// self), then sign every off-diagonal edge. Regenerates until strongly
/// connected, up to 100 attempts.
SignedDigraph gen_small_world(std::size_t n, std::size_t k_in, double p_rewire,
                              double p_positive, std::uint64_t seed);

} // namespace opinion

#endif
