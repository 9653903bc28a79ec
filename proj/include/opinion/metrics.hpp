#ifndef OPINION_METRICS_HPP
#define OPINION_METRICS_HPP

#include <cstddef>

#include "opinion/signed_digraph.hpp"

namespace opinion {

/// The six per-digraph statistics reported for every fitted network.
struct NetworkMetrics {
    double average_path_length = 0.0;
    double clustering_coefficient = 0.0;
    std::size_t positive_edges = 0;
    std::size_t negative_edges = 0;
    std::size_t diameter = 0;
    double balance_index = 0.0;
};

/// Computes all six metrics. Path-based metrics ignore edge signs; the
/// balance index is trace(exp(W)) / trace(exp(|W|)). Requires a strongly
/// connected digraph.
NetworkMetrics metrics(const SignedDigraph& g);

} // namespace opinion

#endif
