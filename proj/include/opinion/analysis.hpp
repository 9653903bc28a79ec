// Population-level summaries: general agreement, qualitative distribution
// categories, and 5x5 transition tables between them.

#ifndef OPINION_ANALYSIS_HPP
#define OPINION_ANALYSIS_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "opinion/types.hpp"

namespace opinion {

/// Sums of the strictly negative and strictly positive opinions.
struct GeneralAgreement {
    double theta_minus = 0.0;
    double theta_plus = 0.0;
};

GeneralAgreement general_agreement(const OpinionVector& x);

std::vector<GeneralAgreement> agreement_trajectory(const std::vector<OpinionVector>& traj);

enum class OpinionCategory : int {
    PerfectConsensus = 0,
    Consensus = 1,
    Polarization = 2,
    Clustering = 3,
    Dissensus = 4,
};

inline constexpr std::array<const char*, 5> kCategoryNames = {
    "PerfectConsensus", "Consensus", "Polarization", "Clustering", "Dissensus"};

const char* category_name(OpinionCategory c);

/// Thresholds for the rule cascade in categorize(). The defaults are the
/// documented reference values; they can be tuned per experiment.
struct CategorizeConfig {
    double perfect_consensus_range = 0.2;  // max(x) - min(x)
    double polarization_joint = 0.70;      // mass in the two extreme bins
    double polarization_each = 0.20;       // mass in each extreme bin
    double polarization_interior = 0.30;   // mass allowed in interior bins
    double consensus_window = 0.70;        // mass in one bin plus both neighbours
    double clustering_mode = 0.15;         // mass of each separated mode
    double clustering_gap = 0.05;          // mass of the separating bin
};

/// Ten-bin histogram on [-1, 1]: bin b covers (-1 + b/5, -1 + (b+1)/5],
/// with the first bin closed on the left.
std::array<std::size_t, 10> opinion_histogram(const OpinionVector& x);

/// Deterministic rule cascade over the histogram; see CategorizeConfig.
/// Requires at least two agents.
OpinionCategory categorize(const OpinionVector& x, const CategorizeConfig& cfg = {});

/// counts[a][b] = pairs whose initial vector categorises as a and final as b.
struct TransitionTable {
    std::array<std::array<std::uint64_t, 5>, 5> counts{};

    std::uint64_t total() const;
};

TransitionTable transition_table(
    const std::vector<std::pair<OpinionVector, OpinionVector>>& pairs,
    const CategorizeConfig& cfg = {});

/// Counts and percentages of table cells above / on / below the diagonal.
struct DiagonalSummary {
    std::uint64_t above = 0, on = 0, below = 0;
    double above_pct = 0.0, on_pct = 0.0, below_pct = 0.0;
};

DiagonalSummary diagonal_summary(const TransitionTable& t);

} // namespace opinion

#endif
