#include "opinion/analysis.hpp"

#include <algorithm>
#include <stdexcept>

namespace opinion {

GeneralAgreement general_agreement(const OpinionVector& x) {
    GeneralAgreement g;
    for (double v : x) {
        if (v < 0.0) g.theta_minus += v;
        else if (v > 0.0) g.theta_plus += v;
    }
    return g;
}

std::vector<GeneralAgreement> agreement_trajectory(const std::vector<OpinionVector>& traj) {
    std::vector<GeneralAgreement> out;
    out.reserve(traj.size());
    for (const auto& x : traj) out.push_back(general_agreement(x));
    return out;
}

const char* category_name(OpinionCategory c) {
    return kCategoryNames[static_cast<int>(c)];
}

std::array<std::size_t, 10> opinion_histogram(const OpinionVector& x) {
    validate_opinions(x);
    std::array<std::size_t, 10> h{};
    for (double v : x) {
        // Smallest b with 5 (v + 1) <= b + 1; right-closed bins.
        int b = 9;
        const double scaled = 5.0 * (v + 1.0);
        for (int k = 0; k < 10; ++k) {
            if (scaled <= static_cast<double>(k + 1)) {
                b = k;
                break;
            }
        }
        ++h[static_cast<std::size_t>(b)];
    }
    return h;
}

OpinionCategory categorize(const OpinionVector& x, const CategorizeConfig& cfg) {
    if (x.size() < 2) throw std::invalid_argument("categorize requires at least two agents");

    const auto [mn, mx] = std::minmax_element(x.begin(), x.end());
    if (*mx - *mn <= cfg.perfect_consensus_range) return OpinionCategory::PerfectConsensus;

    const auto hist = opinion_histogram(x);
    const double total = static_cast<double>(x.size());
    std::array<double, 10> frac{};
    for (std::size_t b = 0; b < 10; ++b) frac[b] = static_cast<double>(hist[b]) / total;

    const double extremes = frac[0] + frac[9];
    double interior = 0.0;
    for (std::size_t b = 1; b < 9; ++b) interior += frac[b];
    if (extremes >= cfg.polarization_joint && frac[0] >= cfg.polarization_each &&
        frac[9] >= cfg.polarization_each && interior <= cfg.polarization_interior)
        return OpinionCategory::Polarization;

    for (std::size_t b = 0; b < 10; ++b) {
        double window = frac[b];
        if (b > 0) window += frac[b - 1];
        if (b < 9) window += frac[b + 1];
        if (window >= cfg.consensus_window) return OpinionCategory::Consensus;
    }

    // Clustering: two modes in nonadjacent bins with a near-empty bin between.
    for (std::size_t b1 = 0; b1 < 10; ++b1) {
        if (frac[b1] < cfg.clustering_mode) continue;
        for (std::size_t b2 = b1 + 2; b2 < 10; ++b2) {
            if (frac[b2] < cfg.clustering_mode) continue;
            for (std::size_t gap = b1 + 1; gap < b2; ++gap) {
                if (frac[gap] < cfg.clustering_gap) return OpinionCategory::Clustering;
            }
        }
    }

    return OpinionCategory::Dissensus;
}

std::uint64_t TransitionTable::total() const {
    std::uint64_t t = 0;
    for (const auto& row : counts)
        for (auto c : row) t += c;
    return t;
}

TransitionTable transition_table(
    const std::vector<std::pair<OpinionVector, OpinionVector>>& pairs,
    const CategorizeConfig& cfg) {
    TransitionTable t;
    for (const auto& [before, after] : pairs) {
        const int a = static_cast<int>(categorize(before, cfg));
        const int b = static_cast<int>(categorize(after, cfg));
        ++t.counts[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }
    return t;
}

DiagonalSummary diagonal_summary(const TransitionTable& t) {
    DiagonalSummary s;
    for (std::size_t a = 0; a < 5; ++a) {
        for (std::size_t b = 0; b < 5; ++b) {
            if (b > a) s.above += t.counts[a][b];
            else if (b == a) s.on += t.counts[a][b];
            else s.below += t.counts[a][b];
        }
    }
    const std::uint64_t total = s.above + s.on + s.below;
    if (total > 0) {
        const double d = static_cast<double>(total);
        s.above_pct = 100.0 * static_cast<double>(s.above) / d;
        s.on_pct = 100.0 * static_cast<double>(s.on) / d;
        s.below_pct = 100.0 * static_cast<double>(s.below) / d;
    }
    return s;
}

} // namespace opinion
