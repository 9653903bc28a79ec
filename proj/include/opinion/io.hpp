// Serialization of all artifact outputs. Every writer is bit-stable for
// identical inputs: UTF-8, LF line endings, '.' decimal separator, doubles
// printed with shortest round-trip formatting.

#ifndef OPINION_IO_HPP
#define OPINION_IO_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "opinion/analysis.hpp"
#include "opinion/fitting.hpp"
#include "opinion/metrics.hpp"
#include "opinion/signed_digraph.hpp"
#include "opinion/types.hpp"

namespace opinion {

/// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

// -- Graphs -----------------------------------------------------------------

/// Edge-list text format: header "n <size>", then one line "i j w" per
/// nonzero entry (0-based, w in {-1, 1}).
void write_graph_edge_list(const std::filesystem::path& path, const SignedDigraph& g);
SignedDigraph read_graph_edge_list(const std::filesystem::path& path);

/// Dense JSON form {"n": ..., "weights": [[...], ...]} for small graphs.
std::string graph_to_json(const SignedDigraph& g);
SignedDigraph graph_from_json(const std::string& text);

// -- Opinions and trajectories ------------------------------------------------

/// One value per line.
void write_opinions(const std::filesystem::path& path, const OpinionVector& x);
OpinionVector read_opinions(const std::filesystem::path& path);

/// CSV "step,x0,...,x{n-1}", one row per recorded state.
void write_trajectory_csv(const std::filesystem::path& path,
                          const std::vector<OpinionVector>& traj);
std::vector<OpinionVector> read_trajectory_csv(const std::filesystem::path& path);

/// CSV "step,theta_minus,theta_plus".
void write_agreement_csv(const std::filesystem::path& path,
                         const std::vector<GeneralAgreement>& curve);

// -- Traits -------------------------------------------------------------------

/// CSV "conformism,radicalism,stubbornness", one row per agent.
void write_traits_csv(const std::filesystem::path& path, const TraitAssignment& psi);
TraitAssignment read_traits_csv(const std::filesystem::path& path);

// -- Analysis -----------------------------------------------------------------

/// Header row plus five labeled rows of counts.
void write_transition_table_csv(const std::filesystem::path& path, const TransitionTable& t);

std::string metrics_to_json(const NetworkMetrics& m);

// -- Fitting ------------------------------------------------------------------

std::string fit_result_to_json(const FitResult& r);
FitResult fit_result_from_json(const std::string& text);

/// Wide cost matrix (questions x countries).
void write_cost_matrix_csv(const std::filesystem::path& path,
                           const std::vector<std::string>& question_labels,
                           const std::vector<std::string>& country_labels,
                           const std::vector<std::vector<double>>& costs);

/// Same layout, each cell "green" when its cost is strictly below the
/// threshold and "red" otherwise.
void write_acceptance_matrix_csv(const std::filesystem::path& path,
                                 const std::vector<std::string>& question_labels,
                                 const std::vector<std::string>& country_labels,
                                 const std::vector<std::vector<double>>& costs,
                                 double threshold = kAcceptanceThreshold);

void write_crossval_csv(const std::filesystem::path& path, const CrossvalResult& r);

void write_text_file(const std::filesystem::path& path, const std::string& content);

} // namespace opinion

#endif
