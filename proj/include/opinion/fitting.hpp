// Inverse-problem harness: quantised cost function, exhaustive free and
// constrained grid searches over candidate networks and trait assignments,
// and K-fold cross-validation.

#ifndef OPINION_FITTING_HPP
#define OPINION_FITTING_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "opinion/signed_digraph.hpp"
#include "opinion/types.hpp"

namespace opinion {

/// Admissible reported-opinion levels inside the cost function. Paper9 is
/// the nine-midpoint set as printed; Midpoints10 adds the missing first
/// midpoint and exists for sensitivity checks.
enum class QuantScheme { Paper9, Midpoints10 };

inline constexpr std::array<double, 9> kQuantLevels9 = {-0.7, -0.5, -0.3, -0.1, 0.1,
                                                        0.3,  0.5,  0.7,  0.9};
inline constexpr std::array<double, 10> kQuantLevels10 = {-0.9, -0.7, -0.5, -0.3, -0.1,
                                                          0.1,  0.3,  0.5,  0.7,  0.9};

/// Nearest admissible level; exact floating-point ties go to the smaller one.
double quantize_value(double v, QuantScheme scheme = QuantScheme::Paper9);

OpinionVector quantize(const OpinionVector& x, QuantScheme scheme = QuantScheme::Paper9);

/// Quantise both vectors, sort each in descending order, sum absolute
/// componentwise differences.
double cost(const OpinionVector& real, const OpinionVector& predicted,
            QuantScheme scheme = QuantScheme::Paper9);

/// Costs below this are reported as accepted; a reporting constant only.
inline constexpr double kAcceptanceThreshold = 7.0;

/// One survey statement: initial and final population opinions.
struct Question {
    std::string label;
    OpinionVector initial;
    OpinionVector final_;
};

struct QuestionDataset {
    std::vector<Question> questions;

    std::size_t population_size() const;
    void validate() const;  // all vectors share one length, entries in range
};

/// The finite search space of the grid search.
struct CandidateSets {
    std::vector<SignedDigraph> networks;
    std::vector<TraitAssignment> assignments;
};

/// Per-agent traits drawn uniformly on the simplex, optionally closed under
/// cyclic permutation of the three trait coordinates (appends the two
/// shifted copies of each base assignment).
std::vector<TraitAssignment> random_assignment_set(std::size_t n, std::size_t base_count,
                                                   std::uint64_t seed,
                                                   bool cyclic_closure = false);

enum class Model { CB, FJ, FG, Null };

Model model_from_name(const std::string& name);
const char* model_name(Model m);

struct FitOptions {
    Model model = Model::CB;
    std::size_t steps = 50;  // prediction horizon in update steps
    EvolutionParams params{};
    QuantScheme quant = QuantScheme::Paper9;
    unsigned workers = 1;
};

/// Outcome of a grid search. chosen_assignments holds one index per
/// question (free mode) or a single shared index (constrained mode);
/// models that ignore assignments report index 0.
struct FitResult {
    std::size_t chosen_network = 0;
    std::vector<std::size_t> chosen_assignments;
    std::vector<double> per_question_cost;
    double total_cost = 0.0;
    std::size_t accepted_count = 0;  // questions with cost < threshold
};

/// Exhaustive search minimising the summed per-question minima; the trait
/// assignment may differ per question. Ties break toward the lowest
/// (network, assignment) index, independent of worker count.
FitResult fit_free(const QuestionDataset& data, const CandidateSets& candidates,
                   const FitOptions& options);

/// As fit_free, but one assignment is shared by every question.
FitResult fit_constrained(const QuestionDataset& data, const CandidateSets& candidates,
                          const FitOptions& options);

/// Per-question costs of one fixed parameter choice, no search.
std::vector<double> evaluate_costs(const QuestionDataset& data, const SignedDigraph& network,
                                   const TraitAssignment& assignment, const FitOptions& options);

struct CrossvalResult {
    std::vector<double> fold_mean_cost;
    double grand_mean = 0.0;
    std::vector<FitResult> fold_fits;  // constrained fit on each training set
};

/// Contiguous-block K-fold cross-validation: constrained fit on the
/// training questions, mean cost on the held-out block. folds must divide
/// the question count evenly.
CrossvalResult crossval(const QuestionDataset& data, const CandidateSets& candidates,
                        const FitOptions& options, std::size_t folds);

} // namespace opinion

#endif
