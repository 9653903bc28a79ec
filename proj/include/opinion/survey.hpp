// Likert-scale survey ingestion: CSV loading, rescaling to opinion space,
// and deterministic resampling of respondent pools to the simulation
// population size.

#ifndef OPINION_SURVEY_HPP
#define OPINION_SURVEY_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "opinion/fitting.hpp"
#include "opinion/types.hpp"

namespace opinion {

/// Raw survey answers: respondents x questions, integers in 1..10 with
/// kMissing marking skipped answers.
struct SurveyTable {
    static constexpr int kMissing = -1;

    std::string wave;
    std::vector<std::string> question_ids;
    std::vector<std::vector<int>> answers;  // one row per respondent

    std::size_t question_index(const std::string& id) const;
};

/// Likert answer 1..10 to the midpoint of its opinion bin: (2a - 11) / 10.
double rescale_likert(int answer);

/// Reads a survey CSV: header row of question IDs, one respondent per row,
/// missing answers as "NA" or an empty cell.
SurveyTable load_survey_csv(const std::filesystem::path& path, const std::string& wave = "");

/// Rescaled opinions for one question, missing answers dropped.
std::vector<double> question_opinions(const SurveyTable& table, const std::string& question_id);

/// Deterministic nearest-rank quantile resampling: sorts the values and
/// picks the quantile (i - 0.5) / n for i = 1..n.
OpinionVector resample_population(std::vector<double> values, std::size_t n);

/// Seeded alternative: n independent uniform draws with replacement.
OpinionVector resample_population_random(const std::vector<double>& values, std::size_t n,
                                         std::uint64_t seed);

/// Builds a fitting dataset from two survey waves sharing question columns,
/// resampling both waves of each question to n agents.
QuestionDataset dataset_from_waves(const SurveyTable& initial_wave,
                                   const SurveyTable& final_wave,
                                   const std::vector<std::string>& question_ids, std::size_t n);

} // namespace opinion

#endif
