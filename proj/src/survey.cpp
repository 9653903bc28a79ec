#include "opinion/survey.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "opinion/random.hpp"

namespace opinion {

double rescale_likert(int answer) {
    if (answer < 1 || answer > 10)
        throw std::domain_error("Likert answer must be in 1..10, got " +
                                std::to_string(answer));
    return (2.0 * answer - 11.0) / 10.0;
}

std::size_t SurveyTable::question_index(const std::string& id) const {
    auto it = std::find(question_ids.begin(), question_ids.end(), id);
    if (it == question_ids.end())
        throw SchemaError("survey has no question column '" + id + "'");
    return static_cast<std::size_t>(it - question_ids.begin());
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.push_back("");
    return cells;
}

std::string strip(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

} // namespace

SurveyTable load_survey_csv(const std::filesystem::path& path, const std::string& wave) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open survey file: " + path.string());

    SurveyTable table;
    table.wave = wave;

    std::string line;
    if (!std::getline(in, line)) throw SchemaError("survey file is empty: " + path.string());
    for (const auto& cell : split_csv_line(line)) {
        std::string id = strip(cell);
        if (id.empty()) throw SchemaError("survey header contains an empty question id");
        table.question_ids.push_back(id);
    }

    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (strip(line).empty()) continue;
        auto cells = split_csv_line(line);
        if (cells.size() != table.question_ids.size())
            throw SchemaError("survey row " + std::to_string(line_no) + " has " +
                              std::to_string(cells.size()) + " cells, expected " +
                              std::to_string(table.question_ids.size()));
        std::vector<int> row;
        row.reserve(cells.size());
        for (const auto& cell : cells) {
            std::string v = strip(cell);
            if (v.empty() || v == "NA") {
                row.push_back(SurveyTable::kMissing);
                continue;
            }
            int answer = 0;
            try {
                std::size_t pos = 0;
                answer = std::stoi(v, &pos);
                if (pos != v.size()) throw std::invalid_argument(v);
            } catch (const std::exception&) {
                throw SchemaError("survey row " + std::to_string(line_no) +
                                  ": unparsable answer '" + v + "'");
            }
            if (answer < 1 || answer > 10)
                throw SchemaError("survey row " + std::to_string(line_no) + ": answer " +
                                  std::to_string(answer) + " outside 1..10");
            row.push_back(answer);
        }
        table.answers.push_back(std::move(row));
    }
    return table;
}

std::vector<double> question_opinions(const SurveyTable& table, const std::string& question_id) {
    const std::size_t col = table.question_index(question_id);
    std::vector<double> out;
    out.reserve(table.answers.size());
    for (const auto& row : table.answers)
        if (row[col] != SurveyTable::kMissing) out.push_back(rescale_likert(row[col]));
    return out;
}

OpinionVector resample_population(std::vector<double> values, std::size_t n) {
    if (values.empty()) throw std::invalid_argument("resample_population: empty input");
    if (n == 0) throw std::invalid_argument("resample_population: target size must be >= 1");
    std::sort(values.begin(), values.end());
    const std::size_t m = values.size();
    OpinionVector out;
    out.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        const double q = (static_cast<double>(i) - 0.5) / static_cast<double>(n);
        // Nearest rank: smallest index r with r >= q * m.
        std::size_t rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(m)));
        if (rank < 1) rank = 1;
        if (rank > m) rank = m;
        out.push_back(values[rank - 1]);
    }
    return out;
}

OpinionVector resample_population_random(const std::vector<double>& values, std::size_t n,
                                         std::uint64_t seed) {
    if (values.empty()) throw std::invalid_argument("resample_population: empty input");
    if (n == 0) throw std::invalid_argument("resample_population: target size must be >= 1");
    RandomSource rng(seed);
    OpinionVector out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(values[rng.index(values.size())]);
    return out;
}

QuestionDataset dataset_from_waves(const SurveyTable& initial_wave,
                                   const SurveyTable& final_wave,
                                   const std::vector<std::string>& question_ids,
                                   std::size_t n) {
    QuestionDataset data;
    for (const auto& id : question_ids) {
        auto before = question_opinions(initial_wave, id);
        auto after = question_opinions(final_wave, id);
        if (before.empty() || after.empty())
            throw SchemaError("question '" + id + "' has no usable answers in one wave");
        Question q;
        q.label = id;
        q.initial = resample_population(std::move(before), n);
        q.final_ = resample_population(std::move(after), n);
        data.questions.push_back(std::move(q));
    }
    data.validate();
    return data;
}

} // namespace opinion
