#include "opinion/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace opinion {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);  // binary: LF endings everywhere
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path.string());
    return in;
}

double parse_double(const std::string& s, const std::string& what) {
    double v = 0.0;
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr != end)
        throw SchemaError("unparsable number '" + s + "' in " + what);
    return v;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, sep)) cells.push_back(cell);
    return cells;
}

} // namespace

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) throw std::runtime_error("format_double failed");
    return std::string(buf, ptr);
}

void write_graph_edge_list(const std::filesystem::path& path, const SignedDigraph& g) {
    auto out = open_out(path);
    out << "n " << g.size() << "\n";
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            if (int w = g.weight(i, j); w != 0) out << i << " " << j << " " << w << "\n";
}

SignedDigraph read_graph_edge_list(const std::filesystem::path& path) {
    auto in = open_in(path);
    std::string tag;
    std::size_t n = 0;
    if (!(in >> tag >> n) || tag != "n" || n == 0)
        throw SchemaError("graph file must start with 'n <size>': " + path.string());
    SignedDigraph g(n);
    std::size_t i = 0, j = 0;
    int w = 0;
    while (in >> i >> j >> w) {
        if (i >= n || j >= n) throw SchemaError("graph edge index out of range");
        if (i == j) {
            if (w != 1) throw SchemaError("self-loop weight must be +1");
            continue;
        }
        g.set_weight(i, j, w);
    }
    if (!in.eof()) throw SchemaError("trailing garbage in graph file: " + path.string());
    return g;
}

std::string graph_to_json(const SignedDigraph& g) {
    nlohmann::json j;
    j["n"] = g.size();
    auto& rows = j["weights"] = nlohmann::json::array();
    for (std::size_t i = 0; i < g.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t k = 0; k < g.size(); ++k) row.push_back(g.weight(i, k));
        rows.push_back(std::move(row));
    }
    return j.dump(2) + "\n";
}

SignedDigraph graph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("graph JSON parse error: ") + e.what());
    }
    if (!j.contains("n") || !j.contains("weights"))
        throw SchemaError("graph JSON needs 'n' and 'weights'");
    const std::size_t n = j["n"].get<std::size_t>();
    SignedDigraph g(n);
    const auto& rows = j["weights"];
    if (rows.size() != n) throw SchemaError("graph JSON row count mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw SchemaError("graph JSON column count mismatch");
        for (std::size_t k = 0; k < n; ++k) {
            int w = rows[i][k].get<int>();
            if (i == k) {
                if (w != 1) throw SchemaError("graph JSON diagonal must be +1");
            } else if (w != 0) {
                g.set_weight(i, k, w);
            }
        }
    }
    return g;
}

void write_opinions(const std::filesystem::path& path, const OpinionVector& x) {
    auto out = open_out(path);
    for (double v : x) out << format_double(v) << "\n";
}

OpinionVector read_opinions(const std::filesystem::path& path) {
    auto in = open_in(path);
    OpinionVector x;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        x.push_back(parse_double(line, path.string()));
    }
    if (x.empty()) throw SchemaError("no opinions in file: " + path.string());
    return x;
}

void write_trajectory_csv(const std::filesystem::path& path,
                          const std::vector<OpinionVector>& traj) {
    auto out = open_out(path);
    const std::size_t n = traj.empty() ? 0 : traj.front().size();
    out << "step";
    for (std::size_t i = 0; i < n; ++i) out << ",x" << i;
    out << "\n";
    for (std::size_t k = 0; k < traj.size(); ++k) {
        out << k;
        for (double v : traj[k]) out << "," << format_double(v);
        out << "\n";
    }
}

std::vector<OpinionVector> read_trajectory_csv(const std::filesystem::path& path) {
    auto in = open_in(path);
    std::string line;
    if (!std::getline(in, line)) throw SchemaError("empty trajectory file: " + path.string());
    std::vector<OpinionVector> traj;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto cells = split(line, ',');
        if (cells.size() < 2) throw SchemaError("short trajectory row in " + path.string());
        OpinionVector x;
        x.reserve(cells.size() - 1);
        for (std::size_t c = 1; c < cells.size(); ++c)
            x.push_back(parse_double(cells[c], path.string()));
        traj.push_back(std::move(x));
    }
    return traj;
}

void write_agreement_csv(const std::filesystem::path& path,
                         const std::vector<GeneralAgreement>& curve) {
    auto out = open_out(path);
    out << "step,theta_minus,theta_plus\n";
    for (std::size_t k = 0; k < curve.size(); ++k)
        out << k << "," << format_double(curve[k].theta_minus) << ","
            << format_double(curve[k].theta_plus) << "\n";
}

void write_traits_csv(const std::filesystem::path& path, const TraitAssignment& psi) {
    auto out = open_out(path);
    out << "conformism,radicalism,stubbornness\n";
    for (const auto& t : psi)
        out << format_double(t.conformism) << "," << format_double(t.radicalism) << ","
            << format_double(t.stubbornness) << "\n";
}

TraitAssignment read_traits_csv(const std::filesystem::path& path) {
    auto in = open_in(path);
    std::string line;
    if (!std::getline(in, line)) throw SchemaError("empty traits file: " + path.string());
    TraitAssignment psi;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto cells = split(line, ',');
        if (cells.size() != 3) throw SchemaError("traits row needs 3 cells: " + path.string());
        psi.push_back(InnerTraits{parse_double(cells[0], path.string()),
                                  parse_double(cells[1], path.string()),
                                  parse_double(cells[2], path.string())});
    }
    if (psi.empty()) throw SchemaError("no traits in file: " + path.string());
    validate_traits(psi);
    return psi;
}

void write_transition_table_csv(const std::filesystem::path& path, const TransitionTable& t) {
    auto out = open_out(path);
    out << "initial\\final";
    for (const char* name : kCategoryNames) out << "," << name;
    out << "\n";
    for (std::size_t a = 0; a < 5; ++a) {
        out << kCategoryNames[a];
        for (std::size_t b = 0; b < 5; ++b) out << "," << t.counts[a][b];
        out << "\n";
    }
}

std::string metrics_to_json(const NetworkMetrics& m) {
    nlohmann::json j;
    j["average_path_length"] = m.average_path_length;
    j["clustering_coefficient"] = m.clustering_coefficient;
    j["positive_edges"] = m.positive_edges;
    j["negative_edges"] = m.negative_edges;
    j["diameter"] = m.diameter;
    j["balance_index"] = m.balance_index;
    return j.dump(2) + "\n";
}

std::string fit_result_to_json(const FitResult& r) {
    nlohmann::json j;
    j["chosen_network"] = r.chosen_network;
    j["chosen_assignments"] = r.chosen_assignments;
    j["per_question_cost"] = r.per_question_cost;
    j["total_cost"] = r.total_cost;
    j["accepted_count"] = r.accepted_count;
    return j.dump(2) + "\n";
}

FitResult fit_result_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("fit result JSON parse error: ") + e.what());
    }
    FitResult r;
    r.chosen_network = j.at("chosen_network").get<std::size_t>();
    r.chosen_assignments = j.at("chosen_assignments").get<std::vector<std::size_t>>();
    r.per_question_cost = j.at("per_question_cost").get<std::vector<double>>();
    r.total_cost = j.at("total_cost").get<double>();
    r.accepted_count = j.at("accepted_count").get<std::size_t>();
    return r;
}

namespace {

void check_matrix_shape(const std::vector<std::string>& question_labels,
                        const std::vector<std::string>& country_labels,
                        const std::vector<std::vector<double>>& costs) {
    if (costs.size() != question_labels.size())
        throw std::invalid_argument("cost matrix row count does not match question labels");
    for (const auto& row : costs)
        if (row.size() != country_labels.size())
            throw std::invalid_argument("cost matrix column count does not match countries");
}

} // namespace

void write_cost_matrix_csv(const std::filesystem::path& path,
                           const std::vector<std::string>& question_labels,
                           const std::vector<std::string>& country_labels,
                           const std::vector<std::vector<double>>& costs) {
    check_matrix_shape(question_labels, country_labels, costs);
    auto out = open_out(path);
    out << "question";
    for (const auto& c : country_labels) out << "," << c;
    out << "\n";
    for (std::size_t q = 0; q < costs.size(); ++q) {
        out << question_labels[q];
        for (double v : costs[q]) out << "," << format_double(v);
        out << "\n";
    }
}

void write_acceptance_matrix_csv(const std::filesystem::path& path,
                                 const std::vector<std::string>& question_labels,
                                 const std::vector<std::string>& country_labels,
                                 const std::vector<std::vector<double>>& costs,
                                 double threshold) {
    check_matrix_shape(question_labels, country_labels, costs);
    auto out = open_out(path);
    out << "question";
    for (const auto& c : country_labels) out << "," << c;
    out << "\n";
    for (std::size_t q = 0; q < costs.size(); ++q) {
        out << question_labels[q];
        for (double v : costs[q]) out << "," << (v < threshold ? "green" : "red");
        out << "\n";
    }
}

void write_crossval_csv(const std::filesystem::path& path, const CrossvalResult& r) {
    auto out = open_out(path);
    out << "fold,mean_test_cost\n";
    for (std::size_t f = 0; f < r.fold_mean_cost.size(); ++f)
        out << "CV" << (f + 1) << "," << format_double(r.fold_mean_cost[f]) << "\n";
    out << "Mean," << format_double(r.grand_mean) << "\n";
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    auto out = open_out(path);
    out << content;
}

} // namespace opinion
