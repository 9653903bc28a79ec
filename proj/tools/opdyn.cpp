// opdyn: command-line front end for the opinion-dynamics engine.
//
//   opdyn generate   write a signed digraph and its metrics
//   opdyn simulate   evolve opinions under cb / fj / fg / null
//   opdyn fit        grid-search networks and trait assignments against
//                    two survey waves (free / constrained / crossval)
//
// Every command is a pure function of its flags, input files, and seeds.
// Exit codes: 0 success, 2 usage error, 3 data/schema error, 4 numeric error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "opinion/analysis.hpp"
#include "opinion/baselines.hpp"
#include "opinion/dynamics.hpp"
#include "opinion/fitting.hpp"
#include "opinion/generators.hpp"
#include "opinion/io.hpp"
#include "opinion/metrics.hpp"
#include "opinion/random.hpp"
#include "opinion/survey.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitNumeric = 4;

fs::path output_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("OPDYN_OUT_DIR"); env && *env) return env;
    return ".";
}

// Optional JSON config; values act as defaults, explicit flags win.
json load_config(const std::string& path) {
    if (path.empty()) return json::object();
    std::ifstream in(path);
    if (!in) throw opinion::SchemaError("cannot open config file: " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw opinion::SchemaError("config parse error: " + std::string(e.what()));
    }
}

template <typename T>
void config_default(const CLI::App& app, const json& cfg, const std::string& key, T& target) {
    if (!cfg.contains(key)) return;
    const CLI::Option* opt = app.get_option("--" + key);
    if (opt->count() > 0) return;  // flag given on the command line
    try {
        target = cfg.at(key).get<T>();
    } catch (const json::exception& e) {
        throw opinion::SchemaError("config key '" + key + "': " + e.what());
    }
}

// ---------------------------------------------------------------------------
// generate

struct GenerateArgs {
    std::string topology;
    std::size_t n = 100;
    std::size_t k = 4;
    double p_rewire = 0.25;
    double p_pos = 0.77;
    std::uint64_t seed = 1;
    std::string out;
    std::string name = "graph";
    std::string config;
};

int run_generate(const GenerateArgs& a) {
    opinion::SignedDigraph g = [&] {
        if (a.topology == "complete") return opinion::gen_complete(a.n, a.p_pos, a.seed);
        if (a.topology == "ring") return opinion::gen_ring(a.n, a.p_pos, a.seed);
        if (a.topology == "lattice")
            return opinion::gen_lattice(a.n, a.k, a.p_pos, a.seed);
        if (a.topology == "small-world")
            return opinion::gen_small_world(a.n, a.k, a.p_rewire, a.p_pos, a.seed);
        throw std::invalid_argument("unknown topology '" + a.topology + "'");
    }();

    const fs::path dir = output_dir(a.out);
    const fs::path edges = dir / (a.name + ".edges");
    const fs::path metrics_path = dir / (a.name + ".metrics.json");
    opinion::write_graph_edge_list(edges, g);
    opinion::write_text_file(metrics_path, opinion::metrics_to_json(opinion::metrics(g)));
    std::cout << "wrote " << edges.string() << " and " << metrics_path.string() << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// simulate

struct SimulateArgs {
    std::string graph;
    std::string initial;          // opinions file
    std::optional<std::uint64_t> init_seed;
    std::string traits = "nominal";  // preset name or traits CSV path
    std::optional<std::uint64_t> traits_seed;
    std::string model = "cb";
    std::size_t steps = 50;
    double lambda = 0.4, xi = 2.0, mu = 5.0;
    std::optional<double> susceptibility;  // fj only: constant a for all agents
    std::string out;
    std::string name = "sim";
    std::string config;
};

opinion::TraitAssignment resolve_traits(const SimulateArgs& a, std::size_t n) {
    if (a.traits_seed)
        return opinion::random_assignment_set(n, 1, *a.traits_seed)[0];
    if (a.traits == "stubborn")
        return opinion::TraitAssignment(n, opinion::InnerTraits{0.0, 0.0, 1.0});
    if (a.traits == "conformist")
        return opinion::TraitAssignment(n, opinion::InnerTraits{1.0, 0.0, 0.0});
    if (a.traits == "radical")
        return opinion::TraitAssignment(n, opinion::InnerTraits{0.0, 1.0, 0.0});
    if (a.traits == "nominal")
        return opinion::TraitAssignment(n, opinion::InnerTraits{0.6, 0.3, 0.1});
    return opinion::read_traits_csv(a.traits);  // anything else is a file path
}

int run_simulate(const SimulateArgs& a) {
    if (a.graph.empty()) throw std::invalid_argument("simulate needs --graph");
    auto g = opinion::read_graph_edge_list(a.graph);
    const std::size_t n = g.size();

    opinion::OpinionVector x0;
    if (!a.initial.empty()) {
        x0 = opinion::read_opinions(a.initial);
        opinion::validate_opinions(x0);
    } else if (a.init_seed) {
        opinion::RandomSource rng(*a.init_seed);
        for (std::size_t i = 0; i < n; ++i) x0.push_back(rng.opinion());
    } else {
        throw std::invalid_argument("simulate needs --initial FILE or --init-seed N");
    }
    if (x0.size() != n)
        throw opinion::SchemaError("initial opinions length does not match graph size");

    auto psi = resolve_traits(a, n);
    if (psi.size() != n)
        throw opinion::SchemaError("trait assignment length does not match graph size");
    opinion::validate_traits(psi);

    opinion::EvolutionParams params{a.lambda, a.xi, a.mu};
    const opinion::Model model = opinion::model_from_name(a.model);

    std::vector<opinion::OpinionVector> traj;
    switch (model) {
        case opinion::Model::CB:
            traj = opinion::evolve_trajectory(x0, g, psi, params, a.steps);
            break;
        case opinion::Model::FJ: {
            auto stoch = opinion::to_row_stochastic(g);
            opinion::SusceptibilityVector susceptibility =
                a.susceptibility ? opinion::SusceptibilityVector(n, *a.susceptibility)
                                 : opinion::traits_to_susceptibility(psi);
            traj = opinion::fj_trajectory(x0, stoch, susceptibility, a.steps);
            break;
        }
        case opinion::Model::FG:
            traj = opinion::fg_trajectory(x0, opinion::to_row_stochastic(g), a.steps);
            break;
        case opinion::Model::Null:
            traj.assign(a.steps + 1, x0);
            break;
    }

    const fs::path dir = output_dir(a.out);
    opinion::write_trajectory_csv(dir / (a.name + ".trajectory.csv"), traj);
    opinion::write_agreement_csv(dir / (a.name + ".agreement.csv"),
                                 opinion::agreement_trajectory(traj));

    const auto& final_state = traj.back();
    const auto agreement = opinion::general_agreement(final_state);
    json summary;
    summary["category"] = opinion::category_name(opinion::categorize(final_state));
    summary["theta_minus"] = agreement.theta_minus;
    summary["theta_plus"] = agreement.theta_plus;
    summary["histogram"] = opinion::opinion_histogram(final_state);
    opinion::write_text_file(dir / (a.name + ".final.json"), summary.dump(2) + "\n");

    std::cout << "wrote " << (dir / (a.name + ".trajectory.csv")).string() << ", "
              << (dir / (a.name + ".agreement.csv")).string() << ", "
              << (dir / (a.name + ".final.json")).string() << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// fit

struct FitArgs {
    std::string wave5, wave6;
    std::vector<std::string> questions;  // default: all shared columns
    std::size_t n = 100;
    std::string mode = "free";
    std::string model = "cb";
    std::size_t steps = 50;
    std::size_t folds = 6;
    std::size_t networks = 5;
    std::uint64_t net_seed = 1;
    std::string topology = "small-world";
    std::size_t k = 4;
    double p_rewire = 0.25;
    double p_pos = 0.77;
    std::vector<std::string> network_files;
    std::size_t assignments = 50;
    std::uint64_t assign_seed = 1;
    bool cyclic = false;
    std::string resample = "quantile";
    std::uint64_t resample_seed = 1;
    unsigned workers = 1;
    bool quant10 = false;
    std::string country = "C1";
    std::string out;
    std::string name = "fit";
    std::string config;
};

opinion::CandidateSets build_candidates(const FitArgs& a, std::size_t n) {
    opinion::CandidateSets c;
    if (!a.network_files.empty()) {
        for (const auto& f : a.network_files)
            c.networks.push_back(opinion::read_graph_edge_list(f));
    } else {
        for (std::size_t k = 0; k < a.networks; ++k) {
            if (a.topology == "complete")
                c.networks.push_back(opinion::gen_complete(n, a.p_pos, a.net_seed + k));
            else if (a.topology == "ring")
                c.networks.push_back(opinion::gen_ring(n, a.p_pos, a.net_seed + k));
            else if (a.topology == "lattice")
                c.networks.push_back(opinion::gen_lattice(n, a.k, a.p_pos, a.net_seed + k));
            else if (a.topology == "small-world")
                c.networks.push_back(
                    opinion::gen_small_world(n, a.k, a.p_rewire, a.p_pos, a.net_seed + k));
            else
                throw std::invalid_argument("unknown topology '" + a.topology + "'");
        }
    }
    c.assignments = opinion::random_assignment_set(n, a.assignments, a.assign_seed, a.cyclic);
    return c;
}

int run_fit(const FitArgs& a) {
    if (a.wave5.empty() || a.wave6.empty())
        throw std::invalid_argument("fit needs --wave5 and --wave6 survey files");

    auto w5 = opinion::load_survey_csv(a.wave5, "wave5");
    auto w6 = opinion::load_survey_csv(a.wave6, "wave6");

    std::vector<std::string> questions = a.questions;
    if (questions.empty()) {
        for (const auto& id : w5.question_ids)
            for (const auto& other : w6.question_ids)
                if (id == other) {
                    questions.push_back(id);
                    break;
                }
        if (questions.empty())
            throw opinion::SchemaError("waves share no question columns");
    }

    opinion::QuestionDataset data;
    if (a.resample == "quantile") {
        data = opinion::dataset_from_waves(w5, w6, questions, a.n);
    } else if (a.resample == "random") {
        std::uint64_t draw = a.resample_seed;
        for (const auto& id : questions) {
            opinion::Question q;
            q.label = id;
            q.initial = opinion::resample_population_random(
                opinion::question_opinions(w5, id), a.n, draw++);
            q.final_ = opinion::resample_population_random(
                opinion::question_opinions(w6, id), a.n, draw++);
            data.questions.push_back(std::move(q));
        }
        data.validate();
    } else {
        throw std::invalid_argument("unknown resample mode '" + a.resample + "'");
    }
    auto candidates = build_candidates(a, a.n);

    opinion::FitOptions opt;
    opt.model = opinion::model_from_name(a.model);
    opt.steps = a.steps;
    opt.workers = a.workers;
    opt.quant = a.quant10 ? opinion::QuantScheme::Midpoints10 : opinion::QuantScheme::Paper9;

    const fs::path dir = output_dir(a.out);
    std::vector<std::string> labels;
    for (const auto& q : data.questions) labels.push_back(q.label);

    if (a.mode == "crossval") {
        auto r = opinion::crossval(data, candidates, opt, a.folds);
        opinion::write_crossval_csv(dir / (a.name + ".crossval.csv"), r);
        json j;
        j["fold_mean_cost"] = r.fold_mean_cost;
        j["grand_mean"] = r.grand_mean;
        opinion::write_text_file(dir / (a.name + ".crossval.json"), j.dump(2) + "\n");
        std::cout << "wrote " << (dir / (a.name + ".crossval.csv")).string() << " and "
                  << (dir / (a.name + ".crossval.json")).string() << "\n";
        return 0;
    }

    opinion::FitResult r;
    if (a.mode == "free") r = opinion::fit_free(data, candidates, opt);
    else if (a.mode == "constrained") r = opinion::fit_constrained(data, candidates, opt);
    else throw std::invalid_argument("unknown mode '" + a.mode + "'");

    opinion::write_text_file(dir / (a.name + ".json"), opinion::fit_result_to_json(r));
    std::vector<std::vector<double>> matrix;
    for (double c : r.per_question_cost) matrix.push_back({c});
    opinion::write_cost_matrix_csv(dir / (a.name + ".costs.csv"), labels, {a.country},
                                   matrix);
    opinion::write_acceptance_matrix_csv(dir / (a.name + ".accepted.csv"), labels,
                                         {a.country}, matrix);
    std::cout << "wrote " << (dir / (a.name + ".json")).string() << ", "
              << (dir / (a.name + ".costs.csv")).string() << ", "
              << (dir / (a.name + ".accepted.csv")).string() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deterministic opinion-dynamics engine: signed digraphs, the "
                 "classification-based update law, baseline models, and an "
                 "inverse-problem fitting harness"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "Generate a signed digraph and report "
                                                    "its metrics");
    generate->add_option("--topology", gen.topology,
                         "complete | ring | lattice | small-world");
    generate->add_option("--n", gen.n, "number of agents");
    generate->add_option("--k", gen.k, "in-degree for lattice / small-world (even)");
    generate->add_option("--p-rewire", gen.p_rewire, "small-world rewiring probability");
    generate->add_option("--p-pos", gen.p_pos, "probability of a positive edge");
    generate->add_option("--seed", gen.seed, "generator seed");
    generate->add_option("--out", gen.out, "output directory (default: $OPDYN_OUT_DIR or .)");
    generate->add_option("--name", gen.name, "output file prefix");
    generate->add_option("--config", gen.config, "JSON config with flag defaults");

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Evolve opinions over a digraph");
    simulate->add_option("--graph", sim.graph, "edge-list graph file");
    simulate->add_option("--initial", sim.initial, "initial opinions file (one per line)");
    simulate->add_option("--init-seed", sim.init_seed,
                         "draw initial opinions uniformly from this seed");
    simulate->add_option("--traits", sim.traits,
                         "stubborn | conformist | radical | nominal | traits CSV path");
    simulate->add_option("--traits-seed", sim.traits_seed,
                         "draw a random trait assignment from this seed");
    simulate->add_option("--model", sim.model, "cb | fj | fg | null");
    simulate->add_option("--steps", sim.steps, "number of update steps");
    simulate->add_option("--lambda", sim.lambda, "overall change magnitude");
    simulate->add_option("--xi", sim.xi, "distant-opinion weight");
    simulate->add_option("--mu", sim.mu, "radical self-reinforcement weight");
    simulate->add_option("--susceptibility", sim.susceptibility,
                         "fj only: constant susceptibility overriding the trait mapping");
    simulate->add_option("--out", sim.out, "output directory");
    simulate->add_option("--name", sim.name, "output file prefix");
    simulate->add_option("--config", sim.config, "JSON config with flag defaults");

    FitArgs fit;
    auto* fitcmd = app.add_subcommand("fit", "Fit networks and trait assignments to two "
                                             "survey waves");
    fitcmd->add_option("--wave5", fit.wave5, "initial-opinion survey CSV");
    fitcmd->add_option("--wave6", fit.wave6, "final-opinion survey CSV");
    fitcmd->add_option("--questions", fit.questions,
                       "question columns (default: all shared)");
    fitcmd->add_option("--n", fit.n, "simulated population size");
    fitcmd->add_option("--mode", fit.mode, "free | constrained | crossval");
    fitcmd->add_option("--model", fit.model, "cb | fj | fg | null");
    fitcmd->add_option("--steps", fit.steps, "prediction horizon in steps");
    fitcmd->add_option("--folds", fit.folds, "crossval folds (must divide questions)");
    fitcmd->add_option("--networks", fit.networks, "number of candidate networks");
    fitcmd->add_option("--net-seed", fit.net_seed, "first network seed");
    fitcmd->add_option("--topology", fit.topology, "candidate network topology");
    fitcmd->add_option("--k", fit.k, "candidate network in-degree");
    fitcmd->add_option("--p-rewire", fit.p_rewire, "candidate rewiring probability");
    fitcmd->add_option("--p-pos", fit.p_pos, "candidate positive-edge probability");
    fitcmd->add_option("--network-files", fit.network_files,
                       "explicit edge-list files instead of generated candidates");
    fitcmd->add_option("--assignments", fit.assignments, "number of trait assignments");
    fitcmd->add_option("--assign-seed", fit.assign_seed, "assignment seed");
    fitcmd->add_flag("--cyclic", fit.cyclic,
                     "close the assignment set under cyclic trait permutation");
    fitcmd->add_option("--resample", fit.resample,
                       "respondents -> agents: quantile (deterministic) | random");
    fitcmd->add_option("--resample-seed", fit.resample_seed, "seed for --resample random");
    fitcmd->add_option("--workers", fit.workers, "parallel candidate evaluators");
    fitcmd->add_flag("--quant10", fit.quant10,
                     "use the ten-midpoint quantisation set instead of the nine-level one");
    fitcmd->add_option("--country", fit.country, "column label for the cost matrix");
    fitcmd->add_option("--out", fit.out, "output directory");
    fitcmd->add_option("--name", fit.name, "output file prefix");
    fitcmd->add_option("--config", fit.config, "JSON config with flag defaults");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // --help exits 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (generate->parsed()) {
            const json cfg = load_config(gen.config);
            config_default(*generate, cfg, "topology", gen.topology);
            config_default(*generate, cfg, "n", gen.n);
            config_default(*generate, cfg, "k", gen.k);
            config_default(*generate, cfg, "p-rewire", gen.p_rewire);
            config_default(*generate, cfg, "p-pos", gen.p_pos);
            config_default(*generate, cfg, "seed", gen.seed);
            config_default(*generate, cfg, "out", gen.out);
            config_default(*generate, cfg, "name", gen.name);
            if (gen.topology.empty())
                throw std::invalid_argument("generate needs --topology");
            return run_generate(gen);
        }
        if (simulate->parsed()) {
            const json cfg = load_config(sim.config);
            config_default(*simulate, cfg, "graph", sim.graph);
            config_default(*simulate, cfg, "initial", sim.initial);
            config_default(*simulate, cfg, "traits", sim.traits);
            config_default(*simulate, cfg, "model", sim.model);
            config_default(*simulate, cfg, "steps", sim.steps);
            config_default(*simulate, cfg, "lambda", sim.lambda);
            config_default(*simulate, cfg, "xi", sim.xi);
            config_default(*simulate, cfg, "mu", sim.mu);
            config_default(*simulate, cfg, "out", sim.out);
            config_default(*simulate, cfg, "name", sim.name);
            if (cfg.contains("init-seed") &&
                simulate->get_option("--init-seed")->count() == 0)
                sim.init_seed = cfg.at("init-seed").get<std::uint64_t>();
            return run_simulate(sim);
        }
        const json cfg = load_config(fit.config);
        config_default(*fitcmd, cfg, "wave5", fit.wave5);
        config_default(*fitcmd, cfg, "wave6", fit.wave6);
        config_default(*fitcmd, cfg, "questions", fit.questions);
        config_default(*fitcmd, cfg, "n", fit.n);
        config_default(*fitcmd, cfg, "mode", fit.mode);
        config_default(*fitcmd, cfg, "model", fit.model);
        config_default(*fitcmd, cfg, "steps", fit.steps);
        config_default(*fitcmd, cfg, "folds", fit.folds);
        config_default(*fitcmd, cfg, "networks", fit.networks);
        config_default(*fitcmd, cfg, "net-seed", fit.net_seed);
        config_default(*fitcmd, cfg, "topology", fit.topology);
        config_default(*fitcmd, cfg, "k", fit.k);
        config_default(*fitcmd, cfg, "assignments", fit.assignments);
        config_default(*fitcmd, cfg, "assign-seed", fit.assign_seed);
        config_default(*fitcmd, cfg, "workers", fit.workers);
        config_default(*fitcmd, cfg, "country", fit.country);
        config_default(*fitcmd, cfg, "out", fit.out);
        config_default(*fitcmd, cfg, "name", fit.name);
        return run_fit(fit);
    } catch (const opinion::SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
}
