#include "opinion/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>

#include "opinion/baselines.hpp"
#include "opinion/dynamics.hpp"
#include "opinion/random.hpp"

namespace opinion {

double quantize_value(double v, QuantScheme scheme) {
    if (!std::isfinite(v) || v < -1.0 || v > 1.0)
        throw std::domain_error("quantize: value outside [-1, 1]");
    const double* levels = scheme == QuantScheme::Paper9 ? kQuantLevels9.data()
                                                         : kQuantLevels10.data();
    const std::size_t count = scheme == QuantScheme::Paper9 ? kQuantLevels9.size()
                                                            : kQuantLevels10.size();
    double best = levels[0];
    double best_dist = std::abs(v - levels[0]);
    for (std::size_t k = 1; k < count; ++k) {
        const double d = std::abs(v - levels[k]);
        if (d < best_dist) {  // strict: ties keep the smaller level
            best_dist = d;
            best = levels[k];
        }
    }
    return best;
}

OpinionVector quantize(const OpinionVector& x, QuantScheme scheme) {
    OpinionVector out;
    out.reserve(x.size());
    for (double v : x) out.push_back(quantize_value(v, scheme));
    return out;
}

double cost(const OpinionVector& real, const OpinionVector& predicted, QuantScheme scheme) {
    if (real.size() != predicted.size())
        throw std::invalid_argument("cost: vector lengths differ");
    OpinionVector r = quantize(real, scheme);
    OpinionVector y = quantize(predicted, scheme);
    std::sort(r.begin(), r.end(), std::greater<>());
    std::sort(y.begin(), y.end(), std::greater<>());
    double total = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) total += std::abs(r[i] - y[i]);
    return total;
}

std::size_t QuestionDataset::population_size() const {
    return questions.empty() ? 0 : questions.front().initial.size();
}

void QuestionDataset::validate() const {
    if (questions.empty()) throw std::invalid_argument("dataset has no questions");
    const std::size_t n = questions.front().initial.size();
    for (const auto& q : questions) {
        if (q.initial.size() != n || q.final_.size() != n)
            throw std::invalid_argument("dataset question '" + q.label +
                                        "' has inconsistent population size");
        validate_opinions(q.initial);
        validate_opinions(q.final_);
    }
}

std::vector<TraitAssignment> random_assignment_set(std::size_t n, std::size_t base_count,
                                                   std::uint64_t seed, bool cyclic_closure) {
    if (n == 0 || base_count == 0)
        throw std::invalid_argument("random_assignment_set: empty request");
    RandomSource rng(seed);
    std::vector<TraitAssignment> out;
    out.reserve(cyclic_closure ? base_count * 3 : base_count);
    for (std::size_t k = 0; k < base_count; ++k) {
        TraitAssignment psi;
        psi.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            // Two uniform cuts of the unit interval: uniform on the simplex.
            double u = rng.next_double();
            double v = rng.next_double();
            if (u > v) std::swap(u, v);
            psi.push_back(InnerTraits{u, v - u, 1.0 - v});
        }
        out.push_back(std::move(psi));
    }
    if (cyclic_closure) {
        const std::size_t base = out.size();
        for (int shift = 0; shift < 2; ++shift) {
            for (std::size_t k = shift * base; k < (shift + 1) * base; ++k) {
                TraitAssignment rolled;
                rolled.reserve(n);
                for (const auto& t : out[k])
                    rolled.push_back(InnerTraits{t.radicalism, t.stubbornness, t.conformism});
                out.push_back(std::move(rolled));
            }
        }
    }
    return out;
}

Model model_from_name(const std::string& name) {
    if (name == "cb") return Model::CB;
    if (name == "fj") return Model::FJ;
    if (name == "fg") return Model::FG;
    if (name == "null") return Model::Null;
    throw std::invalid_argument("unknown model '" + name + "'");
}

const char* model_name(Model m) {
    switch (m) {
        case Model::CB: return "cb";
        case Model::FJ: return "fj";
        case Model::FG: return "fg";
        case Model::Null: return "null";
    }
    return "?";
}

namespace {

bool model_uses_assignments(Model m) { return m == Model::CB || m == Model::FJ; }

// Everything needed to predict final opinions for one candidate network.
struct NetworkContext {
    const SignedDigraph* signed_graph = nullptr;
    StochasticDigraph stochastic;  // FJ / FG only
};

NetworkContext make_context(const SignedDigraph& g, Model model) {
    NetworkContext ctx;
    ctx.signed_graph = &g;
    if (model == Model::FJ || model == Model::FG) ctx.stochastic = to_row_stochastic(g);
    return ctx;
}

OpinionVector predict(const NetworkContext& ctx, Model model, const OpinionVector& x0,
                      const TraitAssignment& psi, const FitOptions& opt) {
    switch (model) {
        case Model::CB:
            return evolve(x0, *ctx.signed_graph, psi, opt.params, opt.steps);
        case Model::FJ:
            return fj_evolve(x0, ctx.stochastic, traits_to_susceptibility(psi), opt.steps);
        case Model::FG:
            return fg_evolve(x0, ctx.stochastic, opt.steps);
        case Model::Null:
            return x0;
    }
    throw std::logic_error("unreachable");
}

// Q x A matrix of costs for one network. Models that ignore assignments get
// a single column.
std::vector<std::vector<double>> cost_matrix(const NetworkContext& ctx, Model model,
                                             const QuestionDataset& data,
                                             const std::vector<TraitAssignment>& assignments,
                                             const FitOptions& opt) {
    const std::size_t acount = model_uses_assignments(model) ? assignments.size() : 1;
    std::vector<std::vector<double>> m(data.questions.size(), std::vector<double>(acount));
    static const TraitAssignment kNoTraits;
    for (std::size_t q = 0; q < data.questions.size(); ++q) {
        const auto& question = data.questions[q];
        for (std::size_t a = 0; a < acount; ++a) {
            const TraitAssignment& psi =
                model_uses_assignments(model) ? assignments[a] : kNoTraits;
            OpinionVector pred = predict(ctx, model, question.initial, psi, opt);
            m[q][a] = cost(question.final_, pred, opt.quant);
        }
    }
    return m;
}

struct NetworkEval {
    double total = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> argmin;  // per question (free) or single (constrained)
    std::vector<double> per_question;
};

// Free mode: per-question minimum over assignments, summed.
NetworkEval eval_network_free(const std::vector<std::vector<double>>& costs) {
    NetworkEval e;
    e.total = 0.0;
    for (const auto& row : costs) {
        std::size_t best = 0;
        for (std::size_t a = 1; a < row.size(); ++a)
            if (row[a] < row[best]) best = a;
        e.argmin.push_back(best);
        e.per_question.push_back(row[best]);
        e.total += row[best];
    }
    return e;
}

// Constrained mode: one assignment shared by all questions.
NetworkEval eval_network_constrained(const std::vector<std::vector<double>>& costs) {
    const std::size_t acount = costs.empty() ? 1 : costs.front().size();
    std::size_t best = 0;
    double best_total = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < acount; ++a) {
        double total = 0.0;
        for (const auto& row : costs) total += row[a];
        if (total < best_total) {
            best_total = total;
            best = a;
        }
    }
    NetworkEval e;
    e.total = best_total;
    e.argmin.push_back(best);
    for (const auto& row : costs) e.per_question.push_back(row[best]);
    return e;
}

FitResult run_fit(const QuestionDataset& data, const CandidateSets& candidates,
                  const FitOptions& opt, bool constrained) {
    data.validate();
    if (candidates.networks.empty()) throw std::invalid_argument("no candidate networks");
    if (model_uses_assignments(opt.model) && candidates.assignments.empty())
        throw std::invalid_argument("no candidate assignments");
    const std::size_t n = data.population_size();
    for (const auto& g : candidates.networks)
        if (g.size() != n)
            throw std::invalid_argument("candidate network size does not match dataset");
    for (const auto& psi : candidates.assignments)
        if (psi.size() != n)
            throw std::invalid_argument("candidate assignment size does not match dataset");

    const std::size_t ncount = candidates.networks.size();
    std::vector<NetworkEval> evals(ncount);

    auto eval_one = [&](std::size_t w) {
        NetworkContext ctx = make_context(candidates.networks[w], opt.model);
        auto costs = cost_matrix(ctx, opt.model, data, candidates.assignments, opt);
        evals[w] = constrained ? eval_network_constrained(costs) : eval_network_free(costs);
    };

    const unsigned workers = std::max(1u, opt.workers);
    if (workers == 1 || ncount <= 1) {
        for (std::size_t w = 0; w < ncount; ++w) eval_one(w);
    } else {
        // One stride per thread; results land in per-network slots, so the
        // later reduction is schedule-independent.
        const unsigned used = static_cast<unsigned>(
            std::min<std::size_t>(workers, ncount));
        std::vector<std::thread> pool;
        pool.reserve(used);
        for (unsigned t = 0; t < used; ++t) {
            pool.emplace_back([&, t]() {
                for (std::size_t w = t; w < ncount; w += used) eval_one(w);
            });
        }
        for (auto& th : pool) th.join();
    }

    // Sequential reduction; strict < keeps the lowest network index on ties.
    std::size_t best = 0;
    for (std::size_t w = 1; w < ncount; ++w)
        if (evals[w].total < evals[best].total) best = w;

    FitResult r;
    r.chosen_network = best;
    r.chosen_assignments = evals[best].argmin;
    r.per_question_cost = evals[best].per_question;
    r.total_cost = evals[best].total;
    for (double c : r.per_question_cost)
        if (c < kAcceptanceThreshold) ++r.accepted_count;
    return r;
}

} // namespace

FitResult fit_free(const QuestionDataset& data, const CandidateSets& candidates,
                   const FitOptions& options) {
    return run_fit(data, candidates, options, false);
}

FitResult fit_constrained(const QuestionDataset& data, const CandidateSets& candidates,
                          const FitOptions& options) {
    return run_fit(data, candidates, options, true);
}

std::vector<double> evaluate_costs(const QuestionDataset& data, const SignedDigraph& network,
                                   const TraitAssignment& assignment,
                                   const FitOptions& options) {
    data.validate();
    NetworkContext ctx = make_context(network, options.model);
    std::vector<double> out;
    out.reserve(data.questions.size());
    for (const auto& q : data.questions) {
        OpinionVector pred = predict(ctx, options.model, q.initial, assignment, options);
        out.push_back(cost(q.final_, pred, options.quant));
    }
    return out;
}

CrossvalResult crossval(const QuestionDataset& data, const CandidateSets& candidates,
                        const FitOptions& options, std::size_t folds) {
    data.validate();
    const std::size_t q = data.questions.size();
    if (folds == 0 || q % folds != 0)
        throw std::invalid_argument("fold count must divide the number of questions evenly");
    const std::size_t block = q / folds;

    CrossvalResult result;
    for (std::size_t f = 0; f < folds; ++f) {
        const std::size_t lo = f * block, hi = lo + block;
        QuestionDataset train, test;
        for (std::size_t i = 0; i < q; ++i)
            (i >= lo && i < hi ? test : train).questions.push_back(data.questions[i]);

        FitResult fit = fit_constrained(train, candidates, options);
        static const TraitAssignment kEmpty;
        const TraitAssignment& psi =
            candidates.assignments.empty() ? kEmpty
                                           : candidates.assignments[fit.chosen_assignments[0]];
        std::vector<double> test_costs = evaluate_costs(
            test, candidates.networks[fit.chosen_network], psi, options);

        double mean = 0.0;
        for (double c : test_costs) mean += c;
        mean /= static_cast<double>(test_costs.size());
        result.fold_mean_cost.push_back(mean);
        result.fold_fits.push_back(std::move(fit));
    }

    for (double m : result.fold_mean_cost) result.grand_mean += m;
    result.grand_mean /= static_cast<double>(folds);
    return result;
}

} // namespace opinion
