// Core domain types shared by all modules: opinion vectors, per-agent
// inner traits, and the global evolution parameters.

#ifndef OPINION_TYPES_HPP
#define OPINION_TYPES_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace opinion {

/// One opinion level per agent, each in [-1, 1].
using OpinionVector = std::vector<double>;

/// Raised when an input file or serialized artifact does not match the
/// documented schema.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a generator cannot satisfy its contract (e.g. strong
/// connectivity unreachable within the attempt budget).
struct GenerationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Per-agent behavioural blend. Components are nonnegative and sum to 1.
struct InnerTraits {
    double conformism = 0.0;
    double radicalism = 0.0;
    double stubbornness = 1.0;

    bool on_simplex(double tol = 1e-9) const {
        if (conformism < 0.0 || radicalism < 0.0 || stubbornness < 0.0) return false;
        return std::abs(conformism + radicalism + stubbornness - 1.0) <= tol;
    }
};

/// Inner traits for every agent in the population.
using TraitAssignment = std::vector<InnerTraits>;

/// Global evolution parameters: step magnitude, distant-opinion weight,
/// and radical self-reinforcement weight. Defaults are the nominal values.
struct EvolutionParams {
    double lambda = 0.4;
    double xi = 2.0;
    double mu = 5.0;

    void validate() const {
        if (!(lambda > 0.0) || !(xi > 0.0) || !(mu > 0.0))
            throw std::invalid_argument("evolution parameters must be strictly positive");
    }
};

inline void validate_opinions(const OpinionVector& x) {
    for (double v : x) {
        if (!std::isfinite(v) || v < -1.0 || v > 1.0)
            throw std::domain_error("opinion value outside [-1, 1]: " + std::to_string(v));
    }
}

inline void validate_traits(const TraitAssignment& psi, double tol = 1e-9) {
    for (std::size_t i = 0; i < psi.size(); ++i) {
        if (!psi[i].on_simplex(tol))
            throw std::invalid_argument("inner traits of agent " + std::to_string(i) +
                                        " are not on the unit simplex");
    }
}

} // namespace opinion

#endif
