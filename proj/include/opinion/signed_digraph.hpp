#ifndef OPINION_SIGNED_DIGRAPH_HPP
#define OPINION_SIGNED_DIGRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace opinion {

/// Signed interaction structure. Entry (i, j) is the influence of agent j
/// on agent i: +1 approve/trust/follow, -1 disapprove/mistrust/antagonise,
/// 0 no edge. Every agent carries a unit self-loop.
class SignedDigraph {
public:
    explicit SignedDigraph(std::size_t n) : n_(n), w_(n * n, 0) {
        if (n == 0) throw std::invalid_argument("digraph must have at least one agent");
        for (std::size_t i = 0; i < n; ++i) w_[i * n + i] = 1;
    }

    std::size_t size() const { return n_; }

    int weight(std::size_t i, std::size_t j) const {
        check_index(i);
        check_index(j);
        return w_[i * n_ + j];
    }

    /// Sets the influence of j on i. The self-loop is fixed at +1.
    void set_weight(std::size_t i, std::size_t j, int w) {
        check_index(i);
        check_index(j);
        if (w != -1 && w != 0 && w != 1)
            throw std::invalid_argument("edge weight must be in {-1, 0, 1}");
        if (i == j && w != 1)
            throw std::invalid_argument("self-loops are fixed at +1");
        w_[i * n_ + j] = static_cast<std::int8_t>(w);
    }

    /// In-neighbours of agent i (indices j with w_ij != 0, self included).
    std::vector<std::size_t> in_neighbours(std::size_t i) const {
        check_index(i);
        std::vector<std::size_t> out;
        for (std::size_t j = 0; j < n_; ++j)
            if (w_[i * n_ + j] != 0) out.push_back(j);
        return out;
    }

    std::size_t in_degree(std::size_t i) const {
        check_index(i);
        std::size_t d = 0;
        for (std::size_t j = 0; j < n_; ++j)
            if (w_[i * n_ + j] != 0) ++d;
        return d;
    }

    std::size_t nonzero_count() const {
        std::size_t c = 0;
        for (auto w : w_)
            if (w != 0) ++c;
        return c;
    }

    bool operator==(const SignedDigraph& other) const {
        return n_ == other.n_ && w_ == other.w_;
    }

    /// Flat (neighbour, weight) adjacency used by the evolution hot loop.
    struct Adjacency {
        std::vector<std::uint32_t> offsets;           // n + 1 entries
        std::vector<std::pair<std::uint32_t, std::int8_t>> edges;
    };

    Adjacency compile_adjacency() const {
        Adjacency adj;
        adj.offsets.reserve(n_ + 1);
        adj.offsets.push_back(0);
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                std::int8_t w = w_[i * n_ + j];
                if (w != 0) adj.edges.emplace_back(static_cast<std::uint32_t>(j), w);
            }
            adj.offsets.push_back(static_cast<std::uint32_t>(adj.edges.size()));
        }
        return adj;
    }

private:
    void check_index(std::size_t i) const {
        if (i >= n_) throw std::out_of_range("agent index out of range");
    }

    std::size_t n_;
    std::vector<std::int8_t> w_;
};

/// True iff every ordered pair of agents is joined by a directed path of
/// nonzero-weight edges.
bool is_strongly_connected(const SignedDigraph& g);

} // namespace opinion

#endif
