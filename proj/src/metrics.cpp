#include "opinion/metrics.hpp"

#include <queue>
#include <stdexcept>
#include <vector>

#include "opinion/matrix_exp.hpp"

namespace opinion {

namespace {

// BFS distances from `src` over nonzero edges, sign ignored. Unreachable
// vertices keep distance 0; callers only run this on strongly connected
// digraphs where that cannot happen for src != dst.
std::vector<std::size_t> bfs_distances(const SignedDigraph& g,
                                       const std::vector<std::vector<std::size_t>>& out_edges,
                                       std::size_t src) {
    std::vector<std::size_t> dist(g.size(), 0);
    std::vector<char> seen(g.size(), 0);
    std::queue<std::size_t> q;
    q.push(src);
    seen[src] = 1;
    while (!q.empty()) {
        std::size_t u = q.front();
        q.pop();
        for (std::size_t v : out_edges[u]) {
            if (seen[v]) continue;
            seen[v] = 1;
            dist[v] = dist[u] + 1;
            q.push(v);
        }
    }
    return dist;
}

} // namespace

NetworkMetrics metrics(const SignedDigraph& g) {
    if (!is_strongly_connected(g))
        throw std::invalid_argument("metrics: digraph is not strongly connected");

    const std::size_t n = g.size();
    NetworkMetrics m;

    // Out-edge lists (u -> v when w_vu != 0), self-loops skipped for paths.
    std::vector<std::vector<std::size_t>> out_edges(n);
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t u = 0; u < n; ++u) {
            if (u != v && g.weight(v, u) != 0) out_edges[u].push_back(v);
        }
    }

    std::size_t path_sum = 0;
    std::size_t diameter = 0;
    for (std::size_t src = 0; src < n; ++src) {
        auto dist = bfs_distances(g, out_edges, src);
        for (std::size_t dst = 0; dst < n; ++dst) {
            if (dst == src) continue;
            path_sum += dist[dst];
            diameter = std::max(diameter, dist[dst]);
        }
    }
    if (n > 1) m.average_path_length = static_cast<double>(path_sum) /
                                       static_cast<double>(n * (n - 1));
    m.diameter = diameter;

    // Per-agent clustering over in-neighbours excluding self: the fraction
    // of ordered pairs (j, k) of those neighbours joined by an edge j -> k.
    double cc_sum = 0.0;
    std::size_t cc_agents = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> nbrs;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && g.weight(i, j) != 0) nbrs.push_back(j);
        const std::size_t k = nbrs.size();
        if (k == 0) continue;
        ++cc_agents;
        if (k == 1) {
            cc_sum += 1.0;
            continue;
        }
        std::size_t present = 0;
        for (std::size_t j : nbrs)
            for (std::size_t l : nbrs)
                if (j != l && g.weight(l, j) != 0) ++present;
        cc_sum += static_cast<double>(present) / static_cast<double>(k * (k - 1));
    }
    if (cc_agents > 0) m.clustering_coefficient = cc_sum / static_cast<double>(cc_agents);

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            int w = g.weight(i, j);
            if (w > 0) ++m.positive_edges;
            if (w < 0) ++m.negative_edges;
        }
    }

    DenseMatrix w(n), wabs(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            int v = g.weight(i, j);
            w(i, j) = static_cast<double>(v);
            wabs(i, j) = static_cast<double>(v < 0 ? -v : v);
        }
    }
    m.balance_index = trace(matrix_exponential(w)) / trace(matrix_exponential(wabs));

    return m;
}

} // namespace opinion
