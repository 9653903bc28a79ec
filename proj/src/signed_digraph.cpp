#include "opinion/signed_digraph.hpp"

namespace opinion {

namespace {

// Iterative DFS over either the graph or its transpose.
std::size_t reachable_count(const SignedDigraph& g, bool transpose) {
    const std::size_t n = g.size();
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t v = 0; v < n; ++v) {
            if (seen[v]) continue;
            // Edge u -> v exists iff v is influenced by u (w_vu != 0);
            // transpose flips the direction.
            int w = transpose ? g.weight(u, v) : g.weight(v, u);
            if (w != 0) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
        }
    }
    return count;
}

} // namespace

bool is_strongly_connected(const SignedDigraph& g) {
    const std::size_t n = g.size();
    if (n == 1) return true;
    return reachable_count(g, false) == n && reachable_count(g, true) == n;
}

} // namespace opinion
