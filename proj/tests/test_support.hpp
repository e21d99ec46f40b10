#ifndef ELCKIT_TEST_SUPPORT_HPP
#define ELCKIT_TEST_SUPPORT_HPP

#include <random>
#include <vector>

#include "elckit/graph.hpp"

namespace elckit::testing {

inline std::mt19937_64 make_rng(std::uint64_t seed = 0x5eed) { return std::mt19937_64(seed); }

inline Graph random_graph(int n, std::mt19937_64& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(0.5);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

inline Graph random_connected_graph(int n, std::mt19937_64& rng) {
    for (;;) {
        Graph g = random_graph(n, rng);
        if (g.is_connected()) return g;
    }
}

inline Graph random_connected_bipartite_graph(int n, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(0.5);
    for (;;) {
        VertexSet left = 0;
        for (int v = 0; v < n; ++v)
            if (coin(rng)) left |= vbit(v);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                bool lu = (left >> u) & 1, lv = (left >> v) & 1;
                if (lu != lv && coin(rng)) g.add_edge(u, v);
            }
        if (g.is_connected()) return g;
    }
}

/// Connected graph in which every degree is odd (n must be even).
inline Graph random_odd_graph(int n, std::mt19937_64& rng) {
    for (;;) {
        Graph g = random_graph(n, rng);
        for (;;) {
            std::vector<int> even;
            for (int v = 0; v < n; ++v)
                if (g.degree(v) % 2 == 0) even.push_back(v);
            if (even.empty()) break;
            std::uniform_int_distribution<size_t> pick(0, even.size() - 1);
            size_t a = pick(rng), b = pick(rng);
            while (b == a) b = pick(rng);
            g.toggle_edge(even[a], even[b]);
        }
        if (g.is_connected()) return g;
    }
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

inline std::pair<int, int> random_edge(const Graph& g, std::mt19937_64& rng) {
    auto edges = g.edges();
    std::uniform_int_distribution<size_t> pick(0, edges.size() - 1);
    return edges[pick(rng)];
}

/// The bipartite shortcut for ELC: toggle every pair between N_u \ {v} and
/// N_v \ {u}, then swap u and v. Valid only for bipartite graphs (no
/// common neighbours); used as an oracle against Graph::elc.
inline Graph bipartite_pivot_oracle(const Graph& g, int u, int v) {
    Graph out = g;
    VertexSet nu = g.neighborhood(u) & ~vbit(v);
    VertexSet nv = g.neighborhood(v) & ~vbit(u);
    for_each_vertex(nu, [&](int x) {
        for_each_vertex(nv, [&](int y) { out.toggle_edge(x, y); });
    });
    std::vector<int> swap_perm(static_cast<size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i) swap_perm[static_cast<size_t>(i)] = i;
    std::swap(swap_perm[static_cast<size_t>(u)], swap_perm[static_cast<size_t>(v)]);
    return out.relabeled(swap_perm);
}

}  // namespace elckit::testing

#endif
