#include "selfcheck.hpp"

#include <functional>
#include <iostream>
#include <random>

#include "elckit/canonical.hpp"
#include "elckit/constructions.hpp"
#include "elckit/enumeration.hpp"
#include "elckit/graph6.hpp"
#include "elckit/orbit.hpp"

namespace {

using namespace elckit;

struct Runner {
    int failures = 0;

    void suite(const std::string& name, const std::function<bool()>& body) {
        bool ok = false;
        std::string detail;
        try {
            ok = body();
        } catch (const std::exception& e) {
            detail = e.what();
        }
        if (ok) {
            std::cout << "PASS " << name << '\n';
        } else {
            ++failures;
            std::cout << "FAIL " << name << (detail.empty() ? "" : " (" + detail + ")") << '\n';
        }
    }
};

Graph random_graph(int n, std::mt19937_64& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(0.5);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

Graph random_connected(int n, std::mt19937_64& rng) {
    for (;;) {
        Graph g = random_graph(n, rng);
        if (g.is_connected()) return g;
    }
}

std::pair<int, int> random_edge(const Graph& g, std::mt19937_64& rng) {
    auto edges = g.edges();
    return edges[rng() % edges.size()];
}

}  // namespace

int cmd_selfcheck(int cases, std::uint64_t seed, int jobs) {
    (void)jobs;
    Runner runner;
    auto fresh_rng = [&] { return std::mt19937_64(seed); };

    runner.suite("lc involution", [&] {
        auto rng = fresh_rng();
        for (int i = 0; i < cases; ++i) {
            int n = 4 + static_cast<int>(rng() % 7);
            Graph g = random_graph(n, rng);
            int v = static_cast<int>(rng() % n);
            if (!(g.local_complement(v).local_complement(v) == g)) return false;
        }
        return true;
    });

    runner.suite("elc same-edge involution", [&] {
        auto rng = fresh_rng();
        for (int i = 0; i < cases; ++i) {
            Graph g = random_connected(4 + static_cast<int>(rng() % 6), rng);
            auto [u, v] = random_edge(g, rng);
            if (!(g.elc(u, v).elc(u, v) == g)) return false;
        }
        return true;
    });

    runner.suite("elc definitions agree", [&] {
        auto rng = fresh_rng();
        for (int i = 0; i < cases; ++i) {
            Graph g = random_connected(4 + static_cast<int>(rng() % 6), rng);
            auto [u, v] = random_edge(g, rng);
            if (!(g.elc(u, v) == g.elc_via_lc(u, v))) return false;
            if (!(g.elc_via_lc(u, v) == g.elc_via_lc(v, u))) return false;
        }
        return true;
    });

    runner.suite("lc/elc preserve connectivity and parity", [&] {
        auto rng = fresh_rng();
        for (int i = 0; i < cases; ++i) {
            Graph g = random_connected(5 + static_cast<int>(rng() % 5), rng);
            int v = static_cast<int>(rng() % g.order());
            auto [a, b] = random_edge(g, rng);
            if (!g.local_complement(v).is_connected()) return false;
            if (!g.elc(a, b).is_connected()) return false;
            bool odd = g.is_odd();
            if (odd && !(g.local_complement(v).is_odd() && g.elc(a, b).is_odd())) return false;
        }
        return true;
    });

    runner.suite("canonical form ignores labels", [&] {
        auto rng = fresh_rng();
        for (int i = 0; i < cases; ++i) {
            int n = 4 + static_cast<int>(rng() % 6);
            Graph g = random_graph(n, rng);
            std::vector<int> perm(static_cast<size_t>(n));
            for (int j = 0; j < n; ++j) perm[static_cast<size_t>(j)] = j;
            std::shuffle(perm.begin(), perm.end(), rng);
            if (canonical_form(g).bytes != canonical_form(g.relabeled(perm)).bytes) return false;
        }
        return true;
    });

    runner.suite("graph6 round trip", [&] {
        auto rng = fresh_rng();
        for (int i = 0; i < cases; ++i) {
            Graph g = random_graph(2 + static_cast<int>(rng() % 20), rng);
            if (!(from_graph6(to_graph6(g)) == g)) return false;
        }
        return true;
    });

    runner.suite("orderly generation matches the naive oracle", [&] {
        for (int n = 2; n <= 6; ++n) {
            if (connected_graph_classes(n, false).size() != naive_connected_class_count(n))
                return false;
            if (connected_graph_classes(n, true).size() != naive_connected_class_count(n, true))
                return false;
        }
        return true;
    });

    runner.suite("small census values", [&] {
        CensusEngine engine;
        std::size_t b[] = {0, 0, 1, 1, 2, 3, 8};
        std::size_t nb[] = {0, 0, 0, 1, 2, 7, 27};
        for (int n = 2; n <= 6; ++n) {
            if (engine.orbit_count(n, GraphClass::Bipartite) != b[n]) return false;
            if (n >= 3 && engine.orbit_count(n, GraphClass::NonBipartite) != nb[n]) return false;
        }
        return engine.preserved_count(6, GraphClass::Bipartite) == 2 &&
               engine.preserved_count(6, GraphClass::NonBipartite) == 2 &&
               engine.size_two_count(6, SizeTwoClass::Lc) == 2;
    });

    runner.suite("construction spot checks", [&] {
        if (!is_elc_preserved(build_construction("S-2(s3)"))) return false;
        if (!is_elc_preserved(hamming_graph(3))) return false;
        if (elc_orbit(circulant_size_two(3)).size() != 2) return false;
        Graph h3 = hamming_graph(3);
        auto p = *h3.bipartition();
        Side big = p.left_size() > p.right_size() ? Side::Left : Side::Right;
        LinearCode code = code_from_graph(h3, p, big);
        return code.dimension() == 4 && min_distance_bruteforce(code) == 3;
    });

    std::cout << (runner.failures == 0 ? "selfcheck OK" : "selfcheck FAILED") << '\n';
    return runner.failures == 0 ? 0 : 4;
}
