#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "elckit/constructions.hpp"
#include "elckit/graph6.hpp"
#include "elckit/orbit.hpp"
#include "test_support.hpp"

using namespace elckit;
using namespace elckit::testing;

namespace {
Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}
}  // namespace

TEST_CASE("elc orbit of the path P4") {
    Orbit orbit = elc_orbit(path_graph(4));
    CHECK(orbit.size() == 2);
    CHECK_FALSE(orbit.truncated);
    Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    std::set<std::string> expected{canonical_form(path_graph(4)).g6, canonical_form(c4).g6};
    CHECK(std::set<std::string>(orbit.members.begin(), orbit.members.end()) == expected);
}

TEST_CASE("singleton elc orbits") {
    CHECK(elc_orbit(hamming_graph(3)).size() == 1);
    for (int n : {2, 4, 6, 9}) CHECK(elc_orbit(star_graph(n)).size() == 1);
    CHECK(elc_orbit(complete_graph(5)).size() == 1);
}

TEST_CASE("lc orbits of stars and edges") {
    for (int n : {3, 5, 8}) {
        Orbit orbit = lc_orbit(star_graph(n));
        CHECK(orbit.size() == 2);
        std::set<std::string> expected{canonical_form(star_graph(n)).g6,
                                       canonical_form(complete_graph(n)).g6};
        CHECK(std::set<std::string>(orbit.members.begin(), orbit.members.end()) == expected);
    }
    CHECK(lc_orbit(star_graph(2)).size() == 1);
}

TEST_CASE("orbit generation needs a connected graph") {
    CHECK_THROWS_AS(elc_orbit(empty_graph(3)), std::invalid_argument);
    CHECK_THROWS_AS(is_elc_preserved(empty_graph(2)), std::invalid_argument);
}

TEST_CASE("orbit caps report truncation") {
    auto rng = make_rng(53);
    Graph g = random_connected_graph(8, rng);
    while (elc_orbit(g).size() < 6) g = random_connected_graph(8, rng);
    Orbit capped = elc_orbit(g, 3);
    CHECK(capped.truncated);
    CHECK(capped.size() >= 3);
}

TEST_CASE("orbit well-definedness and closure") {
    auto rng = make_rng(59);
    for (int i = 0; i < 10; ++i) {
        Graph g = random_connected_graph(7, rng);
        Orbit orbit = elc_orbit(g);
        std::set<std::string> members(orbit.members.begin(), orbit.members.end());
        for (const auto& g6 : orbit.members) {
            Graph h = from_graph6(g6);
            Orbit again = elc_orbit(h);
            CHECK(again.members == orbit.members);
            for (auto [u, v] : h.edges())
                CHECK(members.count(canonical_form(h.elc(u, v)).g6) == 1);
        }
    }
}

TEST_CASE("is_elc_preserved with witnesses") {
    CHECK(is_elc_preserved(complete_graph(7)));
    CHECK(is_elc_preserved(star_graph(9)));
    std::pair<int, int> witness{-1, -1};
    CHECK_FALSE(is_elc_preserved(path_graph(4), &witness));
    CHECK(witness == std::pair<int, int>{1, 2});
    CHECK(is_elc_preserved(extended_hamming_graph(4)));
}

TEST_CASE("preserved iff the orbit is a singleton") {
    auto rng = make_rng(61);
    for (int i = 0; i < 40; ++i) {
        Graph g = random_connected_graph(7, rng);
        CHECK(is_elc_preserved(g) == (elc_orbit(g).size() == 1));
    }
}

TEST_CASE("lc preserved graphs") {
    CHECK(is_lc_preserved(star_graph(2)));
    CHECK_FALSE(is_lc_preserved(star_graph(3)));
    CHECK_FALSE(is_lc_preserved(complete_graph(5)));
}

TEST_CASE("partition of LC orbits into ELC orbits") {
    auto parts = partition_lc_orbit(star_graph(3));
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].size() == 1);
    CHECK(parts[1].size() == 1);

    Orbit lc = lc_orbit(path_graph(4));
    auto p4_parts = partition_lc_orbit(path_graph(4));
    std::size_t total = 0;
    std::set<std::string> all;
    bool found_pair = false;
    for (const auto& part : p4_parts) {
        total += part.size();
        all.insert(part.members.begin(), part.members.end());
        if (part.size() == 2) found_pair = true;
    }
    CHECK(total == lc.size());
    CHECK(all == std::set<std::string>(lc.members.begin(), lc.members.end()));
    CHECK(found_pair);  // the P4/C4 pair sits inside the LC orbit

    auto he_parts = partition_lc_orbit(extended_hamming_graph(3));
    bool found_he_singleton = false;
    std::string he = canonical_form(extended_hamming_graph(3)).g6;
    for (const auto& part : he_parts)
        if (part.size() == 1 && part.members.front() == he) found_he_singleton = true;
    CHECK(found_he_singleton);
}

TEST_CASE("every elc orbit stays inside the lc orbit") {
    auto rng = make_rng(67);
    for (int i = 0; i < 10; ++i) {
        Graph g = random_connected_graph(6, rng);
        Orbit lc = lc_orbit(g);
        Orbit elc = elc_orbit(g);
        std::set<std::string> lcm(lc.members.begin(), lc.members.end());
        for (const auto& m : elc.members) CHECK(lcm.count(m) == 1);
    }
}

TEST_CASE("parallel expansion matches sequential") {
    auto rng = make_rng(71);
    for (int i = 0; i < 5; ++i) {
        Graph g = random_connected_graph(8, rng);
        Orbit seq = elc_orbit(g, std::nullopt, 1);
        Orbit par = elc_orbit(g, std::nullopt, 3);
        CHECK(seq.members == par.members);
        CHECK(seq.representative == par.representative);
    }
}
