#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "elckit/constructions.hpp"
#include "elckit/graph6.hpp"
#include "test_support.hpp"

using namespace elckit;
using namespace elckit::testing;

TEST_CASE("known graph6 strings") {
    CHECK(to_graph6(Graph(1)) == "@");
    CHECK(to_graph6(star_graph(2)) == "A_");
    CHECK(to_graph6(complete_graph(3)) == "Bw");
    CHECK(to_graph6(complete_graph(4)) == "C~");
    CHECK(from_graph6("Bw") == complete_graph(3));
}

TEST_CASE("graph6 round trip") {
    auto rng = make_rng(31);
    for (int n : {1, 2, 5, 11, 20, 33, 62}) {
        for (int i = 0; i < 20; ++i) {
            Graph g = random_graph(n, rng);
            CHECK(from_graph6(to_graph6(g)) == g);
        }
    }
}

TEST_CASE("graph6 errors") {
    Graph big(63);
    CHECK_THROWS_AS(to_graph6(big), std::invalid_argument);
    CHECK_THROWS_AS(from_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(from_graph6("~??"), std::invalid_argument);   // multi-byte header
    CHECK_THROWS_AS(from_graph6("Bw?"), std::invalid_argument);   // trailing bytes
    CHECK_THROWS_AS(from_graph6("B"), std::invalid_argument);     // truncated
}

TEST_CASE("adjacency text round trip") {
    auto rng = make_rng(37);
    for (int i = 0; i < 30; ++i) {
        Graph g = random_graph(7, rng);
        CHECK(from_adjacency_text(to_adjacency_text(g)) == g);
    }
    CHECK_THROWS_AS(from_adjacency_text("01\n00\n"), std::invalid_argument);  // asymmetric
    CHECK_THROWS_AS(from_adjacency_text("10\n01\n"), std::invalid_argument);  // loop
}

TEST_CASE("graph6 line reader skips comments") {
    auto graphs = read_graph6_lines("# header\nBw\n\nA_\n");
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0] == complete_graph(3));
    CHECK(graphs[1] == star_graph(2));
}
