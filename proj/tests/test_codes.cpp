#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>

#include "elckit/canonical.hpp"
#include "elckit/codes.hpp"
#include "elckit/constructions.hpp"
#include "elckit/enumeration.hpp"
#include "elckit/errors.hpp"
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

LinearCode code_of(const Graph& g, bool big_side) {
    auto p = *g.bipartition();
    bool left_big = p.left_size() >= p.right_size();
    Side side = big_side == left_big ? Side::Left : Side::Right;
    return code_from_graph(g, p, side);
}

// Exhaustive code equivalence for tiny lengths: backtracking over column
// assignments with codeword-set checks. Independent of the graph route.
bool codes_equivalent_bruteforce(const LinearCode& a, const LinearCode& b) {
    if (a.length() != b.length() || a.dimension() != b.dimension()) return false;
    int n = a.length();
    if (n > 12) throw capacity_error("equivalence search limited to n <= 12");
    auto words = [](const LinearCode& c) {
        std::vector<std::uint64_t> out{0};
        for (std::uint64_t i = 1; i < (std::uint64_t{1} << c.dimension()); ++i) {
            std::uint64_t w = 0;
            for (int j = 0; j < c.dimension(); ++j)
                if ((i >> j) & 1) w ^= c.generator().row_bits(j);
            out.push_back(w);
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    auto wa = words(a), wb = words(b);

    std::vector<int> perm(static_cast<size_t>(n), -1);
    std::vector<bool> used(static_cast<size_t>(n), false);

    // Column weight profiles prune the search.
    auto profile = [&](const std::vector<std::uint64_t>& ws, int col) {
        std::map<int, int> prof;
        for (auto w : ws)
            if ((w >> col) & 1) ++prof[popcount(w)];
        return prof;
    };
    std::vector<std::map<int, int>> pa, pb;
    for (int c = 0; c < n; ++c) {
        pa.push_back(profile(wa, c));
        pb.push_back(profile(wb, c));
    }

    // Depth-first assignment of a's columns to b's columns.
    std::function<bool(int)> assign = [&](int col) {
        if (col == n) {
            std::vector<std::uint64_t> mapped;
            mapped.reserve(wa.size());
            for (auto w : wa) {
                std::uint64_t m = 0;
                for (int c = 0; c < n; ++c)
                    if ((w >> c) & 1) m |= std::uint64_t{1} << perm[static_cast<size_t>(c)];
                mapped.push_back(m);
            }
            std::sort(mapped.begin(), mapped.end());
            return mapped == wb;
        }
        for (int target = 0; target < n; ++target) {
            if (used[static_cast<size_t>(target)]) continue;
            if (pa[static_cast<size_t>(col)] != pb[static_cast<size_t>(target)]) continue;
            used[static_cast<size_t>(target)] = true;
            perm[static_cast<size_t>(col)] = target;
            if (assign(col + 1)) return true;
            used[static_cast<size_t>(target)] = false;
        }
        return false;
    };
    return assign(0);
}

}  // namespace

TEST_CASE("standard form basics") {
    BitMatrix id_prefixed(2, 5);
    id_prefixed.set(0, 0, true);
    id_prefixed.set(1, 1, true);
    id_prefixed.set(0, 3, true);
    id_prefixed.set(1, 4, true);
    StandardForm sf = standard_form(id_prefixed);
    CHECK(sf.p.rows() == 2);
    CHECK(sf.col_perm == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(sf.p.get(0, 1));

    BitMatrix rep(1, 6);
    for (int c = 0; c < 6; ++c) rep.set(0, c, true);
    StandardForm rsf = standard_form(rep);
    for (int c = 0; c < 5; ++c) CHECK(rsf.p.get(0, c));

    BitMatrix bad(2, 3);
    bad.set(0, 0, true);
    bad.set(1, 0, true);
    CHECK_THROWS_AS(standard_form(bad), std::invalid_argument);
}

TEST_CASE("standard form pivots pick the leftmost column") {
    BitMatrix m(2, 4);
    m.set(0, 1, true);
    m.set(0, 3, true);
    m.set(1, 2, true);
    StandardForm sf = standard_form(m);
    CHECK(sf.col_perm == std::vector<int>{1, 2, 0, 3});
}

TEST_CASE("graph to code and back") {
    // Repetition code's graph is the star.
    BitMatrix rep(1, 5);
    for (int c = 0; c < 5; ++c) rep.set(0, c, true);
    auto [g, p] = graph_from_code(LinearCode(rep));
    CHECK(are_isomorphic(g, star_graph(5)));

    // The [7,4] Hamming code's graph is h3.
    Graph h3 = hamming_graph(3);
    LinearCode hamming = code_of(h3, true);
    CHECK(hamming.length() == 7);
    CHECK(hamming.dimension() == 4);
    auto [g2, p2] = graph_from_code(hamming);
    CHECK(are_isomorphic(g2, h3));

    LinearCode simplex = code_of(h3, false);
    CHECK(simplex.dimension() == 3);

    // Round trip preserves the partition split.
    auto rng = make_rng(83);
    for (int i = 0; i < 40; ++i) {
        Graph g3 = random_connected_bipartite_graph(8, rng);
        auto bp = *g3.bipartition();
        LinearCode c = code_from_graph(g3, bp, Side::Left);
        auto [g4, p4] = graph_from_code(c);
        CHECK(are_isomorphic(g3, g4));
        CHECK(bipartite_canonical_form(g3, bp).form.bytes ==
              bipartite_canonical_form(g4, p4).form.bytes);
    }
}

TEST_CASE("star graph codes") {
    Graph s6 = star_graph(6);
    LinearCode parity = code_of(s6, true);
    CHECK(parity.dimension() == 5);
    CHECK(min_distance_bruteforce(parity) == 2);
    LinearCode repetition = code_of(s6, false);
    CHECK(repetition.dimension() == 1);
    CHECK(min_distance_bruteforce(repetition) == 6);
}

TEST_CASE("known minimum distances") {
    CHECK(min_distance_bruteforce(code_of(hamming_graph(3), true)) == 3);
    CHECK(min_distance_bruteforce(code_of(hamming_graph(3), false)) == 4);
    CHECK(min_distance_bruteforce(code_of(extended_hamming_graph(3), true)) == 4);
    CHECK(min_distance_bruteforce(code_of(hamming_expansion(star_graph(2)), true)) == 4);
}

TEST_CASE("distance via the orbit theorem") {
    Graph h3 = hamming_graph(3);
    auto p = *h3.bipartition();
    Side big = p.left_size() > p.right_size() ? Side::Left : Side::Right;
    CHECK(min_distance_via_orbit(h3, p, big) == 3);

    Graph p4 = path_graph(4);
    auto pp = *p4.bipartition();
    CHECK(min_distance_via_orbit(p4, pp, Side::Left) == 2);
    CHECK(min_distance_bruteforce(code_from_graph(p4, pp, Side::Left)) == 2);
}

TEST_CASE("distance via orbit matches brute force on the construction suite") {
    for (const char* name : {"s5", "s9", "S-2(s3)", "h3", "he3", "S-3(s3)", "S-2(s5)",
                             "S-2(s6)", "S-4(s3)", "S-2(S-2(s3))", "S-2(h3)", "S+2(h3)",
                             "H(s2)", "h4", "he4", "S-2(he3)"}) {
        Graph g = build_construction(name);
        auto p = *g.bipartition();
        for (Side side : {Side::Left, Side::Right}) {
            LinearCode code = code_from_graph(g, p, side);
            if (code.dimension() > 20) continue;
            auto via = min_distance_via_orbit(g, p, side);
            REQUIRE(via.has_value());
            CHECK(*via == min_distance_bruteforce(code));
        }
    }
}

TEST_CASE("distance cross-oracle on random bipartite graphs") {
    auto rng = make_rng(89);
    for (int i = 0; i < 60; ++i) {
        Graph g = random_connected_bipartite_graph(8, rng);
        auto p = *g.bipartition();
        for (Side side : {Side::Left, Side::Right}) {
            auto via = min_distance_via_orbit(g, p, side);
            REQUIRE(via.has_value());
            CHECK(*via == min_distance_bruteforce(code_from_graph(g, p, side)));
        }
    }
}

TEST_CASE("duals") {
    Graph s5 = star_graph(5);
    auto p = *s5.bipartition();
    LinearCode rep = code_from_graph(s5, p, Side::Left);
    LinearCode par = dual(rep);
    CHECK(par.dimension() == 4);
    CHECK(min_distance_bruteforce(par) == 2);

    auto rng = make_rng(97);
    for (int i = 0; i < 40; ++i) {
        Graph g = random_connected_bipartite_graph(7, rng);
        auto bp = *g.bipartition();
        LinearCode c = code_from_graph(g, bp, Side::Left);
        LinearCode d = dual(c);
        // Orthogonality in the original coordinates.
        BitMatrix prod = c.generator().multiplied(d.generator().transposed());
        for (int r = 0; r < prod.rows(); ++r)
            for (int col = 0; col < prod.cols(); ++col) CHECK_FALSE(prod.get(r, col));
        // Double dual is the same code.
        LinearCode dd = dual(d);
        CHECK(weight_distribution(dd) == weight_distribution(c));
        if (c.length() <= 12) CHECK(codes_equivalent_bruteforce(c, dd));
    }
}

TEST_CASE("self-dual codes") {
    CHECK(is_self_dual(code_of(extended_hamming_graph(3), true)));
    CHECK(is_self_dual(code_of(hamming_expansion(star_graph(2)), true)));
    {
        Graph c = circulant_size_two(3);
        auto p = *c.bipartition();
        CHECK(is_self_dual(code_from_graph(c, p, Side::Left)));
    }
    CHECK_FALSE(is_self_dual(code_of(hamming_graph(3), true)));
}

TEST_CASE("isodual detection") {
    Graph he3 = extended_hamming_graph(3);
    CHECK(is_isodual_via_orbit(he3, *he3.bipartition()) == true);
    Graph h3 = hamming_graph(3);
    CHECK(is_isodual_via_orbit(h3, *h3.bipartition()) == false);
    Graph circ = circulant_size_two(3);
    CHECK(is_isodual_via_orbit(circ, *circ.bipartition()) == true);
    // Balanced but not isodual: the path on 4 vertices corresponds to a
    // [4,2] code equivalent to its dual, so use a 6-vertex tree instead.
    Graph spider = Graph::from_edges(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}});
    auto sp = *spider.bipartition();
    if (sp.left_size() == sp.right_size()) {
        auto iso = is_isodual_via_orbit(spider, sp);
        REQUIRE(iso.has_value());
        // Verified against the brute-force column search below.
        LinearCode c = code_from_graph(spider, sp, Side::Left);
        CHECK(*iso == codes_equivalent_bruteforce(c, dual(c)));
    }
}

TEST_CASE("pivoting keeps the code equivalent") {
    for (const char* name : {"h3", "he3", "S-2(s3)", "s6", "H(s2)"}) {
        Graph g = build_construction(name);
        auto p = *g.bipartition();
        LinearCode base = code_from_graph(g, p, Side::Left);
        auto base_weights = weight_distribution(base);
        int checked = 0;
        for (auto [u, v] : g.edges()) {
            Graph h = g.elc(u, v);
            auto hp = *h.bipartition();
            // The pivot swaps u and v between the sides; pick the side with
            // the same size as the original left.
            Side side = popcount(hp.left) == p.left_size() ? Side::Left : Side::Right;
            LinearCode moved = code_from_graph(h, hp, side);
            CHECK(weight_distribution(moved) == base_weights);
            if (g.order() <= 12) CHECK(codes_equivalent_bruteforce(base, moved));
            if (++checked >= 4) break;  // a few edges suffice per graph
        }
    }
}

TEST_CASE("preserved graphs have a single standard form") {
    for (const char* name : {"s5", "h3", "he3", "S-2(s4)", "S-3(s3)"}) {
        Graph g = build_construction(name);
        auto p = *g.bipartition();
        auto base = bipartite_canonical_form(g, p).form.bytes;
        for (auto [u, v] : g.edges()) {
            Graph h = g.elc(u, v);
            auto hp = *h.bipartition();
            if (hp.left_size() != p.left_size()) hp = hp.swapped();
            CHECK(bipartite_canonical_form(h, hp).form.bytes == base);
        }
    }
}

TEST_CASE("star expansion parameter prediction") {
    auto pred = predict_star_expansion_params(3, 1, 3, 2, 2, false);
    CHECK(pred.code.n == 6);
    CHECK(pred.code.k == 2);
    CHECK(pred.code.d == 4);
    CHECK(pred.dual.k == 4);
    CHECK(pred.dual.d == 2);
    // Verify against the built graph.
    Graph sm = build_construction("S-2(s3)");
    auto p = *sm.bipartition();
    Side small_side = p.left_size() < p.right_size() ? Side::Left : Side::Right;
    LinearCode c = code_from_graph(sm, p, small_side);
    CHECK(c.dimension() == pred.code.k);
    CHECK(min_distance_bruteforce(c) == pred.code.d);
    LinearCode d = code_from_graph(sm, p, small_side == Side::Left ? Side::Right : Side::Left);
    CHECK(d.dimension() == pred.dual.k);
    CHECK(min_distance_bruteforce(d) == pred.dual.d);

    // S+^m of a star is the repetition code of length mk.
    auto star_pred = predict_star_expansion_params(4, 1, 4, 2, 3, true);
    CHECK(star_pred.code.n == 12);
    CHECK(star_pred.code.k == 1);
    CHECK(star_pred.code.d == 12);
}

TEST_CASE("star expansion prediction matches measurement on table entries") {
    struct Entry { const char* base; int m; bool plus; };
    for (auto [base, m, plus] : {Entry{"s3", 2, false}, {"s4", 2, false}, {"s3", 3, false},
                                 {"s5", 2, false}, {"h3", 2, false}, {"h3", 2, true}}) {
        Graph g = build_construction(base);
        auto p = *g.bipartition();
        int k = g.order();
        int r = std::min(p.left_size(), p.right_size());
        Side small_side = p.left_size() <= p.right_size() ? Side::Left : Side::Right;
        LinearCode cr = code_from_graph(g, p, small_side);
        int d = min_distance_bruteforce(cr);
        int dd = min_distance_bruteforce(
            code_from_graph(g, p, small_side == Side::Left ? Side::Right : Side::Left));
        auto pred = predict_star_expansion_params(k, r, d, dd, m, plus);

        std::string spec = std::string(plus ? "S+" : "S-") + std::to_string(m) + "(" + base + ")";
        Graph built = build_construction(spec);
        auto bp = *built.bipartition();
        for (Side side : {Side::Left, Side::Right}) {
            LinearCode mc = code_from_graph(built, bp, side);
            const CodeParams& expect =
                mc.dimension() == pred.code.k ? pred.code : pred.dual;
            CHECK(mc.dimension() == expect.k);
            CHECK(min_distance_bruteforce(mc) == expect.d);
        }
    }
}

TEST_CASE("hamming expansion parameter prediction") {
    auto hs2 = predict_hamming_expansion_params(2, 1);
    CHECK(hs2.code.n == 14);
    CHECK(hs2.code.k == 7);
    CHECK(hs2.code.d == 4);
    auto hs3 = predict_hamming_expansion_params(3, 1);
    CHECK(hs3.code.n == 21);
    CHECK(hs3.code.k == 10);
    CHECK(hs3.dual.k == 11);
    // Brute-force confirmation for H(s3).
    Graph g = hamming_expansion(star_graph(3));
    auto p = *g.bipartition();
    for (Side side : {Side::Left, Side::Right}) {
        LinearCode c = code_from_graph(g, p, side);
        CHECK(min_distance_bruteforce(c) == 4);
        CHECK((c.dimension() == 10 || c.dimension() == 11));
    }
}

TEST_CASE("iterated hamming expansion") {
    auto base = iterated_hamming_self_dual(IteratedBase::ExtendedHamming8, 0);
    CHECK(base.code.n == 8);
    CHECK(base.code.k == 4);
    CHECK(base.code.d == 4);
    CHECK(base.self_dual);
    CHECK(base.p_symmetric);
    CHECK(base.distance_verified);

    auto once = iterated_hamming_self_dual(IteratedBase::Edge2, 1);
    CHECK(once.code.n == 14);
    CHECK(once.code.k == 7);
    CHECK(once.code.d == 4);
    CHECK(once.self_dual);
    CHECK(once.p_symmetric);
    REQUIRE(once.graph.has_value());
    CHECK(are_isomorphic(*once.graph, hamming_expansion(star_graph(2))));

    auto twice = iterated_hamming_self_dual(IteratedBase::Edge2, 2);
    CHECK(twice.code.n == 98);
    CHECK(twice.code.k == 49);
    CHECK(twice.code.d == 4);
    CHECK_FALSE(twice.distance_verified);  // parameters only at this size
    CHECK(twice.self_dual);
    CHECK(twice.p_symmetric);
    CHECK_FALSE(twice.graph.has_value());

    auto he56 = iterated_hamming_self_dual(IteratedBase::ExtendedHamming8, 1);
    CHECK(he56.code.n == 56);
    CHECK(he56.self_dual);
    CHECK(he56.graph.has_value());

    CHECK_THROWS_AS(iterated_hamming_self_dual(IteratedBase::Edge2, 3), capacity_error);
}

TEST_CASE("code report") {
    Graph h3 = hamming_graph(3);
    auto p = *h3.bipartition();
    Side big = p.left_size() > p.right_size() ? Side::Left : Side::Right;
    CodeReport report = code_report(h3, p, big);
    CHECK(report.n == 7);
    CHECK(report.k == 4);
    CHECK(report.d == 3);
    CHECK(report.dual_d == 4);
    CHECK_FALSE(report.self_dual);
    CHECK(report.isodual == false);
    REQUIRE(report.weights.has_value());
    CHECK((*report.weights)[0] == 1);
    CHECK((*report.weights)[3] == 7);

    Graph he3 = extended_hamming_graph(3);
    CodeReport self = code_report(he3, *he3.bipartition(), Side::Left);
    CHECK(self.self_dual);
    CHECK(self.isodual == true);
    CHECK(self.d == 4);
}

TEST_CASE("self-dual survey over the constructible codes") {
    // Orbit size classes of the self-dual codes this library can build:
    // the [8,4,4] and [14,7,4] codes are preserved; the circulant family
    // gives the size-two orbits at lengths 12, 16, 20, 24, 28.
    std::vector<std::pair<std::string, LinearCode>> codes;
    auto add = [&](const std::string& label, const Graph& g) {
        auto p = *g.bipartition();
        codes.emplace_back(label, code_from_graph(g, p, Side::Left));
    };
    add("he3", extended_hamming_graph(3));
    add("H(s2)", hamming_expansion(star_graph(2)));
    for (int m : {3, 4, 5, 6, 7}) add("circ(" + std::to_string(m) + ")", circulant_size_two(m));

    auto rows = self_dual_orbit_survey(codes);
    REQUIRE(rows.size() == 7);
    for (const auto& row : rows) {
        CHECK(row.self_dual);
        CHECK(row.n == 2 * row.k);
    }
    CHECK(rows[0].orbit_class == OrbitSizeClass::One);
    CHECK(rows[1].orbit_class == OrbitSizeClass::One);
    for (size_t i = 2; i < rows.size(); ++i) CHECK(rows[i].orbit_class == OrbitSizeClass::Two);
}

TEST_CASE("graph of the extended hamming code") {
    BitMatrix gen(4, 8);
    // Generator of the [8,4,4] code in standard form.
    const char* p_rows[] = {"1101", "1011", "0111", "1110"};
    for (int r = 0; r < 4; ++r) {
        gen.set(r, r, true);
        for (int c = 0; c < 4; ++c)
            if (p_rows[r][c] == '1') gen.set(r, 4 + c, true);
    }
    auto [g, p] = graph_from_code(LinearCode(gen));
    CHECK(are_isomorphic(g, extended_hamming_graph(3)));
}

TEST_CASE("matrix text round trip") {
    BitMatrix m(2, 3);
    m.set(0, 0, true);
    m.set(1, 2, true);
    CHECK(BitMatrix::from_text(m.to_text()) == m);
    CHECK_THROWS_AS(BitMatrix::from_text("01\n0\n"), std::invalid_argument);
}

TEST_CASE("codeword enumeration is capped") {
    BitMatrix wide(25, 40);
    for (int r = 0; r < 25; ++r) wide.set(r, r, true);
    LinearCode big(wide);
    CHECK_THROWS_AS(min_distance_bruteforce(big), capacity_error);
}
