#include "elckit/constructions.hpp"

#include <algorithm>
#include <cctype>

#include "elckit/errors.hpp"
#include "elckit/orbit.hpp"

namespace elckit {
namespace {

void check_result_order(long long n, const char* what) {
    if (n > kMaxVertices)
        throw capacity_error(std::string(what) + " would need " + std::to_string(n) +
                             " vertices; the graph engine caps at 64");
}

}  // namespace

Graph empty_graph(int n) {
    if (n < 1) throw std::invalid_argument("empty graph needs n >= 1");
    return Graph(n);
}

Graph star_graph(int n) {
    if (n < 2) throw std::invalid_argument("star graph needs n >= 2");
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

Graph complete_graph(int n) {
    if (n < 3) throw std::invalid_argument("complete graph needs n >= 3");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph substitute(const Graph& g, int v, const Graph& h) {
    if (v < 0 || v >= g.order()) throw std::out_of_range("substitute: vertex out of range");
    long long n = static_cast<long long>(g.order()) - 1 + h.order();
    check_result_order(n, "substitution");
    Graph out(static_cast<int>(n));
    // old label -> new label for the surviving vertices of g
    auto remap = [&](int u) { return u < v ? u : u + h.order() - 1; };
    for (auto [a, b] : g.edges()) {
        if (a == v || b == v) continue;
        out.add_edge(remap(a), remap(b));
    }
    for (auto [a, b] : h.edges()) out.add_edge(v + a, v + b);
    for_each_vertex(g.neighborhood(v), [&](int u) {
        for (int a = 0; a < h.order(); ++a) out.add_edge(v + a, remap(u));
    });
    return out;
}

Graph add_pendant(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw std::out_of_range("add_pendant: vertex out of range");
    check_result_order(g.order() + 1, "pendant");
    return g.extended(vbit(v));
}

Graph star_expansion(const Graph& g, const Bipartition& p, Side substituted, int m) {
    if (m <= 1) throw std::invalid_argument("star expansion needs m > 1");
    if ((p.left & p.right) || ((p.left | p.right) != g.vertex_mask()))
        throw std::invalid_argument("star expansion: invalid bipartition");
    if (!g.is_connected() || !g.is_bipartite())
        throw std::invalid_argument("star expansion needs a connected bipartite graph");
    VertexSet sub = substituted == Side::Left ? p.left : p.right;
    long long n = static_cast<long long>(g.order()) * m;
    check_result_order(n, "star expansion");
    Graph out(static_cast<int>(n));
    for (auto [u, v] : g.edges()) {
        int su = (sub >> u) & 1 ? m : 1;
        int sv = (sub >> v) & 1 ? m : 1;
        for (int a = 0; a < su; ++a)
            for (int b = 0; b < sv; ++b) out.add_edge(u * m + a, v * m + b);
    }
    for (int v = 0; v < g.order(); ++v) {
        if ((sub >> v) & 1) continue;
        for (int a = 1; a < m; ++a) out.add_edge(v * m, v * m + a);  // pendants
    }
    return out;
}

Graph clique_expansion(const Graph& g, int m) {
    if (m <= 1) throw std::invalid_argument("clique expansion needs m > 1");
    long long n = static_cast<long long>(g.order()) * m;
    check_result_order(n, "clique expansion");
    Graph out(static_cast<int>(n));
    for (int v = 0; v < g.order(); ++v)
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b) out.add_edge(v * m + a, v * m + b);
    for (auto [u, v] : g.edges())
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) out.add_edge(u * m + a, v * m + b);
    return out;
}

Graph hamming_graph(int r) {
    if (r < 3) throw std::invalid_argument("hamming graph needs r >= 3");
    long long n = (1LL << r) - 1;
    check_result_order(n, "hamming graph");
    Graph g(static_cast<int>(n));
    // Subsets of U by (size, lexicographic as a sorted element list).
    std::vector<VertexSet> subsets;
    for (int size = 2; size <= r; ++size) {
        std::vector<VertexSet> of_size;
        for (VertexSet s = 1; s < (VertexSet{1} << r); ++s)
            if (popcount(s) == size) of_size.push_back(s);
        std::sort(of_size.begin(), of_size.end(), [](VertexSet a, VertexSet b) {
            std::vector<int> ea, eb;
            for_each_vertex(a, [&](int v) { ea.push_back(v); });
            for_each_vertex(b, [&](int v) { eb.push_back(v); });
            return ea < eb;
        });
        subsets.insert(subsets.end(), of_size.begin(), of_size.end());
    }
    for (size_t i = 0; i < subsets.size(); ++i)
        for_each_vertex(subsets[i], [&](int u) { g.add_edge(r + static_cast<int>(i), u); });
    return g;
}

Graph extended_hamming_graph(int r) {
    Graph h = hamming_graph(r);
    check_result_order(h.order() + 1, "extended hamming graph");
    VertexSet even = 0;
    for (int v = 0; v < h.order(); ++v)
        if (h.degree(v) % 2 == 0) even |= vbit(v);
    return h.extended(even);
}

Graph hamming_block() {
    return Graph::from_edges(7, {{0, 3}, {0, 4}, {1, 3}, {1, 5}, {2, 4}, {2, 5},
                                 {3, 6}, {4, 6}, {5, 6}});
}

Graph hamming_expansion(const Graph& g) {
    long long n = 7LL * g.order();
    check_result_order(n, "hamming expansion");
    Graph block = hamming_block();
    Graph out(static_cast<int>(n));
    for (int i = 0; i < g.order(); ++i)
        for (auto [a, b] : block.edges()) out.add_edge(7 * i + a, 7 * i + b);
    for (auto [i, j] : g.edges())
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) out.add_edge(7 * i + a, 7 * j + b);
    return out;
}

Graph hamming_clique_expansion(int k, int m) {
    if (k < 1 || m < 1) throw std::invalid_argument("hamming clique expansion needs k,m >= 1");
    long long n = 7LL * k + m;
    check_result_order(n, "hamming clique expansion");
    Graph base = k == 1 ? empty_graph(1) : complete_graph(k);
    Graph hc = hamming_expansion(base);
    Graph out(static_cast<int>(n));
    for (auto [a, b] : hc.edges()) out.add_edge(a, b);
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) out.add_edge(7 * k + a, 7 * k + b);
        for (int i = 0; i < k; ++i)
            for (int t = 0; t < 3; ++t) out.add_edge(7 * k + a, 7 * i + t);
    }
    return out;
}

Graph h_star(int r) {
    Graph he = extended_hamming_graph(r);
    std::vector<int> small_side;
    for (int v = 0; v < r; ++v) small_side.push_back(v);
    small_side.push_back(he.order() - 1);  // the extension vertex
    return lc_sequence(he, small_side);
}

Graph circulant_size_two(int m) {
    if (m < 3) throw std::invalid_argument(
        "circulant family needs m >= 3 (m = 1 and m = 2 collapse to ELC-preserved graphs)");
    long long n = 4LL * m;
    check_result_order(n, "circulant construction");
    Graph g(static_cast<int>(n));
    for (int i = 0; i < 2 * m; ++i)
        for (int j = 0; j < 2 * m; ++j)
            if (i != j) g.add_edge(i, 2 * m + j);
    return g;
}

const ConstructionSpec& ConstructionSpec::child() const {
    if (!child_) throw std::logic_error("construction atom has no child");
    return *child_;
}

ConstructionSpec ConstructionSpec::atom(Kind kind, int a, int b) {
    ConstructionSpec s;
    s.kind_ = kind;
    s.a_ = a;
    s.b_ = b;
    return s;
}

ConstructionSpec ConstructionSpec::star_expand(bool plus, int m, ConstructionSpec child) {
    ConstructionSpec s;
    s.kind_ = Kind::StarExpand;
    s.plus_ = plus;
    s.a_ = m;
    s.child_ = std::make_shared<const ConstructionSpec>(std::move(child));
    return s;
}

ConstructionSpec ConstructionSpec::clique_expand(int m, ConstructionSpec child) {
    ConstructionSpec s;
    s.kind_ = Kind::CliqueExpand;
    s.a_ = m;
    s.child_ = std::make_shared<const ConstructionSpec>(std::move(child));
    return s;
}

ConstructionSpec ConstructionSpec::hamming_expand(ConstructionSpec child) {
    ConstructionSpec s;
    s.kind_ = Kind::HammingExpand;
    s.child_ = std::make_shared<const ConstructionSpec>(std::move(child));
    return s;
}

namespace {

struct Parser {
    const std::string& text;
    size_t pos = 0;

    explicit Parser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool try_consume(const std::string& token) {
        skip_ws();
        if (text.compare(pos, token.size(), token) == 0) {
            pos += token.size();
            return true;
        }
        return false;
    }
    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw std::invalid_argument("construction spec: expected '" + std::string(1, c) +
                                        "' at position " + std::to_string(pos));
        ++pos;
    }
    int number() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("construction spec: expected a number at position " +
                                                      std::to_string(start));
        return std::stoi(text.substr(start, pos - start));
    }

    ConstructionSpec expression() {
        skip_ws();
        using K = ConstructionSpec::Kind;
        if (try_consume("S+")) {
            int m = number();
            expect('(');
            auto child = expression();
            expect(')');
            return ConstructionSpec::star_expand(true, m, std::move(child));
        }
        if (try_consume("S-")) {
            int m = number();
            expect('(');
            auto child = expression();
            expect(')');
            return ConstructionSpec::star_expand(false, m, std::move(child));
        }
        if (try_consume("Hkm")) {
            expect('(');
            int k = number();
            expect(',');
            int m = number();
            expect(')');
            return ConstructionSpec::atom(K::HammingClique, k, m);
        }
        if (try_consume("H(")) {
            auto child = expression();
            expect(')');
            return ConstructionSpec::hamming_expand(std::move(child));
        }
        if (try_consume("C")) {
            int m = number();
            expect('(');
            auto child = expression();
            expect(')');
            return ConstructionSpec::clique_expand(m, std::move(child));
        }
        if (try_consume("circ")) {
            expect('(');
            int m = number();
            expect(')');
            return ConstructionSpec::atom(K::Circulant, m);
        }
        if (try_consume("hstar")) return ConstructionSpec::atom(K::HammingStar, number());
        if (try_consume("he")) return ConstructionSpec::atom(K::ExtendedHamming, number());
        if (try_consume("h")) return ConstructionSpec::atom(K::Hamming, number());
        if (try_consume("e")) return ConstructionSpec::atom(K::Empty, number());
        if (try_consume("s")) return ConstructionSpec::atom(K::Star, number());
        if (try_consume("c")) return ConstructionSpec::atom(K::Complete, number());
        throw std::invalid_argument("construction spec: unrecognised token at position " +
                                    std::to_string(pos));
    }
};

}  // namespace

ConstructionSpec ConstructionSpec::parse(const std::string& text) {
    Parser parser(text);
    ConstructionSpec spec = parser.expression();
    parser.skip_ws();
    if (parser.pos != text.size())
        throw std::invalid_argument("construction spec: trailing input at position " +
                                    std::to_string(parser.pos));
    return spec;
}

std::string ConstructionSpec::to_string() const {
    switch (kind_) {
        case Kind::Empty: return "e" + std::to_string(a_);
        case Kind::Star: return "s" + std::to_string(a_);
        case Kind::Complete: return "c" + std::to_string(a_);
        case Kind::Hamming: return "h" + std::to_string(a_);
        case Kind::ExtendedHamming: return "he" + std::to_string(a_);
        case Kind::HammingStar: return "hstar" + std::to_string(a_);
        case Kind::HammingClique:
            return "Hkm(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
        case Kind::Circulant: return "circ(" + std::to_string(a_) + ")";
        case Kind::StarExpand:
            return std::string("S") + (plus_ ? "+" : "-") + std::to_string(a_) + "(" +
                   child().to_string() + ")";
        case Kind::CliqueExpand:
            return "C" + std::to_string(a_) + "(" + child().to_string() + ")";
        case Kind::HammingExpand: return "H(" + child().to_string() + ")";
    }
    throw std::logic_error("unreachable construction kind");
}

int ConstructionSpec::node_count() const {
    if (child_) return 1 + child_->node_count();
    return 1;
}

Graph ConstructionSpec::build(bool strict) const {
    auto check_strict = [&](const Graph& g, const char* op) {
        if (strict && !is_elc_preserved(g))
            throw std::invalid_argument(std::string(op) +
                                        " (strict mode): argument is not ELC-preserved");
    };
    switch (kind_) {
        case Kind::Empty: return empty_graph(a_);
        case Kind::Star: return star_graph(a_);
        case Kind::Complete: return complete_graph(a_);
        case Kind::Hamming: return hamming_graph(a_);
        case Kind::ExtendedHamming: return extended_hamming_graph(a_);
        case Kind::HammingStar: return h_star(a_);
        case Kind::HammingClique: return hamming_clique_expansion(a_, b_);
        case Kind::Circulant: return circulant_size_two(a_);
        case Kind::StarExpand: {
            Graph g = child().build(strict);
            check_strict(g, "star expansion");
            auto p = g.bipartition();
            if (!p) throw std::invalid_argument("star expansion needs a bipartite argument");
            Side side;
            if (p->left_size() == p->right_size())
                side = plus_ ? Side::Right : Side::Left;
            else if (plus_)
                side = p->left_size() > p->right_size() ? Side::Left : Side::Right;
            else
                side = p->left_size() < p->right_size() ? Side::Left : Side::Right;
            return star_expansion(g, *p, side, a_);
        }
        case Kind::CliqueExpand: {
            Graph g = child().build(strict);
            check_strict(g, "clique expansion");
            return clique_expansion(g, a_);
        }
        case Kind::HammingExpand: {
            Graph g = child().build(strict);
            check_strict(g, "hamming expansion");
            return hamming_expansion(g);
        }
    }
    throw std::logic_error("unreachable construction kind");
}

Graph build_construction(const std::string& text, bool strict) {
    return ConstructionSpec::parse(text).build(strict);
}

}  // namespace elckit
