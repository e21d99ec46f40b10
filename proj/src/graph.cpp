#include "elckit/graph.hpp"

#include <algorithm>

namespace elckit {

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(edge_count()));
    for (int u = 0; u < n_; ++u) {
        VertexSet higher = adj_[static_cast<size_t>(u)] & ~low_mask(u + 1);
        for_each_vertex(higher, [&](int v) { out.emplace_back(u, v); });
    }
    return out;
}

std::vector<int> Graph::degree_sequence_sorted() const {
    std::vector<int> deg(static_cast<size_t>(n_));
    for (int v = 0; v < n_; ++v) deg[static_cast<size_t>(v)] = popcount(adj_[static_cast<size_t>(v)]);
    std::sort(deg.begin(), deg.end());
    return deg;
}

Graph Graph::local_complement(int v) const {
    check_vertex(v);
    Graph out = *this;
    VertexSet nv = adj_[static_cast<size_t>(v)];
    for_each_vertex(nv, [&](int u) {
        out.adj_[static_cast<size_t>(u)] ^= nv & ~vbit(u);
    });
    return out;
}

Graph Graph::elc(int u, int v) const {
    if (!has_edge(u, v)) throw std::invalid_argument("elc requires {u,v} to be an edge");
    VertexSet nu = adj_[static_cast<size_t>(u)];
    VertexSet nv = adj_[static_cast<size_t>(v)];
    VertexSet a = nu & ~nv & ~vbit(v);
    VertexSet b = nv & ~nu & ~vbit(u);
    VertexSet c = nu & nv;

    Graph out = *this;
    for_each_vertex(a, [&](int x) { out.adj_[static_cast<size_t>(x)] ^= (b | c); });
    for_each_vertex(b, [&](int x) { out.adj_[static_cast<size_t>(x)] ^= (a | c); });
    for_each_vertex(c, [&](int x) { out.adj_[static_cast<size_t>(x)] ^= (a | b); });

    // Swap the labels of u and v.
    std::swap(out.adj_[static_cast<size_t>(u)], out.adj_[static_cast<size_t>(v)]);
    VertexSet uv = vbit(u) | vbit(v);
    for (int w = 0; w < n_; ++w) {
        VertexSet& row = out.adj_[static_cast<size_t>(w)];
        bool bu = (row >> u) & 1, bv = (row >> v) & 1;
        if (bu != bv) row ^= uv;
    }
    return out;
}

Graph Graph::elc_via_lc(int u, int v) const {
    if (!has_edge(u, v)) throw std::invalid_argument("elc requires {u,v} to be an edge");
    return local_complement(u).local_complement(v).local_complement(u);
}

Graph Graph::induced_subgraph(VertexSet w) const {
    w &= vertex_mask();
    int m = popcount(w);
    if (m == 0) throw std::invalid_argument("induced subgraph needs at least one vertex");
    std::vector<int> map(static_cast<size_t>(n_), -1);
    int next = 0;
    for_each_vertex(w, [&](int v) { map[static_cast<size_t>(v)] = next++; });
    Graph out(m);
    for_each_vertex(w, [&](int v) {
        for_each_vertex(adj_[static_cast<size_t>(v)] & w, [&](int x) {
            if (x > v) out.add_edge(map[static_cast<size_t>(v)], map[static_cast<size_t>(x)]);
        });
    });
    return out;
}

Graph Graph::complement() const {
    Graph out(n_);
    for (int v = 0; v < n_; ++v)
        out.adj_[static_cast<size_t>(v)] = ~adj_[static_cast<size_t>(v)] & vertex_mask() & ~vbit(v);
    return out;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("permutation size mismatch");
    VertexSet seen = 0;
    for (int p : perm) {
        if (p < 0 || p >= n_ || (seen & vbit(p)))
            throw std::invalid_argument("not a permutation");
        seen |= vbit(p);
    }
    Graph out(n_);
    for (int v = 0; v < n_; ++v) {
        for_each_vertex(adj_[static_cast<size_t>(v)], [&](int u) {
            if (u > v) out.add_edge(perm[static_cast<size_t>(v)], perm[static_cast<size_t>(u)]);
        });
    }
    return out;
}

Graph Graph::extended(VertexSet attach) const {
    attach &= vertex_mask();
    Graph out(n_ + 1);
    for (int v = 0; v < n_; ++v) out.adj_[static_cast<size_t>(v)] = adj_[static_cast<size_t>(v)];
    for_each_vertex(attach, [&](int v) { out.add_edge(v, n_); });
    return out;
}

VertexSet Graph::component_of(int v) const {
    check_vertex(v);
    VertexSet reach = vbit(v);
    VertexSet frontier = reach;
    while (frontier) {
        VertexSet next = 0;
        for_each_vertex(frontier, [&](int u) { next |= adj_[static_cast<size_t>(u)]; });
        frontier = next & ~reach;
        reach |= frontier;
    }
    return reach;
}

bool Graph::is_connected() const {
    return component_of(0) == vertex_mask();
}

std::optional<Bipartition> Graph::bipartition() const {
    VertexSet colored = 0, left = 0, right = 0;
    for (int s = 0; s < n_; ++s) {
        if (colored & vbit(s)) continue;
        VertexSet even = vbit(s), odd = 0;
        VertexSet frontier = even;
        bool parity = false;  // frontier currently at even distance from s
        while (frontier) {
            VertexSet next = 0;
            for_each_vertex(frontier, [&](int u) { next |= adj_[static_cast<size_t>(u)]; });
            next &= ~(even | odd);
            parity = !parity;
            (parity ? odd : even) |= next;
            frontier = next;
        }
        VertexSet comp = even | odd;
        // An edge inside either side certifies an odd cycle.
        bool odd_cycle = false;
        for_each_vertex(comp, [&](int u) {
            VertexSet side = (even & vbit(u)) ? even : odd;
            if (adj_[static_cast<size_t>(u)] & side) odd_cycle = true;
        });
        if (odd_cycle) return std::nullopt;
        left |= even;
        right |= odd;
        colored |= comp;
    }
    return Bipartition{left, right};
}

bool Graph::is_even() const {
    for (int v = 0; v < n_; ++v)
        if (degree(v) % 2 != 0) return false;
    return true;
}

bool Graph::is_odd() const {
    for (int v = 0; v < n_; ++v)
        if (degree(v) % 2 == 0) return false;
    return true;
}

Graph lc_sequence(const Graph& g, const std::vector<int>& vertices) {
    Graph out = g;
    for (int v : vertices) out = out.local_complement(v);
    return out;
}

}  // namespace elckit
