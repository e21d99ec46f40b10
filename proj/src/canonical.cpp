#include "elckit/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstring>

#include "elckit/graph6.hpp"

namespace elckit {
namespace {

// Ordered partition of the vertices: order[i] is the vertex at position i,
// cells are the position ranges [cell_start[k], cell_start[k+1]).
struct Part {
    int n = 0;
    int num_cells = 0;
    std::array<std::uint8_t, 64> order{};
    std::array<std::uint8_t, 65> cell_start{};

    bool discrete() const { return num_cells == n; }
};

struct Search {
    const Graph* g = nullptr;
    int n = 0;
    std::array<VertexSet, 64> adj{};

    bool have_best = false;
    std::array<VertexSet, 64> best_rows{};
    std::array<std::uint8_t, 64> best_order{};

    std::vector<std::array<std::uint8_t, 64>> generators;
    std::array<std::uint8_t, 64> path{};  // individualized vertices, root first
    int depth = 0;

    using UnionFind = std::array<std::uint8_t, 64>;

    static int uf_find(UnionFind& uf, int x) {
        while (uf[static_cast<size_t>(x)] != x) {
            uf[static_cast<size_t>(x)] = uf[static_cast<size_t>(uf[static_cast<size_t>(x)])];
            x = uf[static_cast<size_t>(x)];
        }
        return x;
    }
    static void uf_union(UnionFind& uf, int a, int b) {
        a = uf_find(uf, a);
        b = uf_find(uf, b);
        if (a != b) uf[static_cast<size_t>(std::max(a, b))] = static_cast<std::uint8_t>(std::min(a, b));
    }

    // Orbits of the subgroup generated by the automorphisms found so far
    // that fix every vertex individualized on the current path.
    void build_orbits(UnionFind& uf) const {
        for (int i = 0; i < n; ++i) uf[static_cast<size_t>(i)] = static_cast<std::uint8_t>(i);
        for (const auto& perm : generators) {
            bool fixes = true;
            for (int d = 0; d < depth && fixes; ++d)
                fixes = perm[path[static_cast<size_t>(d)]] == path[static_cast<size_t>(d)];
            if (!fixes) continue;
            for (int v = 0; v < n; ++v) uf_union(uf, v, perm[static_cast<size_t>(v)]);
        }
    }

    void refine(Part& p) const {
        std::array<VertexSet, 64> mask;
        std::array<std::uint8_t, 64 * 64> keys;
        std::array<std::uint8_t, 64> slice;
        for (;;) {
            for (int c = 0; c < p.num_cells; ++c) {
                VertexSet m = 0;
                for (int i = p.cell_start[static_cast<size_t>(c)]; i < p.cell_start[static_cast<size_t>(c) + 1]; ++i)
                    m |= vbit(p.order[static_cast<size_t>(i)]);
                mask[static_cast<size_t>(c)] = m;
            }
            bool split = false;
            for (int c = 0; c < p.num_cells && !split; ++c) {
                int s = p.cell_start[static_cast<size_t>(c)];
                int e = p.cell_start[static_cast<size_t>(c) + 1];
                if (e - s < 2) continue;
                for (int i = s; i < e; ++i) {
                    VertexSet row = adj[p.order[static_cast<size_t>(i)]];
                    std::uint8_t* key = &keys[static_cast<size_t>(i - s) * static_cast<size_t>(p.num_cells)];
                    for (int d = 0; d < p.num_cells; ++d)
                        key[d] = static_cast<std::uint8_t>(popcount(row & mask[static_cast<size_t>(d)]));
                }
                const size_t klen = static_cast<size_t>(p.num_cells);
                for (int i = 0; i < e - s; ++i) slice[static_cast<size_t>(i)] = static_cast<std::uint8_t>(i);
                std::sort(slice.begin(), slice.begin() + (e - s), [&](std::uint8_t a, std::uint8_t b) {
                    return std::memcmp(&keys[a * klen], &keys[b * klen], klen) < 0;
                });
                bool uniform = std::memcmp(&keys[slice[0] * klen],
                                           &keys[slice[static_cast<size_t>(e - s - 1)] * klen], klen) == 0;
                if (uniform) continue;

                std::array<std::uint8_t, 64> reordered;
                for (int i = 0; i < e - s; ++i)
                    reordered[static_cast<size_t>(i)] = p.order[static_cast<size_t>(s) + slice[static_cast<size_t>(i)]];
                std::array<std::uint8_t, 65> new_start{};
                int nc = 0;
                for (int d = 0; d <= c; ++d) new_start[static_cast<size_t>(nc++)] = p.cell_start[static_cast<size_t>(d)];
                for (int i = 1; i < e - s; ++i)
                    if (std::memcmp(&keys[slice[static_cast<size_t>(i - 1)] * klen],
                                    &keys[slice[static_cast<size_t>(i)] * klen], klen) != 0)
                        new_start[static_cast<size_t>(nc++)] = static_cast<std::uint8_t>(s + i);
                for (int d = c + 1; d <= p.num_cells; ++d)
                    new_start[static_cast<size_t>(nc++)] = p.cell_start[static_cast<size_t>(d)];
                for (int i = 0; i < e - s; ++i)
                    p.order[static_cast<size_t>(s + i)] = reordered[static_cast<size_t>(i)];
                p.cell_start = new_start;
                p.num_cells = nc - 1;
                split = true;
            }
            if (!split) return;
        }
    }

    void visit_leaf(const Part& p) {
        std::array<std::uint8_t, 64> pos;
        for (int i = 0; i < n; ++i) pos[p.order[static_cast<size_t>(i)]] = static_cast<std::uint8_t>(i);
        std::array<VertexSet, 64> rows{};
        for (int i = 0; i < n; ++i) {
            VertexSet r = 0;
            for_each_vertex(adj[p.order[static_cast<size_t>(i)]],
                            [&](int u) { r |= VertexSet{1} << (63 - pos[static_cast<size_t>(u)]); });
            rows[static_cast<size_t>(i)] = r;
        }
        if (!have_best) {
            have_best = true;
            best_rows = rows;
            best_order = p.order;
            return;
        }
        int cmp = 0;
        for (int i = 0; i < n && cmp == 0; ++i) {
            if (rows[static_cast<size_t>(i)] < best_rows[static_cast<size_t>(i)]) cmp = -1;
            else if (rows[static_cast<size_t>(i)] > best_rows[static_cast<size_t>(i)]) cmp = 1;
        }
        if (cmp < 0) {
            best_rows = rows;
            best_order = p.order;
        } else if (cmp == 0 && generators.size() < 128) {
            // Equal leaves compose to an automorphism.
            std::array<std::uint8_t, 64> sigma;
            for (int v = 0; v < n; ++v)
                sigma[static_cast<size_t>(v)] = best_order[pos[static_cast<size_t>(v)]];
            bool identity = true;
            for (int v = 0; v < n && identity; ++v) identity = sigma[static_cast<size_t>(v)] == v;
            if (!identity) generators.push_back(sigma);
        }
    }

    void descend(Part p) {
        refine(p);
        if (p.discrete()) {
            visit_leaf(p);
            return;
        }
        int target = -1, best_size = 65;
        for (int c = 0; c < p.num_cells; ++c) {
            int sz = p.cell_start[static_cast<size_t>(c) + 1] - p.cell_start[static_cast<size_t>(c)];
            if (sz > 1 && sz < best_size) {
                best_size = sz;
                target = c;
            }
        }
        int s = p.cell_start[static_cast<size_t>(target)];
        int e = p.cell_start[static_cast<size_t>(target) + 1];
        std::array<std::uint8_t, 64> members;
        for (int i = s; i < e; ++i) members[static_cast<size_t>(i - s)] = p.order[static_cast<size_t>(i)];

        std::array<std::uint8_t, 64> tried;
        int num_tried = 0;
        UnionFind uf;
        size_t gens_at_build = static_cast<size_t>(-1);
        for (int m = 0; m < e - s; ++m) {
            int v = members[static_cast<size_t>(m)];
            if (num_tried > 0) {
                if (generators.size() != gens_at_build) {
                    build_orbits(uf);
                    gens_at_build = generators.size();
                }
                bool pruned = false;
                for (int t = 0; t < num_tried && !pruned; ++t)
                    pruned = uf_find(uf, v) == uf_find(uf, tried[static_cast<size_t>(t)]);
                if (pruned) continue;
            }
            tried[static_cast<size_t>(num_tried++)] = static_cast<std::uint8_t>(v);

            Part child = p;
            int vpos = s;
            while (child.order[static_cast<size_t>(vpos)] != v) ++vpos;
            for (int i = vpos; i > s; --i)
                child.order[static_cast<size_t>(i)] = child.order[static_cast<size_t>(i) - 1];
            child.order[static_cast<size_t>(s)] = static_cast<std::uint8_t>(v);
            std::array<std::uint8_t, 65> ns{};
            int nc = 0;
            for (int d = 0; d <= target; ++d) ns[static_cast<size_t>(nc++)] = child.cell_start[static_cast<size_t>(d)];
            ns[static_cast<size_t>(nc++)] = static_cast<std::uint8_t>(s + 1);
            for (int d = target + 1; d <= child.num_cells; ++d)
                ns[static_cast<size_t>(nc++)] = child.cell_start[static_cast<size_t>(d)];
            child.cell_start = ns;
            child.num_cells += 1;

            path[static_cast<size_t>(depth++)] = static_cast<std::uint8_t>(v);
            descend(child);
            --depth;
        }
    }
};

std::string invariant_prefix(const Graph& g, const std::vector<VertexSet>& cells) {
    int n = g.order();
    std::string out;
    out.push_back(static_cast<char>(n));
    out.push_back(static_cast<char>(cells.size()));
    for (VertexSet c : cells) out.push_back(static_cast<char>(popcount(c)));
    int edges = g.edge_count();
    out.push_back(static_cast<char>(edges >> 8));
    out.push_back(static_cast<char>(edges & 0xff));
    for (int d : g.degree_sequence_sorted()) out.push_back(static_cast<char>(d));
    std::vector<int> tri(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        int t = 0;
        VertexSet nv = g.neighborhood(v);
        for_each_vertex(nv, [&](int u) { t += popcount(g.neighborhood(u) & nv); });
        tri[static_cast<size_t>(v)] = t / 2;
    }
    std::sort(tri.begin(), tri.end());
    for (int t : tri) {
        out.push_back(static_cast<char>(t >> 8));
        out.push_back(static_cast<char>(t & 0xff));
    }
    out.push_back('|');
    return out;
}

CanonicalForm run_search(const Graph& g, const std::vector<VertexSet>& cells) {
    int n = g.order();
    Search search;
    search.g = &g;
    search.n = n;
    for (int v = 0; v < n; ++v) search.adj[static_cast<size_t>(v)] = g.neighborhood(v);

    Part root;
    root.n = n;
    int pos = 0;
    root.num_cells = 0;
    for (VertexSet c : cells) {
        if (!c) continue;
        root.cell_start[static_cast<size_t>(root.num_cells++)] = static_cast<std::uint8_t>(pos);
        for_each_vertex(c, [&](int v) { root.order[static_cast<size_t>(pos++)] = static_cast<std::uint8_t>(v); });
    }
    if (pos != n) throw std::invalid_argument("colour cells must cover all vertices exactly once");
    root.cell_start[static_cast<size_t>(root.num_cells)] = static_cast<std::uint8_t>(n);

    search.descend(root);

    CanonicalForm cf;
    cf.relabeling.assign(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) cf.relabeling[search.best_order[static_cast<size_t>(i)]] = i;
    cf.g6 = to_graph6(g.relabeled(cf.relabeling));
    cf.bytes = invariant_prefix(g, cells) + cf.g6;
    return cf;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    return run_search(g, {g.vertex_mask()});
}

std::string canonical_bytes_from_g6(const std::string& canonical_g6) {
    Graph g = from_graph6(canonical_g6);
    return invariant_prefix(g, {g.vertex_mask()}) + canonical_g6;
}

CanonicalForm canonical_form_colored(const Graph& g, const std::vector<VertexSet>& cells) {
    VertexSet seen = 0;
    for (VertexSet c : cells) {
        if (c & seen) throw std::invalid_argument("colour cells overlap");
        seen |= c;
    }
    if (seen != g.vertex_mask()) throw std::invalid_argument("colour cells must cover all vertices");
    return run_search(g, cells);
}

bool are_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order()) return false;
    if (g.edge_count() != h.edge_count()) return false;
    if (g.degree_sequence_sorted() != h.degree_sequence_sorted()) return false;
    return canonical_form(g).g6 == canonical_form(h).g6;
}

BipartiteCanonicalForm bipartite_canonical_form(const Graph& g, const Bipartition& p) {
    if ((p.left & p.right) || ((p.left | p.right) != g.vertex_mask()))
        throw std::invalid_argument("bipartition does not partition the vertex set");
    for (int v = 0; v < g.order(); ++v) {
        VertexSet side = (p.left & vbit(v)) ? p.left : p.right;
        if (g.neighborhood(v) & side)
            throw std::invalid_argument("bipartition has an internal edge");
    }
    BipartiteCanonicalForm out;
    out.side_swap_allowed = p.left_size() == p.right_size();
    out.form = canonical_form_colored(g, {p.left, p.right});
    if (out.side_swap_allowed) {
        CanonicalForm other = canonical_form_colored(g, {p.right, p.left});
        if (other.bytes < out.form.bytes) out.form = std::move(other);
    }
    return out;
}

}  // namespace elckit
