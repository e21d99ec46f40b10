#ifndef ELCKIT_GRAPH_HPP
#define ELCKIT_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace elckit {

using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }
constexpr VertexSet low_mask(int n) {
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}
inline int popcount(VertexSet s) { return std::popcount(s); }
inline int lowest_vertex(VertexSet s) { return std::countr_zero(s); }

/// Iterates the vertices of a set in increasing order.
template <typename Fn>
void for_each_vertex(VertexSet s, Fn&& fn) {
    while (s) {
        int v = std::countr_zero(s);
        s &= s - 1;
        fn(v);
    }
}

/// The two sides of a bipartite graph. `left` always contains vertex 0 of
/// the component it was computed from; see Graph::bipartition().
struct Bipartition {
    VertexSet left = 0;
    VertexSet right = 0;

    int left_size() const { return popcount(left); }
    int right_size() const { return popcount(right); }
    Bipartition swapped() const { return {right, left}; }
};

/// Simple undirected graph on at most 64 vertices, adjacency stored as one
/// bitset row per vertex. Operations never mutate their input; they return
/// fresh graphs.
class Graph {
  public:
    Graph() : n_(0) {}
    explicit Graph(int n) : n_(check_order(n)), adj_(static_cast<size_t>(n), 0) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int order() const { return n_; }
    VertexSet vertex_mask() const { return low_mask(n_); }

    VertexSet neighborhood(int v) const {
        check_vertex(v);
        return adj_[static_cast<size_t>(v)];
    }
    int degree(int v) const { return popcount(neighborhood(v)); }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[static_cast<size_t>(u)] >> v) & 1;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loops are not allowed");
        adj_[static_cast<size_t>(u)] |= vbit(v);
        adj_[static_cast<size_t>(v)] |= vbit(u);
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        adj_[static_cast<size_t>(u)] &= ~vbit(v);
        adj_[static_cast<size_t>(v)] &= ~vbit(u);
    }

    void toggle_edge(int u, int v) {
        if (has_edge(u, v)) remove_edge(u, v); else add_edge(u, v);
    }

    int edge_count() const {
        int total = 0;
        for (VertexSet row : adj_) total += popcount(row);
        return total / 2;
    }

    /// Edges as (u, v) pairs with u < v, in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    std::vector<int> degree_sequence_sorted() const;

    Graph local_complement(int v) const;
    /// ELC on the edge {u,v}: toggle all pairs between the three classes of
    /// vertices adjacent to u only, to v only, and to both, then swap the
    /// labels u and v. Same-edge ELC is an involution.
    Graph elc(int u, int v) const;
    /// ELC computed as g*u*v*u. Equals elc(u,v); kept as a second route.
    Graph elc_via_lc(int u, int v) const;

    Graph induced_subgraph(VertexSet w) const;
    Graph complement() const;
    Graph relabeled(const std::vector<int>& perm) const;
    /// New graph with one extra vertex (label n) adjacent to `attach`.
    Graph extended(VertexSet attach) const;

    bool is_connected() const;
    VertexSet component_of(int v) const;

    /// Two-colouring; for each component the side holding its smallest
    /// vertex goes into `left`. nullopt if some component has an odd cycle.
    std::optional<Bipartition> bipartition() const;
    bool is_bipartite() const { return bipartition().has_value(); }

    bool is_even() const;
    bool is_odd() const;

    bool operator==(const Graph& other) const = default;

  private:
    static int check_order(int n) {
        if (n < 1 || n > kMaxVertices)
            throw std::invalid_argument("graph order must be between 1 and 64, got " +
                                        std::to_string(n));
        return n;
    }
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("vertex " + std::to_string(v) +
                                    " out of range for order " + std::to_string(n_));
    }

    int n_;
    std::vector<VertexSet> adj_;
};

Graph lc_sequence(const Graph& g, const std::vector<int>& vertices);

}  // namespace elckit

#endif
