#ifndef ELCKIT_CONSTRUCTIONS_HPP
#define ELCKIT_CONSTRUCTIONS_HPP

#include <memory>
#include <string>
#include <vector>

#include "elckit/graph.hpp"

namespace elckit {

Graph empty_graph(int n);
Graph star_graph(int n);      // n >= 2; centre is vertex 0
Graph complete_graph(int n);  // n >= 3

/// Replaces vertex v of g by the graph h; h's vertices inherit v's
/// adjacency outside h. Result labels: 0..v-1, then h's vertices, then the
/// remaining vertices of g in order.
Graph substitute(const Graph& g, int v, const Graph& h);

/// Adds one new vertex (label g.order()) adjacent only to v.
Graph add_pendant(const Graph& g, int v);

enum class Side { Left, Right };

/// Substitutes every vertex of the chosen side with the empty graph on m
/// vertices and adds m-1 pendants to every vertex of the other side.
/// Output labels: original vertex v occupies the block [v*m, (v+1)*m); a
/// kept vertex sits at v*m followed by its pendants.
Graph star_expansion(const Graph& g, const Bipartition& p, Side substituted, int m);

/// Substitutes every vertex with the complete graph on m vertices; block
/// layout as in star_expansion.
Graph clique_expansion(const Graph& g, int m);

/// Bipartite graph of the length 2^r-1 Hamming code: one side is
/// U = {0..r-1}; the other side's vertices are the subsets of U of size at
/// least two, ordered by (size, lexicographic), each adjacent to its
/// elements.
Graph hamming_graph(int r);

/// hamming_graph(r) plus one vertex adjacent to every even-degree vertex.
Graph extended_hamming_graph(int r);

/// The labelled 7-vertex block used by hamming_expansion; isomorphic to
/// hamming_graph(3).
Graph hamming_block();

/// Replaces every vertex i by a 7-vertex block on {7i..7i+6} and joins
/// {7i,7i+1,7i+2} completely to {7j,7j+1,7j+2} for every edge {i,j}.
Graph hamming_expansion(const Graph& g);

/// Union of hamming_expansion of a k-clique with an m-clique joined to all
/// block vertices 7i, 7i+1, 7i+2.
Graph hamming_clique_expansion(int k, int m);

/// LC applied to all r+1 vertices of the small side of
/// extended_hamming_graph(r), in ascending label order.
Graph h_star(int r);

/// (2m,2m)-bipartite graph with an edge {v_i, w_j} exactly when i != j;
/// its ELC orbit has size two. Requires m >= 3.
Graph circulant_size_two(int m);

/// Expression over the named constructions. Text grammar: atoms e<n>,
/// s<n>, c<n>, h<r>, he<r>, hstar<r>, Hkm(<k>,<m>), circ(<m>); operators
/// S+<m>(...), S-<m>(...), C<m>(...), H(...).
class ConstructionSpec {
  public:
    enum class Kind { Empty, Star, Complete, Hamming, ExtendedHamming, HammingStar,
                      HammingClique, Circulant, StarExpand, CliqueExpand, HammingExpand };

    static ConstructionSpec parse(const std::string& text);

    static ConstructionSpec atom(Kind kind, int a, int b = 0);
    static ConstructionSpec star_expand(bool plus, int m, ConstructionSpec child);
    static ConstructionSpec clique_expand(int m, ConstructionSpec child);
    static ConstructionSpec hamming_expand(ConstructionSpec child);

    Kind kind() const { return kind_; }
    int param_a() const { return a_; }
    int param_b() const { return b_; }
    bool plus() const { return plus_; }
    const ConstructionSpec& child() const;

    std::string to_string() const;
    int node_count() const;

    /// Evaluates the expression. With strict=true the star, clique and
    /// Hamming expansions require their argument to be ELC-preserved.
    Graph build(bool strict = false) const;

  private:
    ConstructionSpec() = default;
    Kind kind_ = Kind::Empty;
    int a_ = 0;
    int b_ = 0;
    bool plus_ = false;
    std::shared_ptr<const ConstructionSpec> child_;
};

/// Convenience: parse + build.
Graph build_construction(const std::string& text, bool strict = false);

}  // namespace elckit

#endif
