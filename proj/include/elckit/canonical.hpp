#ifndef ELCKIT_CANONICAL_HPP
#define ELCKIT_CANONICAL_HPP

#include <string>
#include <vector>

#include "elckit/graph.hpp"

namespace elckit {

/// Certificate of an isomorphism class: two graphs have equal `bytes` (and
/// equal `g6`) exactly when they are isomorphic. `relabeling` maps input
/// labels to canonical labels, so g.relabeled(relabeling) is the graph
/// encoded by `g6`.
struct CanonicalForm {
    std::string bytes;           // invariant prefix + canonical graph6
    std::string g6;              // canonical graph6 alone
    std::vector<int> relabeling;

    bool operator==(const CanonicalForm& other) const { return bytes == other.bytes; }
    bool operator<(const CanonicalForm& other) const { return bytes < other.bytes; }
};

CanonicalForm canonical_form(const Graph& g);

/// Rebuilds the full `bytes` certificate from a canonical graph6 string
/// without repeating the labeling search.
std::string canonical_bytes_from_g6(const std::string& canonical_g6);

/// Canonical form under permutations that preserve each cell of the given
/// ordered partition. Cells must be disjoint and cover all vertices; the
/// canonical labels of cell k precede those of cell k+1.
CanonicalForm canonical_form_colored(const Graph& g, const std::vector<VertexSet>& cells);

bool are_isomorphic(const Graph& g, const Graph& h);

struct BipartiteCanonicalForm {
    CanonicalForm form;          // minimum over the permitted orientations
    bool side_swap_allowed;      // true iff the two sides have equal size
};

/// Canonical form under isomorphisms preserving {left,right} as a set
/// partition; when the sides have equal size the exchanged orientation is
/// also permitted and the lexicographically smaller form wins.
BipartiteCanonicalForm bipartite_canonical_form(const Graph& g, const Bipartition& p);

}  // namespace elckit

#endif
