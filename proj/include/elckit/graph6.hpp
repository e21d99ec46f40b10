#ifndef ELCKIT_GRAPH6_HPP
#define ELCKIT_GRAPH6_HPP

#include <string>
#include <vector>

#include "elckit/graph.hpp"

namespace elckit {

/// graph6 text encoding for graphs of order 1..62: one header byte (n+63)
/// followed by the upper-triangular adjacency bits in column order, packed
/// six per byte, each byte offset by 63.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);

/// n lines of n characters '0'/'1'; must be symmetric with zero diagonal.
std::string to_adjacency_text(const Graph& g);
Graph from_adjacency_text(const std::string& text);

/// Every non-empty, non-comment ('#') line parsed as graph6.
std::vector<Graph> read_graph6_lines(const std::string& text);

}  // namespace elckit

#endif
