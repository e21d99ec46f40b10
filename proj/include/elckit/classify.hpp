#ifndef ELCKIT_CLASSIFY_HPP
#define ELCKIT_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "elckit/enumeration.hpp"

namespace elckit {

struct ClassificationEntry {
    int n = 0;
    bool bipartite = false;
    std::string g6;                   // canonical graph6 of the discovered graph
    std::optional<std::string> spec;  // matching construction, or nullopt
};

/// Matches every discovered ELC-preserved graph (bipartite orders
/// 2..n_bip_max, non-bipartite 3..n_nonbip_max) against the candidate
/// constructions: the named families plus star, clique and Hamming
/// expansions of smaller matched graphs. When several expressions build
/// the same class the structurally simplest one is reported.
std::vector<ClassificationEntry> classify_preserved(CensusEngine& engine, int n_bip_max,
                                                    int n_nonbip_max);

}  // namespace elckit

#endif
