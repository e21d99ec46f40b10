#ifndef ELCKIT_ORBIT_HPP
#define ELCKIT_ORBIT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "elckit/canonical.hpp"
#include "elckit/graph.hpp"

namespace elckit {

enum class OrbitKind { Elc, Lc };

/// Set of non-isomorphic graphs reachable by finite sequences of the
/// operation, each stored as its canonical graph6 string.
struct Orbit {
    OrbitKind kind = OrbitKind::Elc;
    std::vector<std::string> members;  // sorted canonical graph6 strings
    std::string representative;       // member with minimal canonical bytes
    bool truncated = false;

    std::size_t size() const { return members.size(); }
};

/// Default member cap for orbit generation; ELC_ORBIT_CAP overrides.
std::size_t default_orbit_cap();

Orbit elc_orbit(const Graph& g, std::optional<std::size_t> cap = std::nullopt, int jobs = 1);
Orbit lc_orbit(const Graph& g, std::optional<std::size_t> cap = std::nullopt, int jobs = 1);

bool is_elc_preserved(const Graph& g);
/// As above; on failure also reports the first edge (in lexicographic
/// order) whose ELC leaves the isomorphism class.
bool is_elc_preserved(const Graph& g, std::pair<int, int>* witness);

bool is_lc_preserved(const Graph& g);

/// Splits the LC orbit of g into its ELC orbits. The parts are pairwise
/// disjoint and their union is exactly lc_orbit(g).
std::vector<Orbit> partition_lc_orbit(const Graph& g);

enum class OrbitSizeClass { One, Two, Larger };

/// Decides whether the orbit has size 1, 2, or more while generating as
/// little of it as possible; a third member stops the search immediately.
/// For sizes 1 and 2, rep_out (if given) receives the lexicographically
/// smallest member.
OrbitSizeClass classify_orbit_size(const Graph& g, OrbitKind kind, std::string* rep_out = nullptr);

}  // namespace elckit

#endif
