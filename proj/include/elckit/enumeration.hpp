#ifndef ELCKIT_ENUMERATION_HPP
#define ELCKIT_ENUMERATION_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "elckit/codes.hpp"
#include "elckit/graph.hpp"
#include "elckit/orbit.hpp"

namespace elckit {

/// One canonical graph6 string per isomorphism class of connected graphs
/// of order n, sorted. Generated by vertex extension with canonical-parent
/// rejection. Default caps: n <= 10 (general), n <= 12 (bipartite-only);
/// deep overrides them.
std::vector<std::string> connected_graph_classes(int n, bool bipartite_only, bool deep = false);

/// Independent small-n oracle: counts connected isomorphism classes by
/// scanning every labelled graph and flooding each class through all n!
/// relabelings. n <= 7.
std::size_t naive_connected_class_count(int n, bool bipartite_only = false);

/// All one-vertex extensions of a bipartite graph that stay bipartite: the
/// new vertex attaches to a non-empty subset of one side (2^a + 2^b - 2
/// candidates).
std::vector<Graph> bipartite_extensions(const Graph& g, const Bipartition& p);

/// All 2^n - 1 one-vertex extensions.
std::vector<Graph> all_extensions(const Graph& g);

enum class GraphClass { Bipartite, NonBipartite };
enum class SizeTwoClass { Bipartite, NonBipartite, Lc };

struct SelfDualSurveyRow {
    std::string label;
    int n = 0, k = 0;
    bool self_dual = false;
    OrbitSizeClass orbit_class = OrbitSizeClass::Larger;
};

/// ELC orbit size class (1, 2, or more) of the graphs behind the given
/// codes, together with their self-duality.
std::vector<SelfDualSurveyRow> self_dual_orbit_survey(
    const std::vector<std::pair<std::string, LinearCode>>& codes);

/// Orbit partition of the connected graphs of one order: representatives
/// (sorted canonical graph6), orbit sizes, and bipartiteness flags.
struct CensusLevel {
    int n = 0;
    std::vector<std::string> reps;
    std::vector<std::size_t> sizes;
    std::vector<bool> bipartite;

    std::size_t count(std::optional<bool> bip, std::optional<std::size_t> size) const;
    std::vector<std::string> reps_where(std::optional<bool> bip, std::optional<std::size_t> size) const;
};

/// Orders the census routes: ELC orbit partitions of all (or all
/// bipartite) connected graphs per order, plus the cheaper edge-of-cap
/// "frontier" metrics that only test extension candidates for small
/// orbits. Levels are memoized and optionally checkpointed to a work
/// directory.
class CensusEngine {
  public:
    struct Options {
        bool deep = false;
        int jobs = 1;
        std::string workdir;                      // empty: no checkpoints
        std::optional<std::size_t> orbit_cap;
    };

    CensusEngine() : CensusEngine(Options()) {}
    explicit CensusEngine(Options options);

    const std::vector<std::string>& all_classes(int n, bool bipartite_only);
    const CensusLevel& elc_level(int n, bool bipartite_only);
    const CensusLevel& lc_level(int n);

    std::size_t orbit_count(int n, GraphClass cls);
    std::size_t preserved_count(int n, GraphClass cls);
    std::vector<std::string> preserved_reps(int n, GraphClass cls);
    std::size_t size_two_count(int n, SizeTwoClass cls);

    int bipartite_partition_cap() const { return options_.deep ? 13 : 11; }
    int general_partition_cap() const { return options_.deep ? 9 : 8; }
    int lc_partition_cap() const { return options_.deep ? 9 : 8; }

    const Options& options() const { return options_; }

  private:
    struct FrontierMetrics {
        std::vector<std::string> preserved_bip, preserved_nonbip;
        std::vector<std::string> size_two_bip, size_two_nonbip;
    };

    const FrontierMetrics& elc_frontier(int n, bool bipartite_only);
    std::size_t lc_size_two_frontier(int n);

    CensusLevel partition_classes(int n, const std::vector<std::string>& seeds, OrbitKind kind,
                                  bool seeds_are_whole_universe);
    std::vector<std::string> extension_seeds(const CensusLevel& prev, bool bipartite_only);

    bool load_level(const std::string& name, CensusLevel& out) const;
    void store_level(const std::string& name, const CensusLevel& level) const;
    bool load_lines(const std::string& name, std::vector<std::string>& out) const;
    void store_lines(const std::string& name, const std::vector<std::string>& lines) const;

    Options options_;
    std::map<std::pair<int, bool>, std::vector<std::string>> classes_;
    std::map<std::pair<int, bool>, CensusLevel> elc_levels_;
    std::map<int, CensusLevel> lc_levels_;
    std::map<std::pair<int, bool>, FrontierMetrics> frontiers_;
    std::map<int, std::size_t> lc_frontiers_;
};

}  // namespace elckit

#endif
