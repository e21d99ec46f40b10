#include "elckit/enumeration.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <unordered_set>

#include "elckit/canonical.hpp"
#include "elckit/constructions.hpp"
#include "elckit/errors.hpp"
#include "elckit/graph6.hpp"
#include "elckit/parallel.hpp"

namespace elckit {
namespace {

constexpr int kGeneralClassCap = 10;
constexpr int kBipartiteClassCap = 12;

int deletion_vertex(const Graph& canon_graph) {
    // Largest canonical label whose removal keeps the graph connected.
    int n = canon_graph.order();
    if (n == 1) throw std::logic_error("no deletable vertex in a one-vertex graph");
    for (int v = n - 1; v >= 0; --v) {
        VertexSet rest = canon_graph.vertex_mask() & ~vbit(v);
        if (canon_graph.induced_subgraph(rest).is_connected()) return v;
    }
    throw std::logic_error("connected graph with no deletable vertex");
}

std::vector<std::string> extend_level(const std::vector<std::string>& parents, bool bipartite_only) {
    std::vector<std::string> out;
    for (const auto& parent_g6 : parents) {
        Graph parent = from_graph6(parent_g6);
        int n = parent.order();
        std::unordered_set<std::string> local;
        std::vector<int> parent_degs = parent.degree_sequence_sorted();
        int parent_edges = parent.edge_count();
        for (VertexSet attach = 1; attach <= low_mask(n); ++attach) {
            Graph child = parent.extended(attach);
            if (bipartite_only && !child.is_bipartite()) continue;
            CanonicalForm cf = canonical_form(child);
            if (local.count(cf.g6)) continue;
            Graph canon_child = from_graph6(cf.g6);
            int del = deletion_vertex(canon_child);
            Graph trimmed = canon_child.induced_subgraph(canon_child.vertex_mask() & ~vbit(del));
            // The candidate survives only if deleting the new vertex is
            // equivalent to deleting the canonical deletion vertex.
            if (trimmed.edge_count() != parent_edges) continue;
            if (trimmed.degree_sequence_sorted() != parent_degs) continue;
            if (canonical_form(trimmed).g6 != parent_g6) continue;
            local.insert(cf.g6);
            out.push_back(cf.g6);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void sort_level(CensusLevel& level) {
    std::vector<std::size_t> idx(level.reps.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return level.reps[a] < level.reps[b]; });
    CensusLevel sorted;
    sorted.n = level.n;
    for (std::size_t i : idx) {
        sorted.reps.push_back(level.reps[i]);
        sorted.sizes.push_back(level.sizes[i]);
        sorted.bipartite.push_back(level.bipartite[i]);
    }
    level = std::move(sorted);
}

}  // namespace

std::size_t CensusLevel::count(std::optional<bool> bip, std::optional<std::size_t> size) const {
    std::size_t total = 0;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (bip && bipartite[i] != *bip) continue;
        if (size && sizes[i] != *size) continue;
        ++total;
    }
    return total;
}

std::vector<std::string> CensusLevel::reps_where(std::optional<bool> bip,
                                                 std::optional<std::size_t> size) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (bip && bipartite[i] != *bip) continue;
        if (size && sizes[i] != *size) continue;
        out.push_back(reps[i]);
    }
    return out;
}

std::vector<std::string> connected_graph_classes(int n, bool bipartite_only, bool deep) {
    CensusEngine::Options opt;
    opt.deep = deep;
    CensusEngine engine(opt);
    return engine.all_classes(n, bipartite_only);
}

std::size_t naive_connected_class_count(int n, bool bipartite_only) {
    if (n < 1 || n > 7) throw capacity_error("the naive oracle is limited to n <= 7");
    if (n == 1) return 1;
    int nedges = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> edge_of(static_cast<size_t>(nedges));
    {
        int idx = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) edge_of[static_cast<size_t>(idx++)] = {u, v};
    }
    std::vector<std::vector<int>> perms;
    {
        std::vector<int> p(static_cast<size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        do {
            perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
    }
    // For each permutation, where each edge slot moves.
    std::vector<std::vector<int>> edge_map(perms.size(), std::vector<int>(static_cast<size_t>(nedges)));
    auto slot = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        return u * (2 * n - u - 1) / 2 + (v - u - 1);
    };
    for (size_t p = 0; p < perms.size(); ++p)
        for (int e = 0; e < nedges; ++e) {
            auto [u, v] = edge_of[static_cast<size_t>(e)];
            edge_map[p][static_cast<size_t>(e)] = slot(perms[p][static_cast<size_t>(u)],
                                                       perms[p][static_cast<size_t>(v)]);
        }

    std::vector<bool> seen(std::size_t{1} << nedges, false);
    std::size_t classes = 0;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << nedges); ++mask) {
        if (seen[mask]) continue;
        Graph g(n);
        for (int e = 0; e < nedges; ++e)
            if ((mask >> e) & 1) g.add_edge(edge_of[static_cast<size_t>(e)].first,
                                            edge_of[static_cast<size_t>(e)].second);
        if (!g.is_connected()) continue;
        if (bipartite_only && !g.is_bipartite()) continue;
        ++classes;
        for (const auto& map : edge_map) {
            std::uint32_t moved = 0;
            for (int e = 0; e < nedges; ++e)
                if ((mask >> e) & 1) moved |= std::uint32_t{1} << map[static_cast<size_t>(e)];
            seen[moved] = true;
        }
    }
    return classes;
}

std::vector<Graph> bipartite_extensions(const Graph& g, const Bipartition& p) {
    std::vector<Graph> out;
    for (VertexSet side : {p.left, p.right})
        for (VertexSet s = side; s != 0; s = (s - 1) & side) out.push_back(g.extended(s));
    return out;
}

std::vector<Graph> all_extensions(const Graph& g) {
    std::vector<Graph> out;
    for (VertexSet s = 1; s <= low_mask(g.order()); ++s) out.push_back(g.extended(s));
    return out;
}

std::vector<SelfDualSurveyRow> self_dual_orbit_survey(
    const std::vector<std::pair<std::string, LinearCode>>& codes) {
    std::vector<SelfDualSurveyRow> rows;
    for (const auto& [label, code] : codes) {
        SelfDualSurveyRow row;
        row.label = label;
        row.n = code.length();
        row.k = code.dimension();
        row.self_dual = is_self_dual(code);
        auto [graph, part] = graph_from_code(code);
        if (!graph.is_connected())
            throw std::invalid_argument("survey requires codes whose graphs are connected: " + label);
        row.orbit_class = classify_orbit_size(graph, OrbitKind::Elc);
        rows.push_back(std::move(row));
    }
    return rows;
}

CensusEngine::CensusEngine(Options options) : options_(std::move(options)) {
    if (!options_.workdir.empty()) std::filesystem::create_directories(options_.workdir);
}

const std::vector<std::string>& CensusEngine::all_classes(int n, bool bipartite_only) {
    auto key = std::make_pair(n, bipartite_only);
    if (auto it = classes_.find(key); it != classes_.end()) return it->second;
    int cap = bipartite_only ? kBipartiteClassCap : kGeneralClassCap;
    if (n < 1 || (!options_.deep && n > cap))
        throw capacity_error("connected graph enumeration capped at n <= " + std::to_string(cap) +
                             " (use deep to override)");
    std::string file = "classes_" + std::string(bipartite_only ? "bip" : "all") + "_" + std::to_string(n) + ".g6";
    std::vector<std::string> result;
    if (!load_lines(file, result)) {
        if (n == 1) {
            result = {canonical_form(Graph(1)).g6};
        } else {
            result = extend_level(all_classes(n - 1, bipartite_only), bipartite_only);
        }
        store_lines(file, result);
    }
    return classes_.emplace(key, std::move(result)).first->second;
}

std::vector<std::string> CensusEngine::extension_seeds(const CensusLevel& prev, bool bipartite_only) {
    std::vector<std::string> seeds;
    auto expand_rep = [&](std::size_t i) {
        Graph g = from_graph6(prev.reps[i]);
        std::vector<Graph> exts;
        if (bipartite_only) {
            auto p = g.bipartition();
            if (!p) throw std::logic_error("non-bipartite representative in bipartite census level");
            exts = bipartite_extensions(g, *p);
        } else {
            exts = all_extensions(g);
        }
        std::vector<std::string> canon;
        canon.reserve(exts.size());
        for (const Graph& e : exts) canon.push_back(canonical_form(e).g6);
        return canon;
    };
    auto batches = parallel_map(prev.reps.size(), options_.jobs, expand_rep);
    for (auto& batch : batches)
        for (auto& s : batch) seeds.push_back(std::move(s));
    return seeds;
}

CensusLevel CensusEngine::partition_classes(int n, const std::vector<std::string>& seeds,
                                            OrbitKind kind, bool seeds_are_whole_universe) {
    CensusLevel level;
    level.n = n;
    std::unordered_set<std::string> seen;
    std::ofstream partial;
    if (!options_.workdir.empty()) {
        std::string partial_name = options_.workdir + "/level_" +
                                   (kind == OrbitKind::Elc ? "elc" : "lc") + "_" +
                                   std::to_string(n) + ".partial";
        partial.open(partial_name, std::ios::app);
    }
    for (const auto& seed : seeds) {
        if (seen.count(seed)) continue;
        Graph g = from_graph6(seed);
        Orbit orbit = kind == OrbitKind::Elc ? elc_orbit(g, options_.orbit_cap, options_.jobs)
                                             : lc_orbit(g, options_.orbit_cap, options_.jobs);
        if (orbit.truncated)
            throw capacity_error("orbit size cap exceeded while partitioning order " + std::to_string(n));
        for (const auto& m : orbit.members) seen.insert(m);
        level.reps.push_back(orbit.members.front());
        level.sizes.push_back(orbit.size());
        level.bipartite.push_back(g.is_bipartite());
        if (partial.is_open())
            partial << orbit.members.front() << '\t' << orbit.size() << '\n' << std::flush;
    }
    if (seeds_are_whole_universe && seen.size() != seeds.size())
        throw std::logic_error("orbit partition escaped its universe at order " + std::to_string(n));
    sort_level(level);
    return level;
}

const CensusLevel& CensusEngine::elc_level(int n, bool bipartite_only) {
    auto key = std::make_pair(n, bipartite_only);
    if (auto it = elc_levels_.find(key); it != elc_levels_.end()) return it->second;
    int cap = bipartite_only ? bipartite_partition_cap() : general_partition_cap();
    int lo = bipartite_only ? 2 : 1;
    if (n < lo || n > cap)
        throw capacity_error("ELC census level " + std::to_string(n) + " outside cap " +
                             std::to_string(cap) + (options_.deep ? "" : " (use deep to raise it)"));
    std::string file = "elc_" + std::string(bipartite_only ? "bip" : "all") + "_" + std::to_string(n) + ".tsv";
    CensusLevel level;
    if (!load_level(file, level)) {
        if (bipartite_only) {
            if (n == 2) {
                level = partition_classes(2, {canonical_form(star_graph(2)).g6}, OrbitKind::Elc, true);
            } else {
                const CensusLevel& prev = elc_level(n - 1, true);
                level = partition_classes(n, extension_seeds(prev, true), OrbitKind::Elc, false);
            }
        } else {
            level = partition_classes(n, all_classes(n, false), OrbitKind::Elc, true);
        }
        level.n = n;
        store_level(file, level);
    }
    return elc_levels_.emplace(key, std::move(level)).first->second;
}

const CensusLevel& CensusEngine::lc_level(int n) {
    if (auto it = lc_levels_.find(n); it != lc_levels_.end()) return it->second;
    if (n < 1 || n > lc_partition_cap())
        throw capacity_error("LC census level " + std::to_string(n) + " outside cap " +
                             std::to_string(lc_partition_cap()));
    std::string file = "lc_all_" + std::to_string(n) + ".tsv";
    CensusLevel level;
    if (!load_level(file, level)) {
        level = partition_classes(n, all_classes(n, false), OrbitKind::Lc, true);
        level.n = n;
        store_level(file, level);
    }
    return lc_levels_.emplace(n, std::move(level)).first->second;
}

const CensusEngine::FrontierMetrics& CensusEngine::elc_frontier(int n, bool bipartite_only) {
    auto key = std::make_pair(n, bipartite_only);
    if (auto it = frontiers_.find(key); it != frontiers_.end()) return it->second;
    const CensusLevel& prev = elc_level(n - 1, bipartite_only);

    struct CandidateResult {
        OrbitSizeClass kind;
        bool bipartite;
        std::string rep;
    };
    auto scan_rep = [&](std::size_t i) {
        Graph g = from_graph6(prev.reps[i]);
        std::vector<Graph> exts;
        if (bipartite_only) {
            auto p = g.bipartition();
            exts = bipartite_extensions(g, *p);
        } else {
            exts = all_extensions(g);
        }
        std::vector<CandidateResult> results;
        for (const Graph& cand : exts) {
            std::string rep;
            OrbitSizeClass kind = classify_orbit_size(cand, OrbitKind::Elc, &rep);
            if (kind != OrbitSizeClass::Larger)
                results.push_back({kind, cand.is_bipartite(), std::move(rep)});
        }
        return results;
    };
    auto batches = parallel_map(prev.reps.size(), options_.jobs, scan_rep);

    std::unordered_set<std::string> pb, pn, sb, sn;
    for (const auto& batch : batches)
        for (const auto& r : batch) {
            auto& target = r.kind == OrbitSizeClass::One ? (r.bipartite ? pb : pn)
                                                     : (r.bipartite ? sb : sn);
            target.insert(r.rep);
        }
    FrontierMetrics metrics;
    auto sorted = [](std::unordered_set<std::string>& s) {
        std::vector<std::string> v(s.begin(), s.end());
        std::sort(v.begin(), v.end());
        return v;
    };
    metrics.preserved_bip = sorted(pb);
    metrics.preserved_nonbip = sorted(pn);
    metrics.size_two_bip = sorted(sb);
    metrics.size_two_nonbip = sorted(sn);
    return frontiers_.emplace(key, std::move(metrics)).first->second;
}

std::size_t CensusEngine::lc_size_two_frontier(int n) {
    if (auto it = lc_frontiers_.find(n); it != lc_frontiers_.end()) return it->second;
    const CensusLevel& prev = lc_level(n - 1);
    auto scan_rep = [&](std::size_t i) {
        Graph g = from_graph6(prev.reps[i]);
        std::vector<std::string> results;
        for (const Graph& cand : all_extensions(g)) {
            std::string rep;
            if (classify_orbit_size(cand, OrbitKind::Lc, &rep) == OrbitSizeClass::Two)
                results.push_back(std::move(rep));
        }
        return results;
    };
    auto batches = parallel_map(prev.reps.size(), options_.jobs, scan_rep);
    std::unordered_set<std::string> reps;
    for (const auto& batch : batches) reps.insert(batch.begin(), batch.end());
    return lc_frontiers_.emplace(n, reps.size()).first->second;
}

std::size_t CensusEngine::orbit_count(int n, GraphClass cls) {
    if (cls == GraphClass::Bipartite) return elc_level(n, true).count(std::nullopt, std::nullopt);
    return elc_level(n, false).count(false, std::nullopt);
}

std::size_t CensusEngine::preserved_count(int n, GraphClass cls) {
    return preserved_reps(n, cls).size();
}

std::vector<std::string> CensusEngine::preserved_reps(int n, GraphClass cls) {
    if (cls == GraphClass::Bipartite) {
        if (n == 2) return elc_level(2, true).reps_where(std::nullopt, 1);
        return elc_frontier(n, true).preserved_bip;
    }
    if (n < 3) return {};
    return elc_frontier(n, false).preserved_nonbip;
}

std::size_t CensusEngine::size_two_count(int n, SizeTwoClass cls) {
    switch (cls) {
        case SizeTwoClass::Bipartite:
            return n <= 2 ? 0 : elc_frontier(n, true).size_two_bip.size();
        case SizeTwoClass::NonBipartite:
            return n <= 2 ? 0 : elc_frontier(n, false).size_two_nonbip.size();
        case SizeTwoClass::Lc:
            return n <= 1 ? 0 : lc_size_two_frontier(n);
    }
    throw std::logic_error("unreachable size-two class");
}

bool CensusEngine::load_level(const std::string& name, CensusLevel& out) const {
    if (options_.workdir.empty()) return false;
    std::ifstream in(options_.workdir + "/" + name);
    if (!in) return false;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos) return false;
        out.reps.push_back(line.substr(0, tab));
        out.sizes.push_back(std::stoull(line.substr(tab + 1)));
        out.bipartite.push_back(from_graph6(out.reps.back()).is_bipartite());
    }
    return !out.reps.empty();
}

void CensusEngine::store_level(const std::string& name, const CensusLevel& level) const {
    if (options_.workdir.empty()) return;
    std::string path = options_.workdir + "/" + name;
    std::string tmp = path + ".tmp";
    {
        std::ofstream outf(tmp);
        for (std::size_t i = 0; i < level.reps.size(); ++i)
            outf << level.reps[i] << '\t' << level.sizes[i] << '\n';
    }
    std::filesystem::rename(tmp, path);
}

bool CensusEngine::load_lines(const std::string& name, std::vector<std::string>& out) const {
    if (options_.workdir.empty()) return false;
    std::ifstream in(options_.workdir + "/" + name);
    if (!in) return false;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) out.push_back(line);
    return !out.empty();
}

void CensusEngine::store_lines(const std::string& name, const std::vector<std::string>& lines) const {
    if (options_.workdir.empty()) return;
    std::string path = options_.workdir + "/" + name;
    std::string tmp = path + ".tmp";
    {
        std::ofstream outf(tmp);
        for (const auto& l : lines) outf << l << '\n';
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace elckit
