#include "elckit/classify.hpp"

#include <algorithm>
#include <map>

#include "elckit/canonical.hpp"
#include "elckit/constructions.hpp"
#include "elckit/errors.hpp"
#include "elckit/graph6.hpp"

namespace elckit {
namespace {

using Spec = ConstructionSpec;

int family_rank(const Spec& spec) {
    using K = Spec::Kind;
    switch (spec.kind()) {
        case K::Star: return 0;
        case K::Complete: return 1;
        case K::Hamming: return 2;
        case K::ExtendedHamming: return 3;
        case K::HammingStar: return 4;
        case K::HammingClique: return 5;
        case K::StarExpand: return spec.plus() ? 7 : 6;
        case K::CliqueExpand: return 8;
        case K::HammingExpand: return 9;
        case K::Empty: return 10;
        case K::Circulant: return 11;
    }
    return 12;
}

struct RankedSpec {
    Spec spec;
    std::string text;

    bool better_than(const RankedSpec& other) const {
        auto key = [](const RankedSpec& r) {
            return std::tuple<int, int, const std::string&>(r.spec.node_count(),
                                                            family_rank(r.spec), r.text);
        };
        return key(*this) < key(other);
    }
};

struct MatchedGraph {
    std::string g6;
    Spec spec;
    bool bipartite;
};

// Candidate expressions for order n, composed over already matched graphs
// of smaller orders.
std::vector<Spec> candidates_for(int n, const std::map<int, std::vector<MatchedGraph>>& matched) {
    using K = Spec::Kind;
    std::vector<Spec> out;
    if (n >= 2) out.push_back(Spec::atom(K::Star, n));
    if (n >= 3) out.push_back(Spec::atom(K::Complete, n));
    for (int r = 3; (1 << r) <= n + 1; ++r) {
        if ((1 << r) - 1 == n) out.push_back(Spec::atom(K::Hamming, r));
        if ((1 << r) == n) {
            out.push_back(Spec::atom(K::ExtendedHamming, r));
            out.push_back(Spec::atom(K::HammingStar, r));
        }
    }
    for (int k = 1; 7 * k < n; ++k) out.push_back(Spec::atom(K::HammingClique, k, n - 7 * k));

    for (int m = 2; m <= n; ++m) {
        if (n % m != 0) continue;
        int q = n / m;
        auto it = matched.find(q);
        if (it == matched.end()) continue;
        for (const MatchedGraph& child : it->second) {
            if (child.bipartite && q >= 2) {
                out.push_back(Spec::star_expand(false, m, child.spec));
                out.push_back(Spec::star_expand(true, m, child.spec));
            }
            out.push_back(Spec::clique_expand(m, child.spec));
        }
    }
    if (n % 7 == 0) {
        auto it = matched.find(n / 7);
        if (it != matched.end())
            for (const MatchedGraph& child : it->second)
                out.push_back(Spec::hamming_expand(child.spec));
    }
    return out;
}

}  // namespace

std::vector<ClassificationEntry> classify_preserved(CensusEngine& engine, int n_bip_max,
                                                    int n_nonbip_max) {
    std::map<int, std::vector<MatchedGraph>> matched;
    std::vector<ClassificationEntry> entries;
    int n_max = std::max(n_bip_max, n_nonbip_max);

    for (int n = 2; n <= n_max; ++n) {
        std::map<std::string, RankedSpec> by_class;
        for (const Spec& spec : candidates_for(n, matched)) {
            Graph g;
            try {
                g = spec.build();
            } catch (const capacity_error&) {
                continue;
            }
            std::string g6 = canonical_form(g).g6;
            RankedSpec ranked{spec, spec.to_string()};
            auto it = by_class.find(g6);
            if (it == by_class.end())
                by_class.emplace(g6, std::move(ranked));
            else if (ranked.better_than(it->second))
                it->second = std::move(ranked);
        }

        auto process = [&](const std::vector<std::string>& discovered, bool bipartite) {
            for (const std::string& g6 : discovered) {
                ClassificationEntry entry;
                entry.n = n;
                entry.bipartite = bipartite;
                entry.g6 = g6;
                if (auto it = by_class.find(g6); it != by_class.end()) {
                    entry.spec = it->second.text;
                    matched[n].push_back({g6, it->second.spec, bipartite});
                }
                entries.push_back(std::move(entry));
            }
        };
        if (n <= n_bip_max) process(engine.preserved_reps(n, GraphClass::Bipartite), true);
        if (n >= 3 && n <= n_nonbip_max)
            process(engine.preserved_reps(n, GraphClass::NonBipartite), false);
    }
    return entries;
}

}  // namespace elckit
