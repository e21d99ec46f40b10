#include "elckit/orbit.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_set>

#include "elckit/errors.hpp"
#include "elckit/graph6.hpp"
#include "elckit/parallel.hpp"

namespace elckit {
namespace {

std::vector<std::string> expand_member(const std::string& g6, OrbitKind kind) {
    Graph h = from_graph6(g6);
    std::vector<std::string> out;
    if (kind == OrbitKind::Elc) {
        for (auto [u, v] : h.edges()) out.push_back(canonical_form(h.elc(u, v)).g6);
    } else {
        for (int v = 0; v < h.order(); ++v)
            out.push_back(canonical_form(h.local_complement(v)).g6);
    }
    return out;
}

Orbit generate_orbit(const Graph& g, OrbitKind kind, std::optional<std::size_t> cap, int jobs) {
    if (!g.is_connected())
        throw std::invalid_argument("orbit generation requires a connected graph");
    std::size_t limit = cap.value_or(default_orbit_cap());

    Orbit orbit;
    orbit.kind = kind;
    std::unordered_set<std::string> seen;
    std::vector<std::string> frontier{canonical_form(g).g6};
    seen.insert(frontier.front());

    while (!frontier.empty() && !orbit.truncated) {
        auto batches = parallel_map(frontier.size(), jobs, [&](std::size_t i) {
            return expand_member(frontier[i], kind);
        });
        std::vector<std::string> next;
        for (const auto& batch : batches) {
            for (const auto& m : batch) {
                if (seen.insert(m).second) {
                    next.push_back(m);
                    if (seen.size() > limit) {
                        orbit.truncated = true;
                        break;
                    }
                }
            }
            if (orbit.truncated) break;
        }
        frontier = std::move(next);
    }

    orbit.members.assign(seen.begin(), seen.end());
    std::sort(orbit.members.begin(), orbit.members.end());
    std::string best_bytes;
    for (const auto& m : orbit.members) {
        std::string bytes = canonical_bytes_from_g6(m);
        if (best_bytes.empty() || bytes < best_bytes) {
            best_bytes = std::move(bytes);
            orbit.representative = m;
        }
    }
    return orbit;
}

}  // namespace

std::size_t default_orbit_cap() {
    if (const char* env = std::getenv("ELC_ORBIT_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        throw std::invalid_argument("ELC_ORBIT_CAP must be a positive integer");
    }
    return 10'000'000;
}

Orbit elc_orbit(const Graph& g, std::optional<std::size_t> cap, int jobs) {
    return generate_orbit(g, OrbitKind::Elc, cap, jobs);
}

Orbit lc_orbit(const Graph& g, std::optional<std::size_t> cap, int jobs) {
    return generate_orbit(g, OrbitKind::Lc, cap, jobs);
}

bool is_elc_preserved(const Graph& g, std::pair<int, int>* witness) {
    if (!g.is_connected())
        throw std::invalid_argument("ELC-preservation is defined for connected graphs");
    int edge_count = g.edge_count();
    std::vector<int> degrees = g.degree_sequence_sorted();
    std::string canon;
    for (auto [u, v] : g.edges()) {
        Graph h = g.elc(u, v);
        bool same = h.edge_count() == edge_count && h.degree_sequence_sorted() == degrees;
        if (same) {
            if (canon.empty()) canon = canonical_form(g).g6;
            same = canonical_form(h).g6 == canon;
        }
        if (!same) {
            if (witness) *witness = {u, v};
            return false;
        }
    }
    return true;
}

bool is_elc_preserved(const Graph& g) { return is_elc_preserved(g, nullptr); }

bool is_lc_preserved(const Graph& g) {
    if (!g.is_connected())
        throw std::invalid_argument("LC-preservation is defined for connected graphs");
    int edge_count = g.edge_count();
    std::vector<int> degrees = g.degree_sequence_sorted();
    std::string canon;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) <= 1) continue;  // nothing to complement
        Graph h = g.local_complement(v);
        bool same = h.edge_count() == edge_count && h.degree_sequence_sorted() == degrees;
        if (same) {
            if (canon.empty()) canon = canonical_form(g).g6;
            same = canonical_form(h).g6 == canon;
        }
        if (!same) return false;
    }
    return true;
}

namespace {

struct MemberInfo {
    std::string g6;
    int edges = 0;
    std::vector<int> degrees;
};

MemberInfo member_info(const Graph& g, std::string g6) {
    return {std::move(g6), g.edge_count(), g.degree_sequence_sorted()};
}

}  // namespace

OrbitSizeClass classify_orbit_size(const Graph& g, OrbitKind kind, std::string* rep_out) {
    std::vector<MemberInfo> members;
    members.push_back(member_info(g, canonical_form(g).g6));

    // Returns false once a third orbit member is certain. Cheap invariants
    // settle most pivots without a canonical form.
    auto absorb = [&](const Graph& h) {
        int edges = h.edge_count();
        std::vector<int> degs;
        bool have_degs = false;
        for (const auto& m : members) {
            if (m.edges != edges) continue;
            if (!have_degs) {
                degs = h.degree_sequence_sorted();
                have_degs = true;
            }
            if (m.degrees != degs) continue;
            std::string canon = canonical_form(h).g6;
            for (const auto& m2 : members)
                if (m2.g6 == canon) return true;
            if (members.size() == 2) return false;
            members.push_back({std::move(canon), edges, std::move(degs)});
            return true;
        }
        if (members.size() == 2) return false;
        members.push_back(member_info(h, canonical_form(h).g6));
        return true;
    };

    auto expand = [&](const MemberInfo& m) {
        Graph h = from_graph6(m.g6);
        if (kind == OrbitKind::Elc) {
            for (auto [u, v] : h.edges())
                if (!absorb(h.elc(u, v))) return false;
        } else {
            for (int v = 0; v < h.order(); ++v)
                if (!absorb(h.local_complement(v))) return false;
        }
        return true;
    };

    if (!expand(members[0])) return OrbitSizeClass::Larger;
    if (members.size() == 1) {
        if (rep_out) *rep_out = members[0].g6;
        return OrbitSizeClass::One;
    }
    MemberInfo second = members[1];
    if (!expand(second)) return OrbitSizeClass::Larger;
    if (members.size() != 2) return OrbitSizeClass::Larger;
    if (rep_out) *rep_out = std::min(members[0].g6, members[1].g6);
    return OrbitSizeClass::Two;
}

std::vector<Orbit> partition_lc_orbit(const Graph& g) {
    Orbit lc = lc_orbit(g);
    if (lc.truncated) throw capacity_error("LC orbit exceeded the size cap; cannot partition");
    std::unordered_set<std::string> remaining(lc.members.begin(), lc.members.end());
    std::vector<Orbit> parts;
    for (const auto& m : lc.members) {
        if (!remaining.count(m)) continue;
        Orbit part = elc_orbit(from_graph6(m));
        for (const auto& x : part.members) {
            if (!remaining.erase(x) && std::find(lc.members.begin(), lc.members.end(), x) == lc.members.end())
                throw std::logic_error("ELC orbit member escaped the enclosing LC orbit");
        }
        parts.push_back(std::move(part));
    }
    return parts;
}

}  // namespace elckit
