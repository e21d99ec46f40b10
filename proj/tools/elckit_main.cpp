#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "elckit/canonical.hpp"
#include "elckit/classify.hpp"
#include "elckit/codes.hpp"
#include "elckit/constructions.hpp"
#include "elckit/enumeration.hpp"
#include "elckit/errors.hpp"
#include "elckit/graph6.hpp"
#include "elckit/orbit.hpp"
#include "selfcheck.hpp"

namespace {

using json = nlohmann::json;
using namespace elckit;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitInternal = 4;

std::string read_input_text(const std::string& arg) {
    if (std::filesystem::exists(arg) && std::filesystem::is_regular_file(arg)) {
        std::ifstream in(arg);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    return arg;
}

std::vector<std::string> nonempty_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty() && line[0] != '#') out.push_back(line);
    }
    return out;
}

bool looks_like_binary_rows(const std::vector<std::string>& lines) {
    if (lines.empty()) return false;
    for (const auto& l : lines)
        for (char c : l)
            if (c != '0' && c != '1') return false;
    return true;
}

/// Graphs from a positional argument or file: construction spec,
/// adjacency text, or graph6 (one per line). `format` may force one.
std::vector<Graph> parse_graphs(const std::string& arg, const std::string& format, bool strict) {
    std::string text = read_input_text(arg);
    auto lines = nonempty_lines(text);
    if (lines.empty()) throw std::invalid_argument("empty graph input");

    std::string fmt = format;
    if (fmt == "auto") {
        bool spec_ok = true;
        try {
            ConstructionSpec::parse(lines[0]);
        } catch (const std::exception&) {
            spec_ok = false;
        }
        if (spec_ok && lines.size() == 1)
            fmt = "spec";
        else if (looks_like_binary_rows(lines) && lines.size() == lines[0].size())
            fmt = "adj";
        else
            fmt = "g6";
    }
    if (fmt == "spec") {
        std::vector<Graph> out;
        for (const auto& l : lines) out.push_back(build_construction(l, strict));
        return out;
    }
    if (fmt == "adj") return {from_adjacency_text(text)};
    std::vector<Graph> out;
    for (const auto& l : lines) out.push_back(from_graph6(l));
    return out;
}

Side parse_side(const std::string& side, const Bipartition& p) {
    if (side == "left") return Side::Left;
    if (side == "right") return Side::Right;
    bool left_is_large = p.left_size() >= p.right_size();
    if (side == "large") return left_is_large ? Side::Left : Side::Right;
    return left_is_large ? Side::Right : Side::Left;  // "small"
}

json report_to_json(const CodeReport& report) {
    json j;
    j["n"] = report.n;
    j["k"] = report.k;
    j["d"] = report.d ? json(*report.d) : json(nullptr);
    j["dual"] = {{"n", report.n},
                 {"k", report.n - report.k},
                 {"d", report.dual_d ? json(*report.dual_d) : json(nullptr)}};
    j["self_dual"] = report.self_dual;
    j["isodual"] = report.isodual ? json(*report.isodual) : json(nullptr);
    if (report.weights) j["weight_distribution"] = *report.weights;
    return j;
}

const char* orbit_class_name(OrbitSizeClass c) {
    switch (c) {
        case OrbitSizeClass::One: return "1";
        case OrbitSizeClass::Two: return "2";
        case OrbitSizeClass::Larger: return ">2";
    }
    return "?";
}

int cmd_orbit(const std::string& input, const std::string& format, const std::string& kind_name,
              std::optional<std::size_t> cap, int jobs, const std::string& dump) {
    OrbitKind kind = kind_name == "lc" ? OrbitKind::Lc : OrbitKind::Elc;
    bool truncated_any = false;
    for (const Graph& g : parse_graphs(input, format, false)) {
        Orbit orbit = kind == OrbitKind::Elc ? elc_orbit(g, cap, jobs) : lc_orbit(g, cap, jobs);
        truncated_any |= orbit.truncated;
        if (dump == "-") {
            for (const auto& m : orbit.members) std::cout << m << '\n';
            continue;
        }
        if (!dump.empty()) {
            std::ofstream out(dump);
            for (const auto& m : orbit.members) out << m << '\n';
        }
        json summary = {{"kind", kind == OrbitKind::Elc ? "elc" : "lc"},
                        {"size", orbit.size()},
                        {"representative", orbit.representative},
                        {"truncated", orbit.truncated}};
        std::cout << summary.dump() << '\n';
    }
    return truncated_any ? kExitCapacity : kExitOk;
}

int cmd_preserved(const std::string& input, const std::string& format) {
    for (const Graph& g : parse_graphs(input, format, false)) {
        std::pair<int, int> witness{-1, -1};
        if (is_elc_preserved(g, &witness))
            std::cout << "true\n";
        else
            std::cout << "false witness={" << witness.first << "," << witness.second << "}\n";
    }
    return kExitOk;
}

int cmd_construct(const std::string& spec, bool strict, const std::string& output) {
    Graph g = build_construction(spec, strict);
    if (output == "adj")
        std::cout << to_adjacency_text(g);
    else
        std::cout << to_graph6(g) << '\n';
    return kExitOk;
}

int cmd_code(const std::string& input, const std::string& format, const std::string& side_name,
             bool as_matrix, bool survey, std::optional<std::size_t> cap) {
    std::vector<std::pair<std::string, LinearCode>> codes;
    std::string text = read_input_text(input);
    auto lines = nonempty_lines(text);
    bool binary_rows = looks_like_binary_rows(lines);
    if (as_matrix || (format == "auto" && binary_rows && !lines.empty() &&
                      lines.size() != lines[0].size())) {
        codes.emplace_back("matrix", LinearCode(BitMatrix::from_text(text)));
    } else {
        int index = 0;
        for (const Graph& g : parse_graphs(input, format, false)) {
            auto p = g.bipartition();
            if (!p) throw std::invalid_argument("code extraction needs a bipartite graph");
            Side side = parse_side(side_name, *p);
            codes.emplace_back("graph" + std::to_string(index++), code_from_graph(g, *p, side));
        }
    }
    if (survey) {
        std::cout << "label,n,k,self_dual,elc_orbit_class\n";
        for (const auto& row : self_dual_orbit_survey(codes))
            std::cout << row.label << ',' << row.n << ',' << row.k << ','
                      << (row.self_dual ? "true" : "false") << ','
                      << orbit_class_name(row.orbit_class) << '\n';
        return kExitOk;
    }
    for (const auto& [label, code] : codes) {
        auto [g, p] = graph_from_code(code);
        if (!g.is_connected())
            throw std::invalid_argument("code report needs a connected graph (" + label + ")");
        std::cout << report_to_json(code_report(g, p, Side::Left, cap)).dump() << '\n';
    }
    return kExitOk;
}

int cmd_census(const std::string& cls, const std::string& metric, int from, int to,
               CensusEngine::Options options) {
    CensusEngine engine(options);
    std::vector<std::string> metrics;
    if (metric == "all") {
        if (cls == "lc")
            metrics = {"size-two"};
        else
            metrics = {"orbits", "preserved", "size-two"};
    } else {
        metrics = {metric};
    }
    if (cls == "lc" && (metrics.size() != 1 || metrics[0] != "size-two"))
        throw std::invalid_argument("the lc class only supports the size-two metric");

    auto column = [&](const std::string& m) {
        std::string head = m == "size-two" ? "size_two" : m;
        return head + "_" + cls;
    };
    std::cout << "n";
    for (const auto& m : metrics) std::cout << ',' << column(m);
    std::cout << '\n';
    for (int n = from; n <= to; ++n) {
        std::cout << n;
        for (const auto& m : metrics) {
            std::size_t value = 0;
            if (cls == "lc") {
                value = engine.size_two_count(n, SizeTwoClass::Lc);
            } else {
                GraphClass gc = cls == "bipartite" ? GraphClass::Bipartite : GraphClass::NonBipartite;
                if (m == "orbits") value = engine.orbit_count(n, gc);
                else if (m == "preserved") value = engine.preserved_count(n, gc);
                else value = engine.size_two_count(n, gc == GraphClass::Bipartite
                                                          ? SizeTwoClass::Bipartite
                                                          : SizeTwoClass::NonBipartite);
            }
            std::cout << ',' << value;
        }
        std::cout << '\n';
        std::cout.flush();
    }
    return kExitOk;
}

int cmd_classify(int bip_max, int nonbip_max, CensusEngine::Options options) {
    CensusEngine engine(options);
    auto entries = classify_preserved(engine, bip_max, nonbip_max);
    std::cout << "n,class,graph6,spec\n";
    for (const auto& e : entries)
        std::cout << e.n << ',' << (e.bipartite ? "bipartite" : "nonbipartite") << ',' << e.g6
                  << ',' << (e.spec ? *e.spec : "unmatched") << '\n';
    bool all_matched = std::all_of(entries.begin(), entries.end(),
                                   [](const ClassificationEntry& e) { return e.spec.has_value(); });
    return all_matched ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"elckit: local and edge-local graph complementation, orbits, and binary codes"};
    app.require_subcommand(1);

    int jobs = 1;
    app.add_option("--jobs", jobs, "worker threads (results are identical for any value)")
        ->check(CLI::PositiveNumber);

    std::string input, format = "auto";
    std::optional<std::size_t> cap;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "input format")
            ->check(CLI::IsMember({"auto", "g6", "adj", "spec"}));
    };

    auto* orbit_cmd = app.add_subcommand("orbit", "generate the LC or ELC orbit of a graph");
    std::string orbit_kind = "elc", orbit_dump;
    orbit_cmd->add_option("graph", input, "graph6/adjacency/spec string or file")->required();
    orbit_cmd->add_option("--kind", orbit_kind, "orbit kind")->check(CLI::IsMember({"elc", "lc"}));
    orbit_cmd->add_option("--cap", cap, "orbit member cap (default from ELC_ORBIT_CAP or 1e7)");
    orbit_cmd->add_option("--dump", orbit_dump, "write sorted members to this file ('-': stdout)");
    add_format(orbit_cmd);

    auto* preserved_cmd = app.add_subcommand("preserved", "test whether every ELC preserves the graph");
    preserved_cmd->add_option("graph", input)->required();
    add_format(preserved_cmd);

    auto* construct_cmd = app.add_subcommand("construct", "build a named construction");
    std::string construct_spec, construct_out = "g6";
    bool strict = false;
    construct_cmd->add_option("spec", construct_spec, "construction expression")->required();
    construct_cmd->add_flag("--strict", strict, "require expansion arguments to be ELC-preserved");
    construct_cmd->add_option("--output", construct_out, "output format")
        ->check(CLI::IsMember({"g6", "adj"}));

    auto* code_cmd = app.add_subcommand("code", "report the code behind a bipartite graph");
    std::string side = "large";
    bool as_matrix = false, survey = false;
    code_cmd->add_option("input", input, "graph, construction, or generator matrix file")->required();
    code_cmd->add_option("--side", side, "which partition indexes the information set")
        ->check(CLI::IsMember({"left", "right", "large", "small"}));
    code_cmd->add_flag("--matrix", as_matrix, "treat the input as a generator matrix");
    code_cmd->add_flag("--survey", survey, "print the orbit-size survey instead of a report");
    code_cmd->add_option("--cap", cap, "orbit member cap for distance/isoduality searches");
    add_format(code_cmd);

    auto* census_cmd = app.add_subcommand("census", "orbit counts per order as CSV");
    std::string census_class = "bipartite", census_metric = "all", workdir;
    int from = 2, to = 8;
    bool deep = false;
    census_cmd->add_option("--class", census_class, "graph class")
        ->check(CLI::IsMember({"bipartite", "nonbipartite", "lc"}));
    census_cmd->add_option("--metric", census_metric, "count to report")
        ->check(CLI::IsMember({"orbits", "preserved", "size-two", "all"}));
    census_cmd->add_option("--from", from, "first order");
    census_cmd->add_option("--to", to, "last order");
    census_cmd->add_flag("--deep", deep, "raise the order caps (long runs; prints a warning)");
    census_cmd->add_option("--workdir", workdir, "checkpoint directory for resumable runs");
    census_cmd->add_option("--cap", cap, "orbit member cap");

    auto* classify_cmd = app.add_subcommand("classify", "match ELC-preserved graphs to constructions");
    int bip_max = 12, nonbip_max = 9;
    classify_cmd->add_option("--bip-max", bip_max, "largest bipartite order");
    classify_cmd->add_option("--nonbip-max", nonbip_max, "largest non-bipartite order");
    classify_cmd->add_flag("--deep", deep, "raise the order caps");
    classify_cmd->add_option("--workdir", workdir, "checkpoint directory");

    auto* selfcheck_cmd = app.add_subcommand("selfcheck", "run the built-in consistency suites");
    int cases = 1000;
    std::uint64_t seed = 0x5eed;
    selfcheck_cmd->add_option("--cases", cases, "randomised cases per property");
    selfcheck_cmd->add_option("--seed", seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*orbit_cmd) return cmd_orbit(input, format, orbit_kind, cap, jobs, orbit_dump);
        if (*preserved_cmd) return cmd_preserved(input, format);
        if (*construct_cmd) return cmd_construct(construct_spec, strict, construct_out);
        if (*code_cmd) return cmd_code(input, format, side, as_matrix, survey, cap);
        if (*census_cmd || *classify_cmd) {
            CensusEngine::Options options;
            options.deep = deep;
            options.jobs = jobs;
            options.workdir = workdir;
            options.orbit_cap = cap;
            if (deep)
                std::cerr << "warning: deep mode can run for many minutes and use "
                             "hundreds of megabytes\n";
            if (*census_cmd) return cmd_census(census_class, census_metric, from, to, options);
            return cmd_classify(bip_max, nonbip_max, options);
        }
        if (*selfcheck_cmd) return cmd_selfcheck(cases, seed, jobs);
    } catch (const capacity_error& e) {
        std::cerr << "capacity: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitUsage;
}
