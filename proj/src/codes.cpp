#include "elckit/codes.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>

#include "elckit/canonical.hpp"
#include "elckit/errors.hpp"
#include "elckit/graph6.hpp"
#include "elckit/orbit.hpp"

namespace elckit {

BitMatrix::BitMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0 || cols > 64)
        throw std::invalid_argument("bit matrix needs 0 <= cols <= 64");
    row_.assign(static_cast<size_t>(rows), 0);
}

void BitMatrix::set(int r, int c, bool value) {
    if (value)
        row_[static_cast<size_t>(r)] |= std::uint64_t{1} << c;
    else
        row_[static_cast<size_t>(r)] &= ~(std::uint64_t{1} << c);
}

BitMatrix BitMatrix::transposed() const {
    if (rows_ > 64) throw capacity_error("transpose needs at most 64 rows");
    BitMatrix out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for_each_vertex(row_[static_cast<size_t>(r)], [&](int c) { out.set(c, r, true); });
    return out;
}

BitMatrix BitMatrix::multiplied(const BitMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix dimension mismatch");
    BitMatrix out(rows_, other.cols_);
    for (int r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        for_each_vertex(row_[static_cast<size_t>(r)],
                        [&](int j) { acc ^= other.row_[static_cast<size_t>(j)]; });
        out.row_[static_cast<size_t>(r)] = acc;
    }
    return out;
}

bool BitMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r)
        if (row_[static_cast<size_t>(r)] != (std::uint64_t{1} << r)) return false;
    return true;
}

bool BitMatrix::is_symmetric() const {
    return rows_ == cols_ && *this == transposed();
}

int BitMatrix::rank() const {
    std::vector<std::uint64_t> rows = row_;
    int rank = 0;
    for (int c = 0; c < cols_ && rank < rows_; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if ((rows[static_cast<size_t>(r)] >> c) & 1) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<size_t>(pivot)], rows[static_cast<size_t>(rank)]);
        for (int r = 0; r < rows_; ++r)
            if (r != rank && ((rows[static_cast<size_t>(r)] >> c) & 1))
                rows[static_cast<size_t>(r)] ^= rows[static_cast<size_t>(rank)];
        ++rank;
    }
    return rank;
}

std::string BitMatrix::to_text() const {
    std::string out;
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) out.push_back(get(r, c) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

BitMatrix BitMatrix::from_text(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::string cleaned;
        for (char c : line)
            if (c == '0' || c == '1') cleaned.push_back(c);
            else if (!std::isspace(static_cast<unsigned char>(c)))
                throw std::invalid_argument("matrix text must contain only 0/1");
        if (!cleaned.empty()) lines.push_back(cleaned);
    }
    if (lines.empty()) throw std::invalid_argument("matrix text has no rows");
    BitMatrix out(static_cast<int>(lines.size()), static_cast<int>(lines[0].size()));
    for (size_t r = 0; r < lines.size(); ++r) {
        if (lines[r].size() != lines[0].size())
            throw std::invalid_argument("matrix text rows have unequal length");
        for (size_t c = 0; c < lines[r].size(); ++c)
            out.set(static_cast<int>(r), static_cast<int>(c), lines[r][c] == '1');
    }
    return out;
}

StandardForm standard_form(const BitMatrix& generator) {
    int k = generator.rows(), n = generator.cols();
    if (k > n) throw std::invalid_argument("generator has more rows than columns");
    BitMatrix work = generator;
    std::vector<int> perm(static_cast<size_t>(n));
    for (int c = 0; c < n; ++c) perm[static_cast<size_t>(c)] = c;

    auto swap_cols = [&](BitMatrix& m, int a, int b) {
        if (a == b) return;
        for (int r = 0; r < m.rows(); ++r) {
            bool va = m.get(r, a), vb = m.get(r, b);
            m.set(r, a, vb);
            m.set(r, b, va);
        }
    };

    for (int r = 0; r < k; ++r) {
        int pc = -1, pr = -1;
        for (int c = r; c < n && pc < 0; ++c)
            for (int row = r; row < k; ++row)
                if (work.get(row, c)) {
                    pc = c;
                    pr = row;
                    break;
                }
        if (pc < 0) throw std::invalid_argument("generator matrix is rank-deficient");
        swap_cols(work, r, pc);
        std::swap(perm[static_cast<size_t>(r)], perm[static_cast<size_t>(pc)]);
        if (pr != r)
            for (int c = 0; c < n; ++c) {
                bool va = work.get(r, c), vb = work.get(pr, c);
                work.set(r, c, vb);
                work.set(pr, c, va);
            }
        for (int row = 0; row < k; ++row)
            if (row != r && work.get(row, r)) work.xor_row_into(r, row);
    }

    StandardForm out;
    out.col_perm = std::move(perm);
    out.p = BitMatrix(k, n - k);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < n - k; ++c) out.p.set(r, c, work.get(r, k + c));
    return out;
}

LinearCode::LinearCode(BitMatrix generator)
    : generator_(std::move(generator)), standard_(standard_form(generator_)) {}

std::pair<Graph, Bipartition> graph_from_code(const LinearCode& code) {
    int k = code.dimension(), n = code.length();
    Graph g(n);
    const BitMatrix& p = code.standard().p;
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < n - k; ++c)
            if (p.get(r, c)) g.add_edge(r, k + c);
    Bipartition part{low_mask(k), low_mask(n) & ~low_mask(k)};
    return {g, part};
}

LinearCode code_from_graph(const Graph& g, const Bipartition& p, Side side) {
    if ((p.left & p.right) || ((p.left | p.right) != g.vertex_mask()))
        throw std::invalid_argument("invalid bipartition for code extraction");
    for (int v = 0; v < g.order(); ++v) {
        VertexSet own = (p.left & vbit(v)) ? p.left : p.right;
        if (g.neighborhood(v) & own)
            throw std::invalid_argument("code extraction needs a bipartite graph");
    }
    VertexSet chosen = side == Side::Left ? p.left : p.right;
    VertexSet other = side == Side::Left ? p.right : p.left;
    int k = popcount(chosen), n = g.order();
    std::vector<int> chosen_v, other_v;
    for_each_vertex(chosen, [&](int v) { chosen_v.push_back(v); });
    for_each_vertex(other, [&](int v) { other_v.push_back(v); });
    BitMatrix gen(k, n);
    for (int r = 0; r < k; ++r) {
        gen.set(r, r, true);
        for (int c = 0; c < n - k; ++c)
            if (g.has_edge(chosen_v[static_cast<size_t>(r)], other_v[static_cast<size_t>(c)]))
                gen.set(r, k + c, true);
    }
    return LinearCode(std::move(gen));
}

namespace {

template <typename Visit>
void for_each_codeword(const LinearCode& code, Visit visit) {
    int k = code.dimension();
    if (k > 24) throw capacity_error("codeword enumeration capped at dimension 24");
    std::uint64_t word = 0;
    // Gray-code order: one row XOR per step.
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << k); ++i) {
        int bit = std::countr_zero(i);
        word ^= code.generator().row_bits(bit);
        visit(word);
    }
}

}  // namespace

int min_distance_bruteforce(const LinearCode& code) {
    int best = code.length() + 1;
    for_each_codeword(code, [&](std::uint64_t w) { best = std::min(best, popcount(w)); });
    return best;
}

std::vector<std::uint64_t> weight_distribution(const LinearCode& code) {
    std::vector<std::uint64_t> counts(static_cast<size_t>(code.length()) + 1, 0);
    counts[0] = 1;
    for_each_codeword(code, [&](std::uint64_t w) { ++counts[static_cast<size_t>(popcount(w))]; });
    return counts;
}

LinearCode dual(const LinearCode& code) {
    int k = code.dimension(), n = code.length();
    const StandardForm& sf = code.standard();
    BitMatrix pt = sf.p.transposed();
    BitMatrix gen(n - k, n);
    for (int r = 0; r < n - k; ++r) {
        for (int c = 0; c < k; ++c)
            if (pt.get(r, c)) gen.set(r, sf.col_perm[static_cast<size_t>(c)], true);
        gen.set(r, sf.col_perm[static_cast<size_t>(k + r)], true);
    }
    return LinearCode(std::move(gen));
}

bool is_self_dual(const LinearCode& code) {
    if (code.length() != 2 * code.dimension()) return false;
    const BitMatrix& p = code.standard().p;
    return p.multiplied(p.transposed()).is_identity();
}

namespace {

// ELC orbit of a bipartite graph with one side tracked through the pivots'
// label swaps. States are deduplicated by the side-respecting canonical
// form; each state is stored canonically relabelled so the tracked side is
// the low labels.
struct TrackedOrbit {
    bool truncated = false;
    int min_tracked_degree = 0;
    bool swap_match = false;  // some state isomorphic to a state with sides exchanged
};

TrackedOrbit tracked_elc_orbit(const Graph& g, VertexSet tracked, std::optional<std::size_t> cap) {
    if (!g.is_connected()) throw std::invalid_argument("orbit tracking needs a connected graph");
    std::size_t limit = cap.value_or(default_orbit_cap());
    int n = g.order();
    int a = popcount(tracked);
    VertexSet full = g.vertex_mask();

    auto state_of = [&](const Graph& h, VertexSet left) {
        return canonical_form_colored(h, {left, full & ~left}).g6;
    };

    TrackedOrbit out;
    out.min_tracked_degree = n;
    std::unordered_set<std::string> seen;
    std::unordered_set<std::string> swapped;
    std::vector<std::string> queue;
    bool balanced = 2 * a == n;

    auto visit = [&](const std::string& key) {
        if (!seen.insert(key).second) return;
        queue.push_back(key);
        Graph h = from_graph6(key);
        for (int v = 0; v < a; ++v) out.min_tracked_degree = std::min(out.min_tracked_degree, h.degree(v));
        if (balanced) swapped.insert(state_of(h, full & ~low_mask(a)));
    };

    visit(state_of(g, tracked));
    for (std::size_t head = 0; head < queue.size() && !out.truncated; ++head) {
        Graph h = from_graph6(queue[head]);
        VertexSet left = low_mask(a);
        for (auto [u, v] : h.edges()) {
            VertexSet next_left = left;
            if (left & vbit(u))
                next_left = (left & ~vbit(u)) | vbit(v);
            else
                next_left = (left & ~vbit(v)) | vbit(u);
            visit(state_of(h.elc(u, v), next_left));
            if (seen.size() > limit) {
                out.truncated = true;
                break;
            }
        }
    }
    if (balanced) {
        for (const auto& s : seen)
            if (swapped.count(s)) {
                out.swap_match = true;
                break;
            }
    }
    return out;
}

}  // namespace

std::optional<int> min_distance_via_orbit(const Graph& g, const Bipartition& p, Side side,
                                          std::optional<std::size_t> cap) {
    if (!g.is_bipartite()) throw std::invalid_argument("distance via orbit needs a bipartite graph");
    VertexSet tracked = side == Side::Left ? p.left : p.right;
    TrackedOrbit orbit = tracked_elc_orbit(g, tracked, cap);
    if (orbit.truncated) return std::nullopt;
    return orbit.min_tracked_degree + 1;
}

std::optional<bool> is_isodual_via_orbit(const Graph& g, const Bipartition& p,
                                         std::optional<std::size_t> cap) {
    if (p.left_size() != p.right_size()) return false;
    TrackedOrbit orbit = tracked_elc_orbit(g, p.left, cap);
    if (orbit.swap_match) return true;
    if (orbit.truncated) return std::nullopt;
    return false;
}

StarExpansionPrediction predict_star_expansion_params(int k, int r, int d, int dual_d, int m,
                                                      bool plus) {
    if (m <= 1) throw std::invalid_argument("star expansion prediction needs m > 1");
    if (k < 2 || r < 1 || r > k - r) throw std::invalid_argument("base parameters need 1 <= r <= k-r");
    StarExpansionPrediction out;
    if (plus) {
        out.code = {m * k, r, m * d};
        out.dual = {m * k, m * k - r, 2};
    } else {
        out.code = {m * k, k - r, m * dual_d};
        out.dual = {m * k, m * k - (k - r), 2};
    }
    return out;
}

HammingExpansionPrediction predict_hamming_expansion_params(int k, int r) {
    if (k < 2) throw std::invalid_argument("hamming expansion prediction needs k >= 2");
    if (r < 1 || r > k - r) throw std::invalid_argument("base parameters need 1 <= r <= k-r");
    return {{7 * k, 3 * k + r, 4}, {7 * k, 4 * k - r, 4}};
}

namespace {

// One Hamming expansion carried out on the standard-form matrix. Rows and
// columns are grouped per original vertex: four X rows (block vertices
// w0,w1,w2,w6) first, then three Y rows (w3,w4,w5); symmetric input stays
// symmetric.
BitMatrix matrix_hamming_expansion(const BitMatrix& a) {
    static const bool kBlock[4][3] = {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}};
    int m = a.rows();
    if (a.cols() != m) throw std::invalid_argument("matrix expansion needs a square matrix");
    if (7 * m > 64) throw capacity_error("matrix expansion capped at 64 rows");
    BitMatrix out(7 * m, 7 * m);
    auto xrow = [&](int i, int t) { return 4 * i + t; };
    auto yrow = [&](int i, int t) { return 4 * m + 3 * i + t; };
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j)
            if (a.get(i, j))
                for (int t = 0; t < 3; ++t)
                    for (int s = 0; s < 3; ++s) out.set(xrow(i, t), xrow(j, s), true);
        for (int t = 0; t < 4; ++t)
            for (int s = 0; s < 3; ++s)
                if (kBlock[t][s]) {
                    out.set(xrow(i, t), yrow(i, s), true);
                    out.set(yrow(i, s), xrow(i, t), true);
                }
    }
    return out;
}

}  // namespace

IteratedHammingReport iterated_hamming_self_dual(IteratedBase base, int r) {
    if (r < 0) throw std::invalid_argument("expansion count must be non-negative");
    BitMatrix p;
    if (base == IteratedBase::Edge2) {
        p = BitMatrix(1, 1);
        p.set(0, 0, true);
    } else {
        Graph he = extended_hamming_graph(3);
        auto part = he.bipartition();
        p = code_from_graph(he, *part, Side::Left).standard().p;
    }
    for (int i = 0; i < r; ++i) p = matrix_hamming_expansion(p);

    IteratedHammingReport report;
    int k = p.rows();
    report.code = {2 * k, k, r > 0 ? 4 : (base == IteratedBase::Edge2 ? 2 : 4)};
    report.p_symmetric = p.is_symmetric();
    report.self_dual = p.multiplied(p.transposed()).is_identity();
    if (k <= 24) {
        BitMatrix gen(k, 2 * k);
        for (int row = 0; row < k; ++row) {
            gen.set(row, row, true);
            for (int c = 0; c < k; ++c)
                if (p.get(row, c)) gen.set(row, k + c, true);
        }
        report.code.d = min_distance_bruteforce(LinearCode(std::move(gen)));
        report.distance_verified = true;
    }
    if (2 * k <= kMaxVertices) {
        Graph g(2 * k);
        for (int row = 0; row < k; ++row)
            for (int c = 0; c < k; ++c)
                if (p.get(row, c)) g.add_edge(row, k + c);
        report.graph = g;
    }
    return report;
}

CodeReport code_report(const Graph& g, const Bipartition& p, Side side,
                       std::optional<std::size_t> cap) {
    LinearCode code = code_from_graph(g, p, side);
    CodeReport report;
    report.n = code.length();
    report.k = code.dimension();
    if (code.dimension() <= 24) {
        report.d = min_distance_bruteforce(code);
        report.weights = weight_distribution(code);
    } else {
        report.d = min_distance_via_orbit(g, p, side, cap);
    }
    Side other = side == Side::Left ? Side::Right : Side::Left;
    LinearCode dual_code = code_from_graph(g, p, other);
    if (dual_code.dimension() <= 24)
        report.dual_d = min_distance_bruteforce(dual_code);
    else
        report.dual_d = min_distance_via_orbit(g, p, other, cap);
    report.self_dual = is_self_dual(code);
    report.isodual = is_isodual_via_orbit(g, p, cap);
    return report;
}

}  // namespace elckit
