#ifndef ELCKIT_CODES_HPP
#define ELCKIT_CODES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "elckit/constructions.hpp"
#include "elckit/graph.hpp"

namespace elckit {

/// Dense matrix over GF(2) with up to 64 columns; bit j of row i is the
/// entry (i, j).
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool get(int r, int c) const { return (row_[static_cast<size_t>(r)] >> c) & 1; }
    void set(int r, int c, bool value);
    std::uint64_t row_bits(int r) const { return row_[static_cast<size_t>(r)]; }
    void xor_row_into(int src, int dst) { row_[static_cast<size_t>(dst)] ^= row_[static_cast<size_t>(src)]; }

    BitMatrix transposed() const;
    BitMatrix multiplied(const BitMatrix& other) const;
    bool is_identity() const;
    bool is_symmetric() const;
    int rank() const;

    std::string to_text() const;                      // rows of 0/1
    static BitMatrix from_text(const std::string&);

    bool operator==(const BitMatrix& other) const = default;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::uint64_t> row_;
};

struct StandardForm {
    BitMatrix p;                // k x (n-k)
    std::vector<int> col_perm;  // col_perm[position] = original column
};

/// Gauss-Jordan over GF(2) with column pivoting: the leftmost column with a
/// pivot is swapped into place and the swap recorded. Throws on rank
/// deficiency.
StandardForm standard_form(const BitMatrix& generator);

/// Binary linear [n,k] code given by a generator matrix of rank k.
class LinearCode {
  public:
    explicit LinearCode(BitMatrix generator);

    int length() const { return generator_.cols(); }
    int dimension() const { return generator_.rows(); }
    const BitMatrix& generator() const { return generator_; }
    const StandardForm& standard() const { return standard_; }

  private:
    BitMatrix generator_;
    StandardForm standard_;
};

/// The (k, n-k)-bipartite graph whose biadjacency matrix is the standard
/// form P; left = the first k labels.
std::pair<Graph, Bipartition> graph_from_code(const LinearCode& code);

/// Reads a generator (I | P) off a bipartite graph: the chosen side
/// provides the identity columns. Columns are the chosen side's vertices
/// ascending, then the rest ascending.
LinearCode code_from_graph(const Graph& g, const Bipartition& p, Side side);

/// Exact minimum distance by enumerating all 2^k - 1 codewords; k <= 24.
int min_distance_bruteforce(const LinearCode& code);

/// Number of codewords per Hamming weight (k <= 24).
std::vector<std::uint64_t> weight_distribution(const LinearCode& code);

LinearCode dual(const LinearCode& code);
bool is_self_dual(const LinearCode& code);

/// Minimum distance from the ELC orbit: one plus the smallest degree seen
/// in the tracked side over all orbit members. nullopt if the orbit cap
/// was hit.
std::optional<int> min_distance_via_orbit(const Graph& g, const Bipartition& p, Side side,
                                          std::optional<std::size_t> cap = std::nullopt);

/// True when some orbit member is isomorphic to another with the two sides
/// exchanged; nullopt if the orbit cap was hit.
std::optional<bool> is_isodual_via_orbit(const Graph& g, const Bipartition& p,
                                         std::optional<std::size_t> cap = std::nullopt);

struct CodeParams {
    int n = 0, k = 0, d = 0;
};

struct StarExpansionPrediction {
    CodeParams code, dual;
};

/// Parameters of the codes of a star expansion of a graph whose code is
/// [k, r, d] with dual distance dual_d (r <= k-r).
StarExpansionPrediction predict_star_expansion_params(int k, int r, int d, int dual_d, int m,
                                                      bool plus);

struct HammingExpansionPrediction {
    CodeParams code, dual;
};

HammingExpansionPrediction predict_hamming_expansion_params(int k, int r);

enum class IteratedBase { ExtendedHamming8, Edge2 };

struct IteratedHammingReport {
    CodeParams code;
    bool p_symmetric = false;
    bool self_dual = false;
    bool distance_verified = false;        // true when d was brute-forced
    std::optional<Graph> graph;            // present when the order fits
};

/// r-fold Hamming expansion of the [8,4,4] code's graph or of the single
/// edge, carried out on the standard-form matrix so lengths beyond the
/// 64-vertex graph cap still get checked for P = P^T and P P^T = I.
IteratedHammingReport iterated_hamming_self_dual(IteratedBase base, int r);

struct CodeReport {
    int n = 0, k = 0;
    std::optional<int> d;                   // nullopt: beyond caps
    std::optional<int> dual_d;
    bool self_dual = false;
    std::optional<bool> isodual;            // nullopt: unknown (cap hit)
    std::optional<std::vector<std::uint64_t>> weights;
};

CodeReport code_report(const Graph& g, const Bipartition& p, Side side,
                       std::optional<std::size_t> cap = std::nullopt);

}  // namespace elckit

#endif
