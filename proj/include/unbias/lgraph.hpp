#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "unbias/flatmat.hpp"
#include "unbias/system.hpp"

namespace unbias {

/// Graph on the 2-multisets {i,j} of row indices of an n-row matrix.
/// The weighted form K(B) carries the inner product of the Schur products
/// along the lexicographic direction of each edge; the L-graph form keeps
/// only the orthogonality relation as adjacency.
class PairGraph {
public:
    explicit PairGraph(int n);

    int nrows() const { return n_; }
    int vertex_count() const { return static_cast<int>(verts_.size()); }
    const std::vector<std::pair<int, int>>& vertices() const { return verts_; }
    int vertex_index(int i, int j) const;

    bool adjacent(int a, int b) const { return adj_[a][b]; }
    void set_edge(int a, int b, bool present);
    int edge_count() const;

    struct EdgeWeight {
        std::optional<Cyc> exact;
        std::complex<double> value{0.0, 0.0};
    };

    bool weighted() const { return !weights_.empty(); }
    /// Weight of the (a,b) edge with a < b (lexicographic direction).
    const EdgeWeight& weight(int a, int b) const;
    void set_weight(int a, int b, EdgeWeight w);

    /// Union of edge sets; vertex sets must agree.
    PairGraph union_with(const PairGraph& o) const;

    std::string to_dot(bool weighted) const;

private:
    int n_;
    std::vector<std::pair<int, int>> verts_;
    std::vector<std::vector<bool>> adj_;
    std::map<std::pair<int, int>, EdgeWeight> weights_;
};

/// Weighted graph K(B): weight({i,j},{k,l}) = <w_i o w_j | w_k o w_l>.
/// Edges mark exactly the orthogonal (zero-weight) pairs.
PairGraph k_graph(const FlatMatrix& B, const RunConfig& cfg = {});

/// L-graph L(A): adjacency iff the Schur products are orthogonal.
PairGraph l_graph(const FlatMatrix& A, const RunConfig& cfg = {});

struct CoverageReport {
    bool covers = true;
    std::vector<std::pair<int, int>> missing;  // vertex index pairs
};

/// True iff every pair of distinct vertices is an edge of LA or LH.
CoverageReport covers_complete(const PairGraph& LA, const PairGraph& LH);

inline constexpr int kExactSolverCap = 300;

/// Exact clique number by branch and bound with a greedy colouring bound.
int clique_number(const PairGraph& G, int cap = kExactSolverCap);
/// Exact chromatic number; chi >= omega asserted internally.
int chromatic_number(const PairGraph& G, int cap = kExactSolverCap);

}  // namespace unbias
