#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "unbias/system.hpp"

namespace unbias {

/// Both sides of the Welch inequality
///   C(n+k-1,k) * sum_{i,j} |<x_i|x_j>|^{2k}  >=  (sum_i <x_i|x_i>^k)^2
/// for a fixed k.
struct WelchReport {
    int k = 1;
    bool attained = false;
    // exact backend: rational values when the sums lie in Q
    std::optional<Rat> lhs_rat, rhs_rat, margin_rat;
    double lhs = 0, rhs = 0, margin = 0;
    Backend backend = Backend::exact;
};

WelchReport welch_report(const VectorSystem& X, int k, const RunConfig& cfg = {});

/// Schur products of k-multisets of the rows of the stacked column matrix.
/// The multinomial coefficient is kept exact and applied to squared norms;
/// its square root is never materialized.
struct WSet {
    struct Entry {
        std::vector<int> rows;  // k-multiset, ascending
        Int multinomial = 1;
        std::vector<CycPoly> eprod;  // exact backend: per-column Schur product
        CVec fprod;                  // float backend
    };

    int k = 1;
    Backend backend = Backend::exact;
    int nroot = 1;
    std::vector<Rat> colscale2k;  // exact: scale2^k per column
    std::vector<Entry> entries;
};

WSet build_wset(const VectorSystem& X, int k);

/// Scaled squared length multinomial * ||w_S||^2 of entry a (exact backend).
Cyc wset_norm2(const WSet& W, size_t a);
/// Unscaled inner product of entries a and b (exact backend).
Cyc wset_inner(const WSet& W, size_t a, size_t b);
double wset_norm2_float(const WSet& W, size_t a);
std::complex<double> wset_inner_float(const WSet& W, size_t a, size_t b);

struct AttainResult {
    bool attained = true;
    // the offending multiset pair, lexicographically smallest
    std::optional<std::pair<std::vector<int>, std::vector<int>>> witness;
    std::string reason;
};

/// W-set criterion: equality holds iff all entries have equal scaled length
/// and are pairwise orthogonal.
AttainResult attains_welch(const VectorSystem& X, int k, const RunConfig& cfg = {});

/// Equality for every k' <= t (complex projective t-design).
bool is_t_design(const VectorSystem& X, int t, const RunConfig& cfg = {});

/// Structural cap on the number of mutually unbiased bases in dimension n.
Int max_mub_bound(Int n);
/// Welch-bound sides for a hypothetical system of n+2 MUBs in dimension n
/// at k = 2: lhs < rhs for every n >= 2, hence no such system exists.
Rat hypothetical_mub_excess_lhs(Int n);
Rat hypothetical_mub_excess_rhs(Int n);

Int binomial(Int n, Int k);
Int multinomial_of_multiset(const std::vector<int>& multiset);

}  // namespace unbias
