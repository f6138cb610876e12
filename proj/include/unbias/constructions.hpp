#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "unbias/field.hpp"
#include "unbias/flatmat.hpp"
#include "unbias/group.hpp"
#include "unbias/mubcheck.hpp"

namespace unbias {

/// Total function from an Abelian group into the torus extension of a
/// codomain group; table indexed by the domain's element enumeration.
struct TorusFunction {
    AbelianGroup domain;
    AbelianGroup codomain;
    std::vector<TorusElement> table;

    const TorusElement& value(const GroupElement& g) const {
        return table.at(static_cast<size_t>(domain.index(g)));
    }
    bool integer_valued() const;
    /// Same function with f(0) subtracted, so f(0) = 0.
    TorusFunction normalized_at_zero() const;
};

/// Character table of G: entry (i,j) = chi_j(i); symmetric Hadamard.
FlatMatrix fourier_matrix(const AbelianGroup& G);

/// Generalized Fourier matrix with rows indexed by a subset X of the torus
/// extension; all pairwise differences must lie in G~*.
FlatMatrix shifted_fourier(const AbelianGroup& G, const std::vector<TorusElement>& X);
/// Float-mode variant allowing irrational (real) shifts.
FlatMatrix shifted_fourier(const AbelianGroup& G, const std::vector<std::vector<double>>& X,
                           double tol = 1e-9);

struct HomogeneousSpec {
    FlatMatrix A;  // flat n x n
    FlatMatrix H;  // Hadamard n x n
};

/// The r-th matrix is diag(column r of A) * H, normalized.
std::vector<FlatMatrix> homogeneous_system(const HomogeneousSpec& spec);

/// (v^(r)_k)_l = chi_k(l) chi_r(f(l)) / sqrt(n): one flat matrix per r in
/// the codomain; a complete MUH system iff f satisfies the most general
/// planarity condition.
std::vector<FlatMatrix> mub_from_function(const TorusFunction& f);

/// The matrix A with a_{l,r} = chi_r(f(l)); mub_from_function equals the
/// homogeneous system of (A, Fourier(domain)).
FlatMatrix function_phase_matrix(const TorusFunction& f);

enum class PlanarityLevel { uslovie, general, most_general };

struct PlanarityReport {
    bool holds = true;
    // first violating quadruple (g1, g2, g3, g4), deterministic order
    std::optional<std::array<GroupElement, 4>> witness;
};

/// Exhaustive check over quadruples with g1+g2 = g3+g4, enumerated by sum
/// class. The strict level requires an integer-valued function.
PlanarityReport check_planarity(const TorusFunction& f, PlanarityLevel level);

enum class PlanarFamily { dembowski_ostrom, coulter_matthews, ding_yuan };

struct PlanarFamilyParams {
    Int p = 3;
    int k = 1;
    Int alpha = 0;               // dembowski-ostrom / coulter-matthews
    std::vector<Int> u = {};     // ding-yuan: non-zero field element coefficients
};

/// One of the three known planar families over GF(p^k); the construction
/// asserts its own planarity before returning.
TorusFunction planar_family(PlanarFamily family, const PlanarFamilyParams& params);

/// x^2 (odd p) or the half-square lift (p = 2) for n = p^k.
TorusFunction prime_power_planar_function(Int n);

struct DifferenceMatrices {
    std::vector<GroupElement> deltas;  // non-zero offsets, enumeration order
    std::vector<FlatMatrix> mats;      // D_Delta with rows R_{i+Delta} o R_i^(-1)
    std::vector<bool> hadamard;
    bool all_hadamard = true;
};

/// D_Delta extraction for a flat matrix with rows indexed by G.
DifferenceMatrices difference_matrices(const FlatMatrix& A, const AbelianGroup& G,
                                       const RunConfig& cfg = {});

/// Complete MUB system for a prime-power dimension; self-verified before
/// returning. Throws for dimensions that are not prime powers.
BasisSystem prime_power_mub(Int n);

/// Differential uniformity <= 1 over all (a,b) != (0,0).
bool is_diff_uniform(const TorusFunction& f);
/// Every derivative equation has exactly |G|/|N| solutions.
bool is_perfect_nonlinear(const TorusFunction& f);

}  // namespace unbias
