#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unbias/system.hpp"

namespace unbias {

enum class BasisForm { raw, muh_standard };

/// A list of square bases over a common dimension; columns are the basis
/// vectors. Exact bases require a uniform column scale per basis.
struct BasisSystem {
    Backend backend = Backend::exact;
    int dim = 0;
    BasisForm form = BasisForm::raw;
    std::vector<std::vector<ExactVec>> ebases;
    std::vector<std::vector<CVec>> fbases;

    size_t count() const {
        return backend == Backend::exact ? ebases.size() : fbases.size();
    }
    BasisSystem to_float_system() const;
    /// Union of all basis vectors as one sequence.
    VectorSystem union_vectors() const;
};

std::vector<ExactVec> identity_basis(int n);
std::vector<ExactVec> basis_from_flat(const FlatMatrix& M);

BasisSystem make_system(std::vector<FlatMatrix> mats, bool prepend_identity,
                        const RunConfig& cfg = {});

struct MubFailure {
    int basis1 = -1, basis2 = -1;  // basis2 < 0: structural / orthonormality failure
    int col1 = -1, col2 = -1;
    double angle_sq = 0;
    std::string reason;
};

struct MubVerdict {
    bool is_mub = false;
    bool is_complete = false;
    std::vector<MubFailure> failures;
};

/// |<x|y>|^2.
Rat angle_sq(const ExactVec& x, const ExactVec& y);
double angle_sq(const CVec& x, const CVec& y);

/// Verifies n * angle_sq == 1 for every inter-basis column pair; rejects
/// candidates with more than n+1 bases (n >= 2) before pair checking.
/// Orthonormality failures are reported in the verdict rather than thrown.
MubVerdict is_mub_system(const BasisSystem& S, const RunConfig& cfg = {});

/// Applies the adjoint of the first basis to every basis, making the first
/// the standard basis. Flatness of the rest (for MUB inputs) is observable
/// through the returned matrices, not asserted.
BasisSystem normalize_to_muh(const BasisSystem& S, const RunConfig& cfg = {});

/// Trace-orthogonality of the traceless density matrices of two unit
/// vectors, via Tr(Yx^dag Yy) = |<x|y>|^2 - 1/n.
bool density_orthogonal(const ExactVec& x, const ExactVec& y);
bool density_orthogonal(const CVec& x, const CVec& y, double tol = 1e-9);

struct GlavnajaResult {
    bool ok = true;
    // offending W' pair as row multisets {i,j}, {k,l}
    std::optional<std::pair<std::pair<int, int>, std::pair<int, int>>> witness;
};

/// W' criterion: stacks n flat n x n matrices into an n x n^2 matrix and
/// checks pairwise orthogonality of all Schur products of row 2-multisets.
/// True iff {I, H_1, ..., H_n} is a complete MUB system.
GlavnajaResult glavnaja_check(const std::vector<FlatMatrix>& mats, const RunConfig& cfg = {});

}  // namespace unbias
