#pragma once

#include <complex>
#include <vector>

#include "unbias/cyclotomic.hpp"
#include "unbias/flatmat.hpp"
#include "unbias/rational.hpp"

namespace unbias {

enum class Backend { exact, floating };

struct RunConfig {
    Backend backend = Backend::exact;
    double tol = 1e-9;
    unsigned long long seed = 0;
};

/// Exact complex vector: value_j = s * entries[j](omega_nroot) where the
/// scale s is carried only through its square (s^2 = scale2, rational).
/// Squared norms and squared inner-product moduli stay rational/cyclotomic
/// even when s itself is irrational (s = 1/sqrt(n)).
struct ExactVec {
    Rat scale2 = Rat(1);
    int nroot = 1;
    std::vector<CycPoly> entries;

    int dim() const { return static_cast<int>(entries.size()); }
    void lift_to(int order);
    std::vector<std::complex<double>> to_float() const;
};

ExactVec exact_unit_column(int dim, int pos);
/// Column j of a flat matrix as an exact vector; scale2 = 1/n so the column
/// is unit-norm (the matrix is read as an orthonormal-basis candidate).
ExactVec exact_flat_column(const FlatMatrix& M, int j);

/// <u|u> as an exact scalar (real cyclotomic).
Cyc exact_norm2(const ExactVec& u);
/// The unscaled inner sum Z = sum conj(P_j) Q_j; <u|v> = s_u s_v Z.
Cyc exact_inner_raw(const ExactVec& u, const ExactVec& v);
/// |<u|v>|^2 = scale2_u * scale2_v * Z * conj(Z).
Cyc exact_abs2_inner(const ExactVec& u, const ExactVec& v);

using CVec = std::vector<std::complex<double>>;

std::complex<double> float_inner(const CVec& u, const CVec& v);
double float_norm2(const CVec& u);

/// Finite sequence of vectors in one ambient dimension with optional
/// weights; exact or float backed depending on construction.
struct VectorSystem {
    Backend backend = Backend::exact;
    int dim = 0;
    std::vector<ExactVec> exact;  // exact backend
    std::vector<CVec> flt;        // float backend

    size_t size() const {
        return backend == Backend::exact ? exact.size() : flt.size();
    }

    /// Scales vector i by weight w (norm^2 becomes w^2 for unit input).
    void apply_weight(size_t i, const Rat& w);
    void apply_weight(size_t i, double w);

    VectorSystem to_float_system() const;
};

/// Columns of a flat matrix as unit vectors.
VectorSystem system_from_flat(const FlatMatrix& M);
/// Union of: the identity basis (if with_identity) and the columns of each
/// flat matrix, all unit-normalized.
VectorSystem system_from_flat_union(const std::vector<FlatMatrix>& mats, bool with_identity);

}  // namespace unbias
