#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "unbias/cyclotomic.hpp"
#include "unbias/rational.hpp"

namespace unbias {

/// Element of the circle group: exponent of exp(2*pi*i*value), value in
/// [0, 1). Carries an exact rational when available; a float-only phase
/// (irrational shift) degrades the whole computation to the float backend.
class Phase {
public:
    Phase() : exact_(Rat(0)), approx_(0.0) {}
    Phase(const Rat& v) : exact_(rat_mod1(v)), approx_(to_double(*exact_)) {}  // NOLINT
    static Phase from_double(double v);

    bool is_exact() const { return exact_.has_value(); }
    const Rat& exact() const;
    double value() const { return approx_; }
    /// Denominator of the exact value (order of the root of unity).
    Int root_order() const { return exact().denominator(); }

    Phase operator+(const Phase& o) const;
    Phase operator-(const Phase& o) const;
    Phase operator-() const;
    Phase operator*(Int k) const;

    bool operator==(const Phase& o) const;
    bool operator<(const Phase& o) const;

    std::complex<double> to_complex() const;
    Cyc to_cyc() const { return Cyc::root_of_unity(exact()); }

private:
    std::optional<Rat> exact_;
    double approx_;
};

using PhaseRow = std::vector<Phase>;

/// Entrywise product of unit-modulus rows: phase addition mod 1.
PhaseRow schur(const PhaseRow& u, const PhaseRow& v);
/// Entrywise k-th power; k may be negative.
PhaseRow schur_power(const PhaseRow& u, Int k);

bool row_is_exact(const PhaseRow& u);

/// <u|v> = sum conj(u_j) v_j over unit-modulus entries, exact.
Cyc inner_exact(const PhaseRow& u, const PhaseRow& v);
std::complex<double> inner_float(const PhaseRow& u, const PhaseRow& v);
/// Backend-appropriate zero test of <u|v>.
bool inner_is_zero(const PhaseRow& u, const PhaseRow& v, double tol = 1e-9);

/// Matrix of unit-modulus entries stored as phases. The `normalized` flag
/// records whether the matrix is meant to be read with entries of modulus
/// 1/sqrt(n) (i.e. as an orthonormal basis) in downstream conversions.
class FlatMatrix {
public:
    FlatMatrix() : nrows_(0), ncols_(0), normalized_(false) {}
    FlatMatrix(std::vector<PhaseRow> rows, bool normalized = false);
    static FlatMatrix all_ones(int nrows, int ncols);

    int nrows() const { return nrows_; }
    int ncols() const { return ncols_; }
    bool normalized() const { return normalized_; }
    void set_normalized(bool v) { normalized_ = v; }

    const PhaseRow& row(int i) const { return rows_.at(i); }
    PhaseRow column(int j) const;
    const Phase& at(int i, int j) const { return rows_.at(i).at(j); }
    void set(int i, int j, const Phase& p) { rows_.at(i).at(j) = p; }

    bool is_exact() const;
    /// lcm of all entry denominators (exact matrices).
    Int root_order() const;

    FlatMatrix transpose() const;
    FlatMatrix conjugate() const;

    bool operator==(const FlatMatrix& o) const;

private:
    int nrows_, ncols_;
    std::vector<PhaseRow> rows_;
    bool normalized_;
};

/// True iff the matrix is square and all distinct row pairs are orthogonal.
bool is_hadamard(const FlatMatrix& B, double tol = 1e-9);

}  // namespace unbias
