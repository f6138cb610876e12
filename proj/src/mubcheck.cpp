#include "unbias/mubcheck.hpp"

#include "unbias/welch.hpp"

#include <cmath>
#include <stdexcept>

namespace unbias {

BasisSystem BasisSystem::to_float_system() const {
    if (backend == Backend::floating) return *this;
    BasisSystem out;
    out.backend = Backend::floating;
    out.dim = dim;
    out.form = form;
    for (const auto& basis : ebases) {
        std::vector<CVec> fb;
        fb.reserve(basis.size());
        for (const ExactVec& c : basis) fb.push_back(c.to_float());
        out.fbases.push_back(std::move(fb));
    }
    return out;
}

VectorSystem BasisSystem::union_vectors() const {
    VectorSystem X;
    X.backend = backend;
    X.dim = dim;
    if (backend == Backend::exact) {
        for (const auto& basis : ebases)
            for (const ExactVec& c : basis) X.exact.push_back(c);
    } else {
        for (const auto& basis : fbases)
            for (const CVec& c : basis) X.flt.push_back(c);
    }
    return X;
}

std::vector<ExactVec> identity_basis(int n) {
    std::vector<ExactVec> b;
    b.reserve(n);
    for (int j = 0; j < n; ++j) b.push_back(exact_unit_column(n, j));
    return b;
}

std::vector<ExactVec> basis_from_flat(const FlatMatrix& M) {
    if (M.nrows() != M.ncols()) throw std::invalid_argument("basis_from_flat: non-square matrix");
    std::vector<ExactVec> b;
    b.reserve(M.ncols());
    for (int j = 0; j < M.ncols(); ++j) b.push_back(exact_flat_column(M, j));
    return b;
}

BasisSystem make_system(std::vector<FlatMatrix> mats, bool prepend_identity,
                        const RunConfig& cfg) {
    if (mats.empty()) throw std::invalid_argument("make_system: no bases");
    int n = mats[0].nrows();
    bool exact = cfg.backend == Backend::exact;
    for (const FlatMatrix& m : mats) {
        if (m.nrows() != n || m.ncols() != n)
            throw std::invalid_argument("make_system: bases must be square, equal size");
        exact = exact && m.is_exact();
    }
    BasisSystem S;
    S.dim = n;
    S.form = prepend_identity ? BasisForm::muh_standard : BasisForm::raw;
    if (exact) {
        S.backend = Backend::exact;
        if (prepend_identity) S.ebases.push_back(identity_basis(n));
        for (const FlatMatrix& m : mats) S.ebases.push_back(basis_from_flat(m));
    } else {
        S.backend = Backend::floating;
        if (prepend_identity) {
            std::vector<CVec> id(n, CVec(n, 0.0));
            for (int j = 0; j < n; ++j) id[j][j] = 1.0;
            S.fbases.push_back(std::move(id));
        }
        for (const FlatMatrix& m : mats) {
            VectorSystem cols = system_from_flat(m).to_float_system();
            S.fbases.push_back(std::move(cols.flt));
        }
    }
    return S;
}

Rat angle_sq(const ExactVec& x, const ExactVec& y) {
    auto q = exact_abs2_inner(x, y).rational();
    if (!q) throw std::domain_error("angle_sq: irrational squared angle in exact mode");
    return *q;
}

double angle_sq(const CVec& x, const CVec& y) { return std::norm(float_inner(x, y)); }

namespace {

// Orthonormality of one basis; first failure reported.
bool basis_orthonormal(const BasisSystem& S, size_t b, const RunConfig& cfg, std::string& why) {
    int n = S.dim;
    if (S.backend == Backend::exact) {
        const auto& basis = S.ebases[b];
        if (static_cast<int>(basis.size()) != n) {
            why = "wrong vector count";
            return false;
        }
        for (int i = 0; i < n; ++i) {
            if (!(exact_norm2(basis[i]) == Cyc::from_rat(1))) {
                why = "column " + std::to_string(i) + " is not unit length";
                return false;
            }
            for (int j = i + 1; j < n; ++j)
                if (!exact_inner_raw(basis[i], basis[j]).is_zero()) {
                    why = "columns " + std::to_string(i) + "," + std::to_string(j) +
                          " are not orthogonal";
                    return false;
                }
        }
    } else {
        const auto& basis = S.fbases[b];
        if (static_cast<int>(basis.size()) != n) {
            why = "wrong vector count";
            return false;
        }
        for (int i = 0; i < n; ++i) {
            if (std::abs(float_norm2(basis[i]) - 1.0) > cfg.tol * n) {
                why = "column " + std::to_string(i) + " is not unit length";
                return false;
            }
            for (int j = i + 1; j < n; ++j)
                if (std::abs(float_inner(basis[i], basis[j])) > cfg.tol * n) {
                    why = "columns " + std::to_string(i) + "," + std::to_string(j) +
                          " are not orthogonal";
                    return false;
                }
        }
    }
    return true;
}

}  // namespace

MubVerdict is_mub_system(const BasisSystem& S, const RunConfig& cfg) {
    MubVerdict v;
    int n = S.dim;
    size_t r = S.count();
    if (r == 0) throw std::invalid_argument("is_mub_system: no bases");
    if (n >= 2 && static_cast<Int>(r) > max_mub_bound(n)) {
        v.is_mub = false;
        v.failures.push_back({-1, -1, -1, -1, 0.0,
                              "more than n+1 bases (structural bound)"});
        return v;
    }
    for (size_t b = 0; b < r; ++b) {
        std::string why;
        if (!basis_orthonormal(S, b, cfg, why)) {
            v.failures.push_back({static_cast<int>(b), -1, -1, -1, 0.0,
                                  "basis not orthonormal: " + why});
        }
    }
    if (!v.failures.empty()) {
        v.is_mub = false;
        return v;
    }
    for (size_t b1 = 0; b1 < r; ++b1)
        for (size_t b2 = b1 + 1; b2 < r; ++b2)
            for (int c1 = 0; c1 < n; ++c1)
                for (int c2 = 0; c2 < n; ++c2) {
                    if (S.backend == Backend::exact) {
                        // compare |<x|y>|^2 as a cyclotomic so irrational
                        // angles report as mismatches instead of throwing
                        Cyc a = exact_abs2_inner(S.ebases[b1][c1], S.ebases[b2][c2]);
                        if (!(a == Cyc::from_rat(Rat(1, n))))
                            v.failures.push_back({static_cast<int>(b1), static_cast<int>(b2),
                                                  c1, c2, a.to_complex().real(),
                                                  "angle mismatch"});
                    } else {
                        double a = angle_sq(S.fbases[b1][c1], S.fbases[b2][c2]);
                        if (std::abs(a * n - 1.0) > cfg.tol * n)
                            v.failures.push_back({static_cast<int>(b1), static_cast<int>(b2),
                                                  c1, c2, a, "angle mismatch"});
                    }
                }
    v.is_mub = v.failures.empty();
    v.is_complete = v.is_mub && static_cast<Int>(r) == n + 1;
    return v;
}

namespace {

Rat uniform_scale2(const std::vector<ExactVec>& basis) {
    Rat s = basis.at(0).scale2;
    for (const ExactVec& c : basis)
        if (c.scale2 != s)
            throw std::domain_error("normalize_to_muh: non-uniform column scale in exact basis");
    return s;
}

}  // namespace

BasisSystem normalize_to_muh(const BasisSystem& S, const RunConfig& cfg) {
    (void)cfg;
    if (S.count() < 1) throw std::invalid_argument("normalize_to_muh: no bases");
    BasisSystem out;
    out.backend = S.backend;
    out.dim = S.dim;
    out.form = BasisForm::muh_standard;
    int n = S.dim;
    if (S.backend == Backend::exact) {
        const auto& b0 = S.ebases[0];
        Rat s0 = uniform_scale2(b0);
        for (const auto& basis : S.ebases) {
            Rat sb = uniform_scale2(basis);
            std::vector<ExactVec> nb;
            nb.reserve(basis.size());
            for (const ExactVec& x : basis) {
                ExactVec col;
                col.scale2 = s0 * sb;
                int order = 1;
                std::vector<Cyc> vals;
                vals.reserve(n);
                for (int i = 0; i < n; ++i) {
                    Cyc z = exact_inner_raw(b0[i], x);
                    order = static_cast<int>(std::lcm<Int>(order, z.order()));
                    vals.push_back(std::move(z));
                }
                col.nroot = order;
                Int den = 1;
                for (const Cyc& z : vals) den = std::lcm(den, z.den());
                // fold any residual rational denominator into the scale
                col.scale2 = col.scale2 / Rat(den * den);
                for (Cyc& z : vals) {
                    CycPoly p = cyc_lift(z.num(), z.order(), order);
                    Int f = den / z.den();
                    for (Int& c : p) c *= f;
                    col.entries.push_back(std::move(p));
                }
                nb.push_back(std::move(col));
            }
            out.ebases.push_back(std::move(nb));
        }
    } else {
        const auto& b0 = S.fbases[0];
        for (const auto& basis : S.fbases) {
            std::vector<CVec> nb;
            for (const CVec& x : basis) {
                CVec col(n);
                for (int i = 0; i < n; ++i) col[i] = float_inner(b0[i], x);
                nb.push_back(std::move(col));
            }
            out.fbases.push_back(std::move(nb));
        }
    }
    return out;
}

bool density_orthogonal(const ExactVec& x, const ExactVec& y) {
    if (x.dim() != y.dim()) throw std::invalid_argument("density_orthogonal: dimension mismatch");
    if (!(exact_norm2(x) == Cyc::from_rat(1)) || !(exact_norm2(y) == Cyc::from_rat(1)))
        throw std::domain_error("density_orthogonal: inputs must be unit vectors");
    return exact_abs2_inner(x, y) == Cyc::from_rat(Rat(1, x.dim()));
}

bool density_orthogonal(const CVec& x, const CVec& y, double tol) {
    if (x.size() != y.size()) throw std::invalid_argument("density_orthogonal: dimension mismatch");
    if (std::abs(float_norm2(x) - 1.0) > tol || std::abs(float_norm2(y) - 1.0) > tol)
        throw std::domain_error("density_orthogonal: inputs must be unit vectors");
    double n = static_cast<double>(x.size());
    // Tr(Yx^dag Yy) = |<x|y>|^2 - 1/n
    return std::abs(angle_sq(x, y) - 1.0 / n) < tol;
}

GlavnajaResult glavnaja_check(const std::vector<FlatMatrix>& mats, const RunConfig& cfg) {
    if (mats.empty()) throw std::invalid_argument("glavnaja_check: no matrices");
    int n = mats[0].nrows();
    if (static_cast<int>(mats.size()) != n)
        throw std::invalid_argument("glavnaja_check: need exactly n matrices");
    for (const FlatMatrix& m : mats)
        if (m.nrows() != n || m.ncols() != n)
            throw std::invalid_argument("glavnaja_check: matrices must be n x n");
    // rows of the n x n^2 concatenation
    std::vector<PhaseRow> rows(n);
    for (int i = 0; i < n; ++i) {
        rows[i].reserve(static_cast<size_t>(n) * n);
        for (const FlatMatrix& m : mats)
            for (int j = 0; j < n; ++j) rows[i].push_back(m.at(i, j));
    }
    std::vector<std::pair<int, int>> verts;
    std::vector<PhaseRow> prods;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            verts.emplace_back(i, j);
            prods.push_back(schur(rows[i], rows[j]));
        }
    GlavnajaResult res;
    for (size_t a = 0; a < prods.size(); ++a)
        for (size_t b = a + 1; b < prods.size(); ++b)
            if (!inner_is_zero(prods[a], prods[b], cfg.tol)) {
                res.ok = false;
                res.witness = {verts[a], verts[b]};
                return res;
            }
    return res;
}

}  // namespace unbias
