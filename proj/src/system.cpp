#include "unbias/system.hpp"

#include <cmath>
#include <stdexcept>

namespace unbias {

void ExactVec::lift_to(int order) {
    if (order == nroot) return;
    for (CycPoly& e : entries) e = cyc_lift(e, nroot, order);
    nroot = order;
}

std::vector<std::complex<double>> ExactVec::to_float() const {
    double s = std::sqrt(to_double(scale2));
    std::vector<std::complex<double>> out(entries.size());
    for (size_t j = 0; j < entries.size(); ++j) out[j] = s * cyc_eval(entries[j], nroot);
    return out;
}

ExactVec exact_unit_column(int dim, int pos) {
    ExactVec v;
    v.scale2 = Rat(1);
    v.nroot = 1;
    v.entries.assign(dim, CycPoly{0});
    v.entries[pos] = CycPoly{1};
    return v;
}

ExactVec exact_flat_column(const FlatMatrix& M, int j) {
    if (!M.is_exact()) throw std::domain_error("exact_flat_column: matrix has float phases");
    ExactVec v;
    v.scale2 = Rat(1, M.nrows());
    int order = static_cast<int>(M.root_order());
    v.nroot = order;
    v.entries.reserve(M.nrows());
    for (int i = 0; i < M.nrows(); ++i) {
        const Rat& ph = M.at(i, j).exact();
        CycPoly e(order, 0);
        e[static_cast<size_t>(ph.numerator() * (order / ph.denominator()))] = 1;
        v.entries.push_back(std::move(e));
    }
    return v;
}

Cyc exact_norm2(const ExactVec& u) {
    CycPoly acc(u.nroot, 0);
    for (const CycPoly& e : u.entries) {
        CycPoly t = cyc_mul(cyc_conj(e, u.nroot), e, u.nroot);
        acc = cyc_add(acc, t);
    }
    return Cyc(u.nroot, std::move(acc)).scaled(u.scale2);
}

Cyc exact_inner_raw(const ExactVec& u, const ExactVec& v) {
    if (u.dim() != v.dim()) throw std::invalid_argument("inner: dimension mismatch");
    int order = static_cast<int>(std::lcm(u.nroot, v.nroot));
    CycPoly acc(order, 0);
    for (int j = 0; j < u.dim(); ++j) {
        CycPoly a = u.nroot == order ? u.entries[j] : cyc_lift(u.entries[j], u.nroot, order);
        CycPoly b = v.nroot == order ? v.entries[j] : cyc_lift(v.entries[j], v.nroot, order);
        acc = cyc_add(acc, cyc_mul(cyc_conj(a, order), b, order));
    }
    return Cyc(order, std::move(acc));
}

Cyc exact_abs2_inner(const ExactVec& u, const ExactVec& v) {
    Cyc z = exact_inner_raw(u, v);
    return z.abs_sq().scaled(u.scale2 * v.scale2);
}

std::complex<double> float_inner(const CVec& u, const CVec& v) {
    if (u.size() != v.size()) throw std::invalid_argument("inner: dimension mismatch");
    std::complex<double> s = 0;
    for (size_t j = 0; j < u.size(); ++j) s += std::conj(u[j]) * v[j];
    return s;
}

double float_norm2(const CVec& u) {
    double s = 0;
    for (const auto& z : u) s += std::norm(z);
    return s;
}

void VectorSystem::apply_weight(size_t i, const Rat& w) {
    if (backend == Backend::exact)
        exact.at(i).scale2 *= w * w;
    else
        apply_weight(i, to_double(w));
}

void VectorSystem::apply_weight(size_t i, double w) {
    if (backend == Backend::exact)
        throw std::domain_error("apply_weight: float weight on exact system");
    for (auto& z : flt.at(i)) z *= w;
}

VectorSystem VectorSystem::to_float_system() const {
    if (backend == Backend::floating) return *this;
    VectorSystem out;
    out.backend = Backend::floating;
    out.dim = dim;
    out.flt.reserve(exact.size());
    for (const ExactVec& v : exact) out.flt.push_back(v.to_float());
    return out;
}

VectorSystem system_from_flat(const FlatMatrix& M) {
    VectorSystem s;
    if (M.is_exact()) {
        s.backend = Backend::exact;
        s.dim = M.nrows();
        for (int j = 0; j < M.ncols(); ++j) s.exact.push_back(exact_flat_column(M, j));
    } else {
        s.backend = Backend::floating;
        s.dim = M.nrows();
        double sc = 1.0 / std::sqrt(static_cast<double>(M.nrows()));
        for (int j = 0; j < M.ncols(); ++j) {
            CVec c(M.nrows());
            for (int i = 0; i < M.nrows(); ++i) c[i] = sc * M.at(i, j).to_complex();
            s.flt.push_back(std::move(c));
        }
    }
    return s;
}

VectorSystem system_from_flat_union(const std::vector<FlatMatrix>& mats, bool with_identity) {
    if (mats.empty()) throw std::invalid_argument("system_from_flat_union: empty system");
    int n = mats[0].nrows();
    bool exact = true;
    for (const FlatMatrix& m : mats) {
        if (m.nrows() != n) throw std::invalid_argument("system_from_flat_union: dimension mismatch");
        exact = exact && m.is_exact();
    }
    VectorSystem s;
    s.dim = n;
    if (exact) {
        s.backend = Backend::exact;
        if (with_identity)
            for (int j = 0; j < n; ++j) s.exact.push_back(exact_unit_column(n, j));
        for (const FlatMatrix& m : mats)
            for (int j = 0; j < m.ncols(); ++j) s.exact.push_back(exact_flat_column(m, j));
    } else {
        s.backend = Backend::floating;
        if (with_identity)
            for (int j = 0; j < n; ++j) {
                CVec c(n, 0.0);
                c[j] = 1.0;
                s.flt.push_back(std::move(c));
            }
        for (const FlatMatrix& m : mats) {
            VectorSystem part = system_from_flat(m).to_float_system();
            for (auto& c : part.flt) s.flt.push_back(std::move(c));
        }
    }
    return s;
}

}  // namespace unbias
