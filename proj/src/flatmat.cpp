#include "unbias/flatmat.hpp"

#include <cmath>
#include <stdexcept>

namespace unbias {

namespace {
constexpr double kTau = 6.283185307179586476925286766559;

double mod1_double(double v) {
    double r = v - std::floor(v);
    return (r >= 1.0) ? r - 1.0 : r;
}
}  // namespace

Phase Phase::from_double(double v) {
    Phase p;
    p.exact_.reset();
    p.approx_ = mod1_double(v);
    return p;
}

const Rat& Phase::exact() const {
    if (!exact_) throw std::domain_error("Phase: no exact value (float mode)");
    return *exact_;
}

Phase Phase::operator+(const Phase& o) const {
    if (exact_ && o.exact_) return Phase(*exact_ + *o.exact_);
    return from_double(approx_ + o.approx_);
}

Phase Phase::operator-(const Phase& o) const {
    if (exact_ && o.exact_) return Phase(*exact_ - *o.exact_);
    return from_double(approx_ - o.approx_);
}

Phase Phase::operator-() const {
    if (exact_) return Phase(-*exact_);
    return from_double(-approx_);
}

Phase Phase::operator*(Int k) const {
    if (exact_) return Phase(*exact_ * k);
    return from_double(approx_ * static_cast<double>(k));
}

bool Phase::operator==(const Phase& o) const {
    if (exact_ && o.exact_) return *exact_ == *o.exact_;
    return approx_ == o.approx_;
}

bool Phase::operator<(const Phase& o) const {
    if (exact_ && o.exact_) return *exact_ < *o.exact_;
    return approx_ < o.approx_;
}

std::complex<double> Phase::to_complex() const {
    return {std::cos(kTau * approx_), std::sin(kTau * approx_)};
}

PhaseRow schur(const PhaseRow& u, const PhaseRow& v) {
    if (u.size() != v.size()) throw std::invalid_argument("schur: length mismatch");
    PhaseRow r(u.size());
    for (size_t j = 0; j < u.size(); ++j) r[j] = u[j] + v[j];
    return r;
}

PhaseRow schur_power(const PhaseRow& u, Int k) {
    PhaseRow r(u.size());
    for (size_t j = 0; j < u.size(); ++j) r[j] = u[j] * k;
    return r;
}

bool row_is_exact(const PhaseRow& u) {
    for (const Phase& p : u)
        if (!p.is_exact()) return false;
    return true;
}

Cyc inner_exact(const PhaseRow& u, const PhaseRow& v) {
    if (u.size() != v.size()) throw std::invalid_argument("inner: length mismatch");
    Int order = 1;
    for (size_t j = 0; j < u.size(); ++j)
        order = std::lcm(order, (v[j] - u[j]).root_order());
    CycPoly acc(static_cast<size_t>(order), 0);
    for (size_t j = 0; j < u.size(); ++j) {
        Rat ph = (v[j] - u[j]).exact();
        acc[static_cast<size_t>(ph.numerator() * (order / ph.denominator()))] += 1;
    }
    return Cyc(static_cast<int>(order), std::move(acc));
}

std::complex<double> inner_float(const PhaseRow& u, const PhaseRow& v) {
    if (u.size() != v.size()) throw std::invalid_argument("inner: length mismatch");
    std::complex<double> sum = 0;
    for (size_t j = 0; j < u.size(); ++j) sum += (v[j] - u[j]).to_complex();
    return sum;
}

bool inner_is_zero(const PhaseRow& u, const PhaseRow& v, double tol) {
    if (row_is_exact(u) && row_is_exact(v)) return inner_exact(u, v).is_zero();
    return std::abs(inner_float(u, v)) < tol * static_cast<double>(u.size());
}

FlatMatrix::FlatMatrix(std::vector<PhaseRow> rows, bool normalized)
    : nrows_(static_cast<int>(rows.size())), rows_(std::move(rows)), normalized_(normalized) {
    ncols_ = nrows_ == 0 ? 0 : static_cast<int>(rows_[0].size());
    for (const PhaseRow& r : rows_)
        if (static_cast<int>(r.size()) != ncols_)
            throw std::invalid_argument("FlatMatrix: ragged rows");
}

FlatMatrix FlatMatrix::all_ones(int nrows, int ncols) {
    return FlatMatrix(std::vector<PhaseRow>(nrows, PhaseRow(ncols)));
}

PhaseRow FlatMatrix::column(int j) const {
    PhaseRow c(nrows_);
    for (int i = 0; i < nrows_; ++i) c[i] = rows_[i].at(j);
    return c;
}

bool FlatMatrix::is_exact() const {
    for (const PhaseRow& r : rows_)
        if (!row_is_exact(r)) return false;
    return true;
}

Int FlatMatrix::root_order() const {
    Int n = 1;
    for (const PhaseRow& r : rows_)
        for (const Phase& p : r) n = std::lcm(n, p.root_order());
    return n;
}

FlatMatrix FlatMatrix::transpose() const {
    std::vector<PhaseRow> rows(ncols_, PhaseRow(nrows_));
    for (int i = 0; i < nrows_; ++i)
        for (int j = 0; j < ncols_; ++j) rows[j][i] = rows_[i][j];
    return FlatMatrix(std::move(rows), normalized_);
}

FlatMatrix FlatMatrix::conjugate() const {
    std::vector<PhaseRow> rows(nrows_, PhaseRow(ncols_));
    for (int i = 0; i < nrows_; ++i)
        for (int j = 0; j < ncols_; ++j) rows[i][j] = -rows_[i][j];
    return FlatMatrix(std::move(rows), normalized_);
}

bool FlatMatrix::operator==(const FlatMatrix& o) const {
    return nrows_ == o.nrows_ && ncols_ == o.ncols_ && rows_ == o.rows_;
}

bool is_hadamard(const FlatMatrix& B, double tol) {
    if (B.nrows() != B.ncols()) throw std::invalid_argument("is_hadamard: non-square matrix");
    for (int i = 0; i < B.nrows(); ++i)
        for (int j = i + 1; j < B.nrows(); ++j)
            if (!inner_is_zero(B.row(i), B.row(j), tol)) return false;
    return true;
}

}  // namespace unbias
