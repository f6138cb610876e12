#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "unbias/rational.hpp"

namespace unbias {

// Integer combination of N-th roots of unity, stored as the coefficient
// vector of sum coeffs[j] * exp(2*pi*i*j/N). Index arithmetic is mod N;
// the canonical zero test reduces modulo the N-th cyclotomic polynomial.
using CycPoly = std::vector<Int>;

/// N-th cyclotomic polynomial Phi_N, ascending coefficients (memoized).
const std::vector<Int>& cyclotomic_polynomial(int n);

CycPoly cyc_add(const CycPoly& a, const CycPoly& b);
CycPoly cyc_sub(const CycPoly& a, const CycPoly& b);
CycPoly cyc_mul(const CycPoly& a, const CycPoly& b, int order);
CycPoly cyc_conj(const CycPoly& a, int order);

/// Remainder of a modulo Phi_order; size phi(order).
CycPoly cyc_reduce(const CycPoly& a, int order);

/// True iff the represented complex number is exactly zero.
bool cyc_is_zero(const CycPoly& a, int order);

/// The rational value if the element lies in Q, nullopt otherwise.
std::optional<Int> cyc_integer_value(const CycPoly& a, int order);

/// Re-index from order `from` to a multiple `to`.
CycPoly cyc_lift(const CycPoly& a, int from, int to);

std::complex<double> cyc_eval(const CycPoly& a, int order);

// Exact scalar for inner products and Welch sums: a rational multiple of an
// integer cyclotomic, value = (1/den) * sum num[j] * exp(2*pi*i*j/order).
class Cyc {
public:
    Cyc() : order_(1), num_(1, 0), den_(1) {}
    Cyc(int order, CycPoly num, Int den = 1);

    static Cyc from_rat(const Rat& q);
    /// exp(2*pi*i*phase) for a rational phase.
    static Cyc root_of_unity(const Rat& phase);

    int order() const { return order_; }
    const CycPoly& num() const { return num_; }
    Int den() const { return den_; }

    Cyc operator+(const Cyc& o) const;
    Cyc operator-(const Cyc& o) const;
    Cyc operator*(const Cyc& o) const;
    Cyc operator-() const;
    Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
    Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
    Cyc& operator*=(const Cyc& o) { return *this = *this * o; }

    Cyc conj() const;
    Cyc scaled(const Rat& q) const;
    Cyc pow(int k) const;  // k >= 0
    /// z * conj(z); real, used for squared moduli.
    Cyc abs_sq() const { return *this * conj(); }

    bool is_zero() const;
    bool operator==(const Cyc& o) const { return (*this - o).is_zero(); }

    /// Rational value if the element lies in Q.
    std::optional<Rat> rational() const;
    std::complex<double> to_complex() const;

private:
    void normalize();

    int order_;
    CycPoly num_;
    Int den_;
};

}  // namespace unbias
