#pragma once

#include <vector>

#include "unbias/group.hpp"
#include "unbias/rational.hpp"

namespace unbias {

/// Element of GF(p^k) in polynomial basis: k coefficients in [0, p),
/// ascending degree.
struct FieldElement {
    std::vector<Int> coeffs;

    bool operator==(const FieldElement& o) const { return coeffs == o.coeffs; }
    bool operator<(const FieldElement& o) const { return coeffs < o.coeffs; }
    bool is_zero() const;
};

class FiniteField {
public:
    /// Field with an explicit monic irreducible modulus h (ascending, degree k,
    /// k+1 coefficients). Irreducibility is checked at construction.
    FiniteField(Int p, int k, std::vector<Int> h);
    /// Field with the lexicographically smallest monic irreducible modulus.
    FiniteField(Int p, int k);

    Int p() const { return p_; }
    int k() const { return k_; }
    Int order() const { return order_; }
    const std::vector<Int>& modulus() const { return h_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement element(std::vector<Int> coeffs) const;  // reduces mod p
    FieldElement from_int(Int v) const;                   // base-p digits

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement inv(const FieldElement& a) const;  // a != 0
    FieldElement pow(const FieldElement& a, Int e) const;
    FieldElement scalar_mul(Int c, const FieldElement& a) const;

    /// Enumeration aligned with the additive group Z_p^k (mixed-radix,
    /// highest-degree coefficient first).
    std::vector<FieldElement> elements() const;
    Int index(const FieldElement& a) const;
    FieldElement at(Int idx) const;

    /// The additive group Z_p^k; coordinates are the polynomial coefficients,
    /// highest degree first (matching index()).
    AbelianGroup additive_group() const;
    GroupElement to_group(const FieldElement& a) const;
    FieldElement from_group(const GroupElement& g) const;

    /// f(x) = x^2/2 treated over the integers: lift to Z[x], square, reduce
    /// modulo h with integer coefficients, halve, reduce into the torus
    /// R_2^k. Requires p = 2.
    TorusElement half_square(const FieldElement& x) const;

    bool operator==(const FiniteField& o) const {
        return p_ == o.p_ && k_ == o.k_ && h_ == o.h_;
    }

private:
    void check(const FieldElement& a) const;

    Int p_;
    int k_;
    Int order_;
    std::vector<Int> h_;
};

/// True iff the monic polynomial (ascending coefficients) is irreducible
/// over Z_p, by trial division against all lower-degree monic polynomials.
bool is_irreducible_mod_p(const std::vector<Int>& poly, Int p);

/// Lexicographically smallest monic irreducible of degree k over Z_p.
std::vector<Int> default_irreducible(Int p, int k);

bool is_prime(Int n);
/// Factors n = p^k with p prime, k >= 1; returns false otherwise.
bool prime_power_decompose(Int n, Int& p, int& k);

}  // namespace unbias
