#pragma once

#include <complex>
#include <string>
#include <vector>

#include "unbias/cyclotomic.hpp"
#include "unbias/rational.hpp"

namespace unbias {

class AbelianGroup;

/// Element of Z_{d1} x ... x Z_{dm}, coordinates reduced into [0, di).
struct GroupElement {
    std::vector<Int> coords;

    bool operator==(const GroupElement& o) const { return coords == o.coords; }
    bool operator<(const GroupElement& o) const { return coords < o.coords; }
    bool is_zero() const;
};

/// Element of the torus extension R_{d1} x ... x R_{dm}; exact rational
/// coordinates reduced into [0, di).
struct TorusElement {
    std::vector<Rat> coords;

    bool operator==(const TorusElement& o) const { return coords == o.coords; }
    bool operator<(const TorusElement& o) const { return coords < o.coords; }
    bool is_integral() const;
    /// Embeds an all-integer torus element as a group element.
    GroupElement to_group() const;
};

TorusElement to_torus(const GroupElement& g);

class AbelianGroup {
public:
    AbelianGroup() : order_(1) {}  // trivial group
    explicit AbelianGroup(std::vector<Int> moduli);

    const std::vector<Int>& moduli() const { return moduli_; }
    Int order() const { return order_; }
    size_t rank() const { return moduli_.size(); }

    GroupElement zero() const;
    GroupElement element(std::vector<Int> coords) const;  // reduces coordinates
    TorusElement torus(std::vector<Rat> coords) const;    // reduces coordinates

    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement neg(const GroupElement& a) const;
    GroupElement sub(const GroupElement& a, const GroupElement& b) const;
    GroupElement mul(const GroupElement& a, Int k) const;

    TorusElement add(const TorusElement& a, const TorusElement& b) const;
    TorusElement neg(const TorusElement& a) const;
    TorusElement sub(const TorusElement& a, const TorusElement& b) const;

    /// Enumeration in mixed-radix order; index() is its inverse.
    std::vector<GroupElement> elements() const;
    Int index(const GroupElement& g) const;
    GroupElement at(Int idx) const;

    /// Membership in G~*: at least one component is a non-zero integer.
    bool in_torus_star(const TorusElement& x) const;
    /// Float-mode variant of in_torus_star with tolerance on integrality.
    bool in_torus_star_float(const std::vector<double>& coords, double tol) const;

    bool operator==(const AbelianGroup& o) const { return moduli_ == o.moduli_; }

private:
    void check(const GroupElement& g) const;
    void check(const TorusElement& g) const;

    std::vector<Int> moduli_;
    Int order_;
};

/// Phase of the character pairing: sum_j a_j b_j / d_j mod 1, so that the
/// character value is exp(2*pi*i*phase). Symmetric in a and b.
Rat character(const TorusElement& a, const TorusElement& b, const AbelianGroup& G);
Rat character(const GroupElement& a, const GroupElement& b, const AbelianGroup& G);
Rat character(const GroupElement& a, const TorusElement& b, const AbelianGroup& G);

/// Exact value of sum_{y in G} chi_y(x).
Cyc character_sum(const TorusElement& x, const AbelianGroup& G);

/// True iff sum_{y in G} chi_y(x) = 0; equals x in G~*.
bool character_sum_is_zero(const TorusElement& x, const AbelianGroup& G);

std::string to_string(const GroupElement& g);
std::string to_string(const TorusElement& t);

}  // namespace unbias
