#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unbias/constructions.hpp"
#include "unbias/group.hpp"

namespace unbias {

/// Finite Abelian group given by an explicit Cayley table. Element 0 is the
/// identity. Keeps a structural descriptor when the table came from a
/// product group or a carry-extension group, for serialization and labels.
struct GroupTable {
    Int order = 0;
    std::vector<std::vector<Int>> add;  // add[a][b]
    std::vector<Int> neg;
    std::vector<std::string> labels;

    std::optional<std::vector<Int>> moduli;  // plain product group Z_d1 x ...

    /// Extension of a product group by a product group with an integer carry
    /// matrix: adding (x;y) and (z;t) carries column j of s into the second
    /// component whenever x_j + z_j wraps around d_j.
    struct CarrySpec {
        std::vector<Int> dom;                // d_1 .. d_m
        std::vector<Int> cod;                // d'_1 .. d'_{m'}
        std::vector<std::vector<Int>> s;     // m' x m
    };
    std::optional<CarrySpec> carry;

    Int sub(Int a, Int b) const { return add[a][neg[b]]; }
    Int element_order(Int g) const;
};

GroupTable group_table(const AbelianGroup& G);
GroupTable carry_group(const std::vector<Int>& dom, const std::vector<Int>& cod,
                       const std::vector<std::vector<Int>>& s);

/// True iff the element indices form a subgroup (0 included, closed).
bool is_subgroup(const GroupTable& K, const std::vector<Int>& elems);
/// Closure of a generating set, sorted by element index.
std::vector<Int> generated_subgroup(const GroupTable& K, const std::vector<Int>& gens);

struct RelativeDifferenceSet {
    GroupTable K;
    std::vector<Int> N;  // element indices, a subgroup of K
    std::vector<Int> R;  // element indices
    Int m = 0, n = 0, r = 0, lambda = 0;
};

struct RdsReport {
    bool valid = false;
    bool semiregular = false;
    bool splitting = false;      // N has a complement subgroup in K
    std::vector<Int> counts;     // difference multiset: counts per element of K
    std::string reason;          // first failure, when invalid
};

/// Brute-force difference counting over all ordered pairs of R: 0 must be
/// hit |R| times, N \ {0} never, and the rest lambda times each.
RdsReport verify_rds(const RelativeDifferenceSet& D);

struct RdsFromPlanar {
    RelativeDifferenceSet D;             // K is the carry group built from s
    std::vector<std::vector<Int>> s;     // carry matrix, m' x m
};

/// Embeds a planarity-satisfying f: G -> N~ (difference condition at the
/// group level) as a semiregular (n,n,n,1) difference set: f is shifted so
/// f(0) = 0, the fractional part {f} determines the carry matrix via
/// {f}(x) = {Sx} with S_ij = s_ij / d_j, and R = {(x; f(x) - Sx)}.
RdsFromPlanar planar_to_rds(const TorusFunction& f);

/// A factor presentation of the forbidden subgroup N: element indices in K
/// generating N with orders equal to the listed moduli, so that mixed-radix
/// coordinates over the moduli enumerate N bijectively.
struct NPresentation {
    std::vector<Int> moduli;      // d'_1 .. d'_{m'}
    std::vector<Int> generators;  // one element index per modulus
};

struct PlanarFromRds {
    TorusFunction f;
    std::vector<std::vector<Int>> s;  // m' x m
    std::vector<Int> domain_moduli;   // cyclic decomposition of K/N
    std::vector<Int> generators;      // coset representatives in K, one per modulus
};

/// Inverts the embedding: decomposes K/N into cyclic factors (coset
/// representatives are the lexicographically smallest elements), reads the
/// carry matrix off d_j * g_j in N, and maps each x to y_x + Sx where y_x
/// comes from the unique element of R over the coset x.
PlanarFromRds rds_to_planar(const RelativeDifferenceSet& D, const NPresentation& pres);

}  // namespace unbias
