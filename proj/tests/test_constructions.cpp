#include <vector>

#include "doctest.h"
#include "unbias/constructions.hpp"
#include "unbias/welch.hpp"

using namespace unbias;

namespace {

// f(x) = x^2 over GF(p^k), read into the additive group
TorusFunction field_square(const FiniteField& F) {
    TorusFunction f{F.additive_group(), F.additive_group(), {}};
    for (const FieldElement& x : F.elements()) f.table.push_back(to_torus(F.to_group(F.mul(x, x))));
    return f;
}

TorusFunction linear_identity(Int n) {
    AbelianGroup G({n});
    TorusFunction f{G, G, {}};
    for (const GroupElement& g : G.elements()) f.table.push_back(to_torus(g));
    return f;
}

}  // namespace

TEST_CASE("character tables") {
    AbelianGroup Z2({2});
    FlatMatrix F2 = fourier_matrix(Z2);
    CHECK(F2.at(0, 0).exact() == Rat(0));
    CHECK(F2.at(0, 1).exact() == Rat(0));
    CHECK(F2.at(1, 0).exact() == Rat(0));
    CHECK(F2.at(1, 1).exact() == Rat(1, 2));

    for (Int n : {3, 5, 8}) {
        AbelianGroup G({n});
        FlatMatrix F = fourier_matrix(G);
        for (Int i = 0; i < n; ++i)
            for (Int j = 0; j < n; ++j)
                CHECK(F.at(static_cast<int>(i), static_cast<int>(j)).exact() ==
                      rat_mod1(Rat(i * j, n)));
    }

    // product group: tensor structure
    AbelianGroup G22({2, 2});
    FlatMatrix F22 = fourier_matrix(G22);
    auto elems = G22.elements();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const auto& a = elems[static_cast<size_t>(i)].coords;
            const auto& b = elems[static_cast<size_t>(j)].coords;
            CHECK(F22.at(i, j).exact() == rat_mod1(Rat(a[0] * b[0] + a[1] * b[1], 2)));
        }
}

TEST_CASE("row-shifted character tables") {
    AbelianGroup Z3({3});
    // shifting by the group itself reproduces the character table
    std::vector<TorusElement> X;
    for (const GroupElement& g : Z3.elements()) X.push_back(to_torus(g));
    CHECK(shifted_fourier(Z3, X) == fourier_matrix(Z3));

    // a pair of rows whose difference has no non-zero integer part is rejected
    AbelianGroup Z2({2});
    std::vector<TorusElement> bad{Z2.torus({Rat(0)}), Z2.torus({Rat(1, 2)})};
    CHECK_THROWS_AS(shifted_fourier(Z2, bad), std::domain_error);
    CHECK_THROWS_AS(shifted_fourier(Z2, std::vector<TorusElement>{Z2.torus({Rat(0)})}),
                    std::invalid_argument);

    // float mode accepts irrational-looking shifts with integral differences
    FlatMatrix M = shifted_fourier(Z2, std::vector<std::vector<double>>{{0.3}, {1.3}});
    CHECK(is_hadamard(M));
    CHECK_FALSE(M.is_exact());
    CHECK_THROWS_AS(shifted_fourier(Z2, std::vector<std::vector<double>>{{0.3}, {0.8}}),
                    std::domain_error);
}

TEST_CASE("homogeneous systems and function phase matrices") {
    AbelianGroup Z3({3});
    FlatMatrix H = fourier_matrix(Z3);
    auto sys = homogeneous_system({FlatMatrix::all_ones(3, 3), H});
    REQUIRE(sys.size() == 3);
    for (const auto& B : sys) {
        CHECK(B.normalized());
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK(B.at(i, j) == H.at(i, j));
    }

    // B_r factors as diag(column r of the phase matrix) times the character table
    TorusFunction f = field_square(FiniteField(3, 1));
    FlatMatrix A = function_phase_matrix(f);
    auto mats = mub_from_function(f);
    REQUIRE(mats.size() == 3);
    for (int r = 0; r < 3; ++r)
        for (int l = 0; l < 3; ++l)
            for (int k = 0; k < 3; ++k)
                CHECK(mats[static_cast<size_t>(r)].at(l, k) == H.at(l, k) + A.at(l, r));
}

TEST_CASE("complete systems from planar functions") {
    TorusFunction f3 = field_square(FiniteField(3, 1));
    CHECK(glavnaja_check(mub_from_function(f3)).ok);

    // the zero function gives n copies of the character table: never complete
    AbelianGroup Z3({3});
    TorusFunction zero{Z3, Z3, std::vector<TorusElement>(3, Z3.torus({Rat(0)}))};
    CHECK_FALSE(glavnaja_check(mub_from_function(zero)).ok);

    // the binary half-square produces the twisted pair
    TorusFunction h = prime_power_planar_function(2);
    auto mats = mub_from_function(h);
    REQUIRE(mats.size() == 2);
    AbelianGroup Z2({2});
    FlatMatrix F2 = fourier_matrix(Z2);
    for (int l = 0; l < 2; ++l)
        for (int k = 0; k < 2; ++k) {
            CHECK(mats[0].at(l, k) == F2.at(l, k));
            CHECK(mats[1].at(l, k).exact() == rat_mod1(F2.at(l, k).exact() + Rat(l, 4)));
        }
    CHECK(is_mub_system(make_system(mats, true)).is_complete);
}

TEST_CASE("difference conditions for squaring over odd prime powers") {
    for (Int n : {3, 5, 7, 9, 27}) {
        Int p;
        int k;
        REQUIRE(prime_power_decompose(n, p, k));
        TorusFunction f = field_square(FiniteField(p, k));
        CHECK(f.integer_valued());
        CHECK(check_planarity(f, PlanarityLevel::uslovie).holds);
        CHECK(check_planarity(f, PlanarityLevel::general).holds);
        CHECK(check_planarity(f, PlanarityLevel::most_general).holds);
    }
}

TEST_CASE("difference conditions for the binary half-square") {
    for (Int n : {2, 4, 8}) {
        TorusFunction f = prime_power_planar_function(n);
        CHECK_FALSE(f.integer_valued());
        CHECK_THROWS_AS(check_planarity(f, PlanarityLevel::uslovie), std::domain_error);
        CHECK(check_planarity(f, PlanarityLevel::general).holds);
        CHECK(check_planarity(f, PlanarityLevel::most_general).holds);
    }
}

TEST_CASE("linear functions violate every difference condition") {
    TorusFunction f = linear_identity(5);
    for (auto level :
         {PlanarityLevel::uslovie, PlanarityLevel::general, PlanarityLevel::most_general}) {
        PlanarityReport rep = check_planarity(f, level);
        CHECK_FALSE(rep.holds);
        REQUIRE(rep.witness.has_value());
        // the witness really is a violating quadruple: g1 + g2 = g3 + g4 but
        // (g1, g2) and (g3, g4) are distinct unordered pairs with equal values
        const auto& w = *rep.witness;
        CHECK(f.domain.add(w[0], w[1]) == f.domain.add(w[2], w[3]));
    }
}

TEST_CASE("named planar families") {
    // alpha = 0 and the degenerate Coulter-Matthews exponent both reduce to squaring
    TorusFunction sq = field_square(FiniteField(3, 1));
    TorusFunction dom = planar_family(PlanarFamily::dembowski_ostrom, {.p = 3, .k = 1, .alpha = 0});
    TorusFunction cm = planar_family(PlanarFamily::coulter_matthews, {.p = 3, .k = 1, .alpha = 1});
    CHECK(dom.table == sq.table);
    CHECK(cm.table == sq.table);

    TorusFunction dom9 = planar_family(PlanarFamily::dembowski_ostrom, {.p = 3, .k = 2, .alpha = 2});
    CHECK(check_planarity(dom9, PlanarityLevel::uslovie).holds);

    TorusFunction cm27 = planar_family(PlanarFamily::coulter_matthews, {.p = 3, .k = 3, .alpha = 1});
    CHECK(check_planarity(cm27, PlanarityLevel::uslovie).holds);

    TorusFunction dy27 = planar_family(PlanarFamily::ding_yuan, {.p = 3, .k = 3, .u = {1, 0, 0}});
    CHECK(check_planarity(dy27, PlanarityLevel::uslovie).holds);
    CHECK(is_perfect_nonlinear(dy27));

    CHECK_THROWS_AS(planar_family(PlanarFamily::dembowski_ostrom, {.p = 2, .k = 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(planar_family(PlanarFamily::dembowski_ostrom, {.p = 3, .k = 2, .alpha = 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(planar_family(PlanarFamily::coulter_matthews, {.p = 5, .k = 1, .alpha = 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(planar_family(PlanarFamily::coulter_matthews, {.p = 3, .k = 2, .alpha = 2}),
                    std::invalid_argument);
    CHECK_THROWS_AS(planar_family(PlanarFamily::ding_yuan, {.p = 3, .k = 2, .u = {1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(planar_family(PlanarFamily::ding_yuan, {.p = 3, .k = 1, .u = {0}}),
                    std::invalid_argument);
}

TEST_CASE("row-difference matrices") {
    // character tables have constant row ratios: never entrywise-orthogonal rows
    for (Int n : {2, 3, 4}) {
        AbelianGroup G({n});
        DifferenceMatrices D = difference_matrices(fourier_matrix(G), G);
        CHECK(D.deltas.size() == static_cast<size_t>(n - 1));
        CHECK_FALSE(D.all_hadamard);
        for (bool h : D.hadamard) CHECK_FALSE(h);
    }

    // planar phase matrices: every row-difference matrix is Hadamard
    for (Int p : {3, 5, 7}) {
        TorusFunction f = field_square(FiniteField(p, 1));
        DifferenceMatrices D = difference_matrices(function_phase_matrix(f), f.domain);
        CHECK(D.all_hadamard);
        for (bool h : D.hadamard) CHECK(h);
    }

    AbelianGroup Z1({1});
    DifferenceMatrices D1 = difference_matrices(FlatMatrix::all_ones(1, 1), Z1);
    CHECK(D1.deltas.empty());
    CHECK(D1.all_hadamard);

    AbelianGroup Z3({3});
    CHECK_THROWS_AS(difference_matrices(FlatMatrix::all_ones(2, 2), Z3), std::invalid_argument);
}

TEST_CASE("prime-power complete systems and non-prime-power rejection") {
    for (Int n : {2, 9}) {
        BasisSystem S = prime_power_mub(n);
        CHECK(S.count() == static_cast<size_t>(n + 1));
        CHECK(S.dim == static_cast<int>(n));
    }
    CHECK_THROWS_AS(prime_power_mub(6), std::domain_error);
    CHECK_THROWS_AS(prime_power_planar_function(12), std::domain_error);
}

TEST_CASE("differential uniformity and perfect nonlinearity") {
    TorusFunction f5 = field_square(FiniteField(5, 1));
    CHECK(is_diff_uniform(f5));
    CHECK(is_perfect_nonlinear(f5));

    AbelianGroup Z3({3});
    TorusFunction zero{Z3, Z3, std::vector<TorusElement>(3, Z3.torus({Rat(0)}))};
    CHECK_FALSE(is_diff_uniform(zero));
    CHECK_FALSE(is_perfect_nonlinear(zero));

    // exhaustive agreement with the strict difference condition over Z_3
    std::vector<GroupElement> vals = Z3.elements();
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                TorusFunction f{Z3, Z3, {to_torus(vals[static_cast<size_t>(a)]),
                                         to_torus(vals[static_cast<size_t>(b)]),
                                         to_torus(vals[static_cast<size_t>(c)])}};
                bool planar = check_planarity(f, PlanarityLevel::uslovie).holds;
                CHECK(is_perfect_nonlinear(f) == planar);
                CHECK(is_diff_uniform(f) == planar);  // |G| = |N|
            }

    TorusFunction frac{Z3, Z3, std::vector<TorusElement>(3, Z3.torus({Rat(1, 2)}))};
    CHECK_THROWS_AS(is_perfect_nonlinear(frac), std::domain_error);
}

TEST_CASE("completeness equals the most general difference condition") {
    // all 64 functions Z_2 -> R_2 with quarter-integer values
    AbelianGroup Z2({2});
    for (Int a = 0; a < 8; ++a)
        for (Int b = 0; b < 8; ++b) {
            TorusFunction f{Z2, Z2, {Z2.torus({Rat(a, 4)}), Z2.torus({Rat(b, 4)})}};
            bool planar = check_planarity(f, PlanarityLevel::most_general).holds;
            bool complete = is_mub_system(make_system(mub_from_function(f), true)).is_complete;
            CHECK(planar == complete);
        }
}

TEST_CASE("normalization at zero") {
    TorusFunction f = prime_power_planar_function(4);
    TorusFunction g = f.normalized_at_zero();
    CHECK(g.value(g.domain.zero()).is_integral());
    for (const GroupElement& x : f.domain.elements())
        CHECK(g.value(x) == f.codomain.sub(f.value(x), f.value(f.domain.zero())));
}
