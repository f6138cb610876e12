#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "unbias/constructions.hpp"
#include "unbias/mubcheck.hpp"
#include "unbias/welch.hpp"

using namespace unbias;

namespace {

// the order-2 Fourier matrix with the second row multiplied by i
FlatMatrix f2_twisted() {
    std::vector<PhaseRow> rows{
        {Phase{Rat(0)}, Phase{Rat(0)}},
        {Phase{Rat(1, 4)}, Phase{Rat(3, 4)}},
    };
    return FlatMatrix(std::move(rows));
}

ExactVec random_flat_column(int n, std::mt19937_64& rng, Int den = 12) {
    std::uniform_int_distribution<Int> num(0, den - 1);
    std::vector<PhaseRow> rows(static_cast<size_t>(n));
    for (auto& r : rows) r.emplace_back(Rat(num(rng), den));
    return exact_flat_column(FlatMatrix(std::move(rows)), 0);
}

std::vector<Rat> angle_spectrum(const BasisSystem& S) {
    std::vector<Rat> out;
    for (size_t b1 = 0; b1 < S.count(); ++b1)
        for (size_t b2 = b1 + 1; b2 < S.count(); ++b2)
            for (const ExactVec& x : S.ebases[b1])
                for (const ExactVec& y : S.ebases[b2]) out.push_back(angle_sq(x, y));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("complete system in dimension 2") {
    AbelianGroup Z2({2});
    BasisSystem S = make_system({fourier_matrix(Z2), f2_twisted()}, true);
    MubVerdict v = is_mub_system(S);
    CHECK(v.is_mub);
    CHECK(v.is_complete);
    CHECK(v.failures.empty());
}

TEST_CASE("repeated identity is not unbiased") {
    BasisSystem S;
    S.dim = 2;
    S.ebases = {identity_basis(2), identity_basis(2)};
    MubVerdict v = is_mub_system(S);
    CHECK_FALSE(v.is_mub);
    REQUIRE_FALSE(v.failures.empty());
    CHECK(v.failures[0].basis1 == 0);
    CHECK(v.failures[0].basis2 == 1);
}

TEST_CASE("prime-power constructions verify as complete") {
    for (Int n : {3, 4, 5}) {
        BasisSystem S = prime_power_mub(n);
        CHECK(S.count() == static_cast<size_t>(n + 1));
        MubVerdict v = is_mub_system(S);
        CHECK(v.is_mub);
        CHECK(v.is_complete);
    }
}

TEST_CASE("more than n + 1 bases is rejected structurally") {
    AbelianGroup Z2({2});
    FlatMatrix F = fourier_matrix(Z2);
    BasisSystem S = make_system({F, F, F}, true);  // 4 bases in dimension 2
    MubVerdict v = is_mub_system(S);
    CHECK_FALSE(v.is_mub);
    REQUIRE_FALSE(v.failures.empty());
    CHECK(v.failures[0].basis2 < 0);  // structural, not a pair failure
}

TEST_CASE("standard-form normalization") {
    AbelianGroup Z3({3});
    FlatMatrix F3 = fourier_matrix(Z3);

    // already standard: first basis is the identity and stays so
    BasisSystem S = make_system({F3}, true);
    BasisSystem N = normalize_to_muh(S);
    CHECK(N.form == BasisForm::muh_standard);
    CHECK(angle_spectrum(N) == angle_spectrum(S));
    for (int j = 0; j < 3; ++j)
        CHECK(angle_sq(N.ebases[0][static_cast<size_t>(j)], exact_unit_column(3, j)) == Rat(1));

    // Fourier basis first: normalization maps it to the identity
    BasisSystem S2;
    S2.dim = 3;
    S2.ebases = {basis_from_flat(F3), identity_basis(3)};
    BasisSystem N2 = normalize_to_muh(S2);
    CHECK(angle_spectrum(N2) == angle_spectrum(S2));
    for (int j = 0; j < 3; ++j)
        CHECK(angle_sq(N2.ebases[0][static_cast<size_t>(j)], exact_unit_column(3, j)) == Rat(1));
    // the second basis became flat (conjugate Fourier): every entry angle 1/3
    for (const ExactVec& y : N2.ebases[1])
        for (int j = 0; j < 3; ++j)
            CHECK(angle_sq(exact_unit_column(3, j), y) == Rat(1, 3));
}

TEST_CASE("density-matrix orthogonality equals the unbiasedness angle") {
    AbelianGroup Z3({3});
    FlatMatrix F3 = fourier_matrix(Z3);
    ExactVec e0 = exact_unit_column(3, 0);
    CHECK_FALSE(density_orthogonal(e0, e0));
    CHECK(density_orthogonal(e0, exact_flat_column(F3, 1)));
    CHECK_FALSE(density_orthogonal(e0, exact_unit_column(3, 1)));  // orthogonal, not unbiased

    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<int> dim(2, 6);
    for (int t = 0; t < 1000; ++t) {
        int n = dim(rng);
        ExactVec x = random_flat_column(n, rng), y = random_flat_column(n, rng);
        bool expect = exact_abs2_inner(x, y) == Cyc::from_rat(Rat(1, n));
        CHECK(density_orthogonal(x, y) == expect);
        CHECK(density_orthogonal(x.to_float(), y.to_float()) == expect);
    }
}

TEST_CASE("stacked-matrix criterion") {
    CHECK(glavnaja_check({fourier_matrix(AbelianGroup({2})), f2_twisted()}).ok);
    for (Int n : {3, 5, 7}) {
        auto mats = mub_from_function(prime_power_planar_function(n));
        CHECK(glavnaja_check(mats).ok);
        // repeating one Hadamard n times never works for n >= 2
        std::vector<FlatMatrix> rep(static_cast<size_t>(n), fourier_matrix(AbelianGroup({n})));
        GlavnajaResult bad = glavnaja_check(rep);
        CHECK_FALSE(bad.ok);
        CHECK(bad.witness.has_value());
    }
}

TEST_CASE("the three completeness criteria agree and flip together") {
    auto mats = mub_from_function(prime_power_planar_function(3));
    BasisSystem S = make_system(mats, true);
    CHECK(is_mub_system(S).is_complete);
    CHECK(glavnaja_check(mats).ok);
    CHECK(welch_report(S.union_vectors(), 2).attained);

    // a single-phase perturbation breaks all three at once
    auto bad = mats;
    Int N = bad[0].root_order();
    bad[0].set(1, 1, bad[0].at(1, 1) + Phase{Rat(1, 4 * N)});
    BasisSystem Sb = make_system(bad, true);
    CHECK_FALSE(is_mub_system(Sb).is_complete);
    CHECK_FALSE(glavnaja_check(bad).ok);
    CHECK_FALSE(welch_report(Sb.union_vectors(), 2).attained);
}
