#include <set>

#include "doctest.h"
#include "unbias/constructions.hpp"
#include "unbias/field.hpp"

using namespace unbias;

TEST_CASE("prime and prime-power detection") {
    CHECK(is_prime(2));
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
    Int p;
    int k;
    CHECK(prime_power_decompose(27, p, k));
    CHECK(p == 3);
    CHECK(k == 3);
    CHECK(prime_power_decompose(16, p, k));
    CHECK(p == 2);
    CHECK(k == 4);
    CHECK_FALSE(prime_power_decompose(6, p, k));
    CHECK_FALSE(prime_power_decompose(12, p, k));
}

TEST_CASE("GF(3) arithmetic") {
    FiniteField F(3, 1);
    CHECK(F.mul(F.from_int(2), F.from_int(2)) == F.from_int(1));
    CHECK(F.add(F.from_int(2), F.from_int(2)) == F.from_int(1));
}

TEST_CASE("GF(4) with h = x^2+x+1: x*x = x+1") {
    FiniteField F(2, 2, {1, 1, 1});
    FieldElement x = F.element({0, 1});
    CHECK(F.mul(x, x) == F.element({1, 1}));
}

TEST_CASE("inverses in GF(8)") {
    FiniteField F(2, 3);
    for (const FieldElement& a : F.elements()) {
        if (a.is_zero()) continue;
        CHECK(F.mul(a, F.inv(a)) == F.one());
    }
    CHECK_THROWS_AS(F.inv(F.zero()), std::domain_error);
}

TEST_CASE("irreducibility checks and default modulus") {
    CHECK(is_irreducible_mod_p({1, 1, 1}, 2));       // x^2+x+1
    CHECK_FALSE(is_irreducible_mod_p({1, 0, 1}, 2)); // x^2+1 = (x+1)^2
    CHECK_THROWS_AS(FiniteField(2, 2, std::vector<Int>{1, 0, 1}), std::invalid_argument);
    // the default degree-3 modulus over GF(2) is irreducible and monic
    FiniteField F(2, 3);
    CHECK(F.modulus().size() == 4);
    CHECK(F.modulus().back() == 1);
    CHECK(is_irreducible_mod_p(F.modulus(), 2));
}

TEST_CASE("Frobenius squaring is a bijection in characteristic 2") {
    for (int k = 1; k <= 4; ++k) {
        FiniteField F(2, k);
        std::set<FieldElement> images;
        for (const FieldElement& a : F.elements()) images.insert(F.mul(a, a));
        CHECK(static_cast<Int>(images.size()) == F.order());
    }
}

TEST_CASE("odd-characteristic squaring is 2-to-1 on nonzero elements") {
    for (Int p : {3, 5, 7, 11}) {
        FiniteField F(p, 1);
        std::vector<Int> hits(static_cast<size_t>(p), 0);
        for (const FieldElement& a : F.elements())
            if (!a.is_zero()) ++hits[static_cast<size_t>(F.index(F.mul(a, a)))];
        for (Int v = 1; v < p; ++v) {
            Int c = hits[static_cast<size_t>(v)];
            CHECK((c == 0 || c == 2));
        }
    }
}

TEST_CASE("half-square values over GF(2) and GF(4)") {
    FiniteField F2(2, 1);
    CHECK(F2.half_square(F2.zero()) == F2.additive_group().torus({Rat(0)}));
    CHECK(F2.half_square(F2.one()) == F2.additive_group().torus({Rat(1, 2)}));

    FiniteField F4(2, 2, {1, 1, 1});
    TorusFunction f{F4.additive_group(), F4.additive_group(), {}};
    for (const FieldElement& x : F4.elements()) f.table.push_back(F4.half_square(x));
    // the difference condition is the oracle pinning down the lift convention
    CHECK(check_planarity(f, PlanarityLevel::general).holds);
    for (const TorusElement& t : f.table)
        for (const Rat& c : t.coords) CHECK(c.denominator() <= 2);
}

TEST_CASE("half-square rejects odd characteristic") {
    FiniteField F(3, 1);
    CHECK_THROWS_AS(F.half_square(F.one()), std::domain_error);
}

TEST_CASE("additive group bridging round-trips") {
    FiniteField F(3, 2);
    AbelianGroup G = F.additive_group();
    CHECK(G.moduli() == std::vector<Int>{3, 3});
    for (const FieldElement& a : F.elements()) {
        CHECK(F.from_group(F.to_group(a)) == a);
        CHECK(G.index(F.to_group(a)) == F.index(a));
    }
}
