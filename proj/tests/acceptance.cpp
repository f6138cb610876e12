// Acceptance suite: one pass/fail line per criterion, non-zero exit if any
// criterion fails. All checks run the exact backend unless stated otherwise.
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "unbias/constructions.hpp"
#include "unbias/json_io.hpp"
#include "unbias/lgraph.hpp"
#include "unbias/mubcheck.hpp"
#include "unbias/rds.hpp"
#include "unbias/welch.hpp"

using namespace unbias;

namespace {

int g_failures = 0;

void report(int idx, const char* what, bool ok) {
    std::printf("criterion %2d: %s - %s\n", idx, ok ? "PASS" : "FAIL", what);
    if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

FlatMatrix random_flat(int nrows, int ncols, std::mt19937_64& rng, Int den = 12) {
    std::uniform_int_distribution<Int> num(0, den - 1);
    std::vector<PhaseRow> rows(static_cast<size_t>(nrows));
    for (auto& r : rows)
        for (int j = 0; j < ncols; ++j) r.emplace_back(Rat(num(rng), den));
    return FlatMatrix(std::move(rows));
}

TorusFunction field_square(Int p, int k) {
    FiniteField F(p, k);
    TorusFunction f{F.additive_group(), F.additive_group(), {}};
    for (const FieldElement& x : F.elements()) f.table.push_back(to_torus(F.to_group(F.mul(x, x))));
    return f;
}

const std::vector<Int> kPrimePowers{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27};

}  // namespace

int main() {
    std::vector<BasisSystem> systems;

    // 1. construction completeness for all supported prime powers, < 30 s
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        for (Int n : kPrimePowers) {
            BasisSystem S = prime_power_mub(n);
            ok = ok && S.count() == static_cast<size_t>(n + 1);
            MubVerdict v = is_mub_system(S);
            ok = ok && v.is_mub && v.is_complete;
            systems.push_back(std::move(S));
        }
        ok = ok && seconds_since(t0) < 30.0;
        report(1, "complete system construction for prime powers up to 27", ok);
    }

    // 2. Welch k = 2 equality with value n^2 (n+1)^2 on each complete system
    {
        bool ok = true;
        for (size_t s = 0; s < systems.size(); ++s) {
            Int n = kPrimePowers[s];
            WelchReport rep = welch_report(systems[s].union_vectors(), 2);
            Rat expect(n * n * (n + 1) * (n + 1));
            ok = ok && rep.attained && rep.lhs_rat == expect && rep.rhs_rat == expect;
        }
        report(2, "k = 2 equality at n^2 (n+1)^2 for complete systems", ok);
    }

    // 3. Welch k = 1 equality with value n^2 for a single orthonormal basis
    {
        bool ok = true;
        for (Int n = 2; n <= 16; ++n) {
            VectorSystem X = system_from_flat(fourier_matrix(AbelianGroup({n})));
            WelchReport rep = welch_report(X, 1);
            ok = ok && rep.attained && rep.lhs_rat == Rat(n * n) && rep.rhs_rat == Rat(n * n);
        }
        report(3, "k = 1 equality at n^2 for a single basis", ok);
    }

    // 4. the three completeness verdicts agree on randomized and perturbed systems
    {
        bool ok = true;
        std::mt19937_64 rng(2024);
        std::uniform_int_distribution<int> dims(2, 4);
        for (int t = 0; t < 100; ++t) {
            int n = dims(rng);
            std::vector<FlatMatrix> mats;
            for (int r = 0; r < n; ++r) mats.push_back(random_flat(n, n, rng));
            bool complete = is_mub_system(make_system(mats, true)).is_complete;
            bool attained = attains_welch(make_system(mats, true).union_vectors(), 2).attained;
            bool stacked = glavnaja_check(mats).ok;
            ok = ok && complete == attained && attained == stacked;
        }
        for (Int n : {2, 3, 4, 5, 7}) {
            auto mats = mub_from_function(prime_power_planar_function(n));
            bool complete = is_mub_system(make_system(mats, true)).is_complete;
            bool attained = attains_welch(make_system(mats, true).union_vectors(), 2).attained;
            bool stacked = glavnaja_check(mats).ok;
            ok = ok && complete && attained && stacked;
            Int N = mats[0].root_order();
            mats[0].set(0, 0, mats[0].at(0, 0) + Phase{Rat(1, 4 * N)});
            ok = ok && !is_mub_system(make_system(mats, true)).is_complete;
            ok = ok && !attains_welch(make_system(mats, true).union_vectors(), 2).attained;
            ok = ok && !glavnaja_check(mats).ok;
        }
        report(4, "pairwise agreement of the three completeness criteria", ok);
    }

    // 5. strict Welch deficit for n + 2 bases, plus structural rejection
    {
        bool ok = true;
        for (Int n = 2; n <= 1000; ++n)
            ok = ok && hypothetical_mub_excess_lhs(n) < hypothetical_mub_excess_rhs(n);
        FlatMatrix F2 = fourier_matrix(AbelianGroup({2}));
        MubVerdict v = is_mub_system(make_system({F2, F2, F2}, true));
        ok = ok && !v.is_mub && !v.failures.empty() && v.failures[0].basis2 < 0;
        report(5, "no room for n + 2 unbiased bases", ok);
    }

    // 6. density-matrix orthogonality equals the unbiasedness angle
    {
        bool ok = true;
        std::mt19937_64 rng(606);
        std::uniform_int_distribution<Int> num(0, 11);
        for (Int n = 2; n <= 6; ++n) {
            for (int t = 0; t < 1000; ++t) {
                std::vector<PhaseRow> xr(static_cast<size_t>(n)), yr(static_cast<size_t>(n));
                for (Int i = 0; i < n; ++i) {
                    xr[static_cast<size_t>(i)].emplace_back(Rat(num(rng), 12));
                    yr[static_cast<size_t>(i)].emplace_back(Rat(num(rng), 12));
                }
                ExactVec x = exact_flat_column(FlatMatrix(std::move(xr)), 0);
                ExactVec y = exact_flat_column(FlatMatrix(std::move(yr)), 0);
                bool expect = exact_abs2_inner(x, y) == Cyc::from_rat(Rat(1, n));
                ok = ok && density_orthogonal(x, y) == expect;
                ok = ok && density_orthogonal(x.to_float(), y.to_float(), 1e-9) == expect;
            }
        }
        report(6, "density orthogonality matches the unbiasedness angle", ok);
    }

    // 7. sum-class adjacency for small groups; coverage equals completeness,
    //    including corrupted variants
    {
        bool ok = true;
        std::vector<std::vector<Int>> presentations;
        {
            std::vector<Int> cur;
            auto rec = [&](auto&& self, Int prod, Int minf) -> void {
                if (prod > 1) presentations.push_back(cur);
                for (Int f = minf; prod * f <= 12; ++f) {
                    cur.push_back(f);
                    self(self, prod * f, f);
                    cur.pop_back();
                }
            };
            rec(rec, 1, 2);
        }
        for (const auto& mods : presentations) {
            AbelianGroup G(mods);
            PairGraph L = l_graph(fourier_matrix(G));
            auto elems = G.elements();
            const auto& verts = L.vertices();
            for (int a = 0; a < L.vertex_count() && ok; ++a)
                for (int b = a + 1; b < L.vertex_count(); ++b) {
                    auto [i, j] = verts[static_cast<size_t>(a)];
                    auto [k, l] = verts[static_cast<size_t>(b)];
                    bool same =
                        G.add(elems[static_cast<size_t>(i)], elems[static_cast<size_t>(j)]) ==
                        G.add(elems[static_cast<size_t>(k)], elems[static_cast<size_t>(l)]);
                    if (L.adjacent(a, b) == same) {
                        ok = false;
                        break;
                    }
                }
        }
        std::mt19937_64 rng(707);
        for (Int n : {2, 3, 4, 5}) {
            TorusFunction f = prime_power_planar_function(n);
            FlatMatrix H = fourier_matrix(f.domain);
            FlatMatrix A0 = function_phase_matrix(f);
            std::uniform_int_distribution<int> pos(0, static_cast<int>(n) - 1);
            std::uniform_int_distribution<Int> shift(1, 11);
            for (int variant = 0; variant <= 20; ++variant) {
                FlatMatrix A = A0;
                if (variant > 0)
                    A.set(pos(rng), pos(rng), A.at(pos(rng), pos(rng)) + Phase{Rat(shift(rng), 12)});
                bool covers = covers_complete(l_graph(A), l_graph(H)).covers;
                auto mats = homogeneous_system({A, H});
                bool complete = is_mub_system(make_system(mats, true)).is_complete;
                ok = ok && covers == complete;
            }
        }
        report(7, "product-orthogonality graphs: sum-class rule and coverage", ok);
    }

    // 8. clique and chromatic numbers equal n, < 5 s
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        for (Int n = 2; n <= 6; ++n) {
            PairGraph L = l_graph(fourier_matrix(AbelianGroup({n})));
            ok = ok && clique_number(L) == static_cast<int>(n) &&
                 chromatic_number(L) == static_cast<int>(n);
        }
        for (Int n : {2, 3, 4, 5}) {
            FlatMatrix H = mub_from_function(prime_power_planar_function(n))[0];
            ok = ok && clique_number(l_graph(H)) == static_cast<int>(n);
        }
        ok = ok && seconds_since(t0) < 5.0;
        report(8, "clique and chromatic numbers equal the matrix order", ok);
    }

    // 9. difference conditions for the named constructions, < 2 s each
    {
        bool ok = true;
        auto timed_holds = [&](const TorusFunction& f, PlanarityLevel lvl) {
            auto t0 = std::chrono::steady_clock::now();
            bool h = check_planarity(f, lvl).holds;
            return h && seconds_since(t0) < 2.0;
        };
        for (Int n : {3, 5, 7, 9, 27}) {
            Int p;
            int k;
            prime_power_decompose(n, p, k);
            ok = ok && timed_holds(field_square(p, k), PlanarityLevel::uslovie);
        }
        for (Int n : {2, 4, 8})
            ok = ok && timed_holds(prime_power_planar_function(n), PlanarityLevel::general);
        ok = ok && timed_holds(planar_family(PlanarFamily::coulter_matthews,
                                             {.p = 3, .k = 3, .alpha = 1}),
                               PlanarityLevel::uslovie);
        ok = ok && timed_holds(planar_family(PlanarFamily::ding_yuan,
                                             {.p = 3, .k = 3, .u = {1, 0, 0}}),
                               PlanarityLevel::uslovie);
        for (Int p : {2, 3, 5, 7}) {
            AbelianGroup G({p});
            TorusFunction lin{G, G, {}};
            for (const GroupElement& g : G.elements()) lin.table.push_back(to_torus(g));
            ok = ok && !check_planarity(lin, PlanarityLevel::uslovie).holds;
        }
        report(9, "difference-condition suite for the named function families", ok);
    }

    // 10. row-difference matrices: Hadamard for planar phases, never for Fourier
    {
        bool ok = true;
        for (Int p : {3, 5, 7}) {
            TorusFunction f = field_square(p, 1);
            DifferenceMatrices D = difference_matrices(function_phase_matrix(f), f.domain);
            ok = ok && D.all_hadamard;
        }
        for (Int n = 2; n <= 5; ++n) {
            AbelianGroup G({n});
            DifferenceMatrices D = difference_matrices(fourier_matrix(G), G);
            for (bool h : D.hadamard) ok = ok && !h;
        }
        report(10, "row-difference matrices separate planar from linear phases", ok);
    }

    // 11. relative difference sets: worked examples, embedding, recovery
    {
        bool ok = true;
        GroupTable Z4 = group_table(AbelianGroup({4}));
        RdsReport r1 = verify_rds({Z4, {0, 2}, {0, 1}, 2, 2, 2, 1});
        ok = ok && r1.valid && r1.semiregular && !r1.splitting;

        AbelianGroup G33({3, 3});
        GroupTable K33 = group_table(G33);
        std::vector<Int> N, R;
        for (Int y = 0; y < 3; ++y) N.push_back(G33.index(G33.element({0, y})));
        for (Int x = 0; x < 3; ++x) R.push_back(G33.index(G33.element({x, (x * x) % 3})));
        RdsReport r2 = verify_rds({K33, N, R, 3, 3, 3, 1});
        ok = ok && r2.valid && r2.semiregular && r2.splitting;

        for (Int p : {3, 5, 7})
            ok = ok && verify_rds(planar_to_rds(field_square(p, 1)).D).valid;

        PlanarFromRds rec = rds_to_planar({Z4, {0, 2}, {0, 1}, 2, 2, 2, 1}, {{2}, {2}});
        ok = ok && rec.f.table.size() == 2 && rec.f.table[0] == rec.f.codomain.torus({Rat(0)}) &&
             rec.f.table[1] == rec.f.codomain.torus({Rat(1, 2)});

        for (Int n : {2, 3, 4, 5, 7, 8, 9}) {
            RdsFromPlanar E = planar_to_rds(prime_power_planar_function(n));
            ok = ok && verify_rds(E.D).valid;
            const auto& spec = *E.D.K.carry;
            NPresentation P{spec.cod, {}};
            Int ncod = 1;
            for (Int d : spec.cod) ncod *= d;
            Int stride = ncod;
            for (size_t j = 0; j < spec.cod.size(); ++j) {
                stride /= spec.cod[j];
                P.generators.push_back(stride);
            }
            PlanarFromRds back = rds_to_planar(E.D, P);
            ok = ok && check_planarity(back.f, PlanarityLevel::general).holds;
        }
        report(11, "relative difference set suite", ok);
    }

    // 12. exact and float backends agree; float margins within 1e-8
    {
        bool ok = true;
        for (Int n : {2, 3, 4, 5, 8, 9}) {
            auto mats = mub_from_function(prime_power_planar_function(n));
            for (int corrupt = 0; corrupt <= 1; ++corrupt) {
                if (corrupt) {
                    Int N = mats[0].root_order();
                    mats[0].set(0, 0, mats[0].at(0, 0) + Phase{Rat(1, 4 * N)});
                }
                BasisSystem S = make_system(mats, true);
                BasisSystem Sf = S.to_float_system();
                MubVerdict ve = is_mub_system(S), vf = is_mub_system(Sf);
                ok = ok && ve.is_mub == vf.is_mub && ve.is_complete == vf.is_complete;
                RunConfig fcfg{.backend = Backend::floating};
                ok = ok && glavnaja_check(mats).ok == glavnaja_check(mats, fcfg).ok;
                VectorSystem X = S.union_vectors();
                VectorSystem Xf = X.to_float_system();
                for (int k = 1; k <= 2; ++k) {
                    WelchReport re = welch_report(X, k), rf = welch_report(Xf, k);
                    ok = ok && re.attained == rf.attained;
                    ok = ok && std::abs(re.margin - rf.margin) <= 1e-8 * std::max(1.0, re.rhs);
                    ok = ok &&
                         attains_welch(X, k).attained == attains_welch(Xf, k, fcfg).attained;
                }
            }
        }
        report(12, "exact and float backends agree on every verdict", ok);
    }

    if (g_failures) std::printf("%d criteria FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
