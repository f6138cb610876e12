#include "unbias/constructions.hpp"

#include <numeric>
#include <stdexcept>

namespace unbias {

bool TorusFunction::integer_valued() const {
    for (const TorusElement& t : table)
        if (!t.is_integral()) return false;
    return true;
}

TorusFunction TorusFunction::normalized_at_zero() const {
    TorusFunction g{domain, codomain, {}};
    const TorusElement& f0 = table.at(static_cast<size_t>(domain.index(domain.zero())));
    g.table.reserve(table.size());
    for (const TorusElement& t : table) g.table.push_back(codomain.sub(t, f0));
    return g;
}

FlatMatrix fourier_matrix(const AbelianGroup& G) {
    Int n = G.order();
    auto elems = G.elements();
    std::vector<PhaseRow> rows(static_cast<size_t>(n), PhaseRow(static_cast<size_t>(n)));
    for (Int i = 0; i < n; ++i)
        for (Int j = 0; j < n; ++j)
            rows[i][j] = Phase(character(elems[i], elems[j], G));
    return FlatMatrix(std::move(rows));
}

FlatMatrix shifted_fourier(const AbelianGroup& G, const std::vector<TorusElement>& X) {
    if (static_cast<Int>(X.size()) != G.order())
        throw std::invalid_argument("shifted_fourier: |X| must equal |G|");
    for (size_t a = 0; a < X.size(); ++a)
        for (size_t b = a + 1; b < X.size(); ++b)
            if (!G.in_torus_star(G.sub(X[a], X[b])))
                throw std::domain_error("shifted_fourier: difference of rows " +
                                        std::to_string(a) + " and " + std::to_string(b) +
                                        " is not in the torus star " + to_string(X[a]) + " - " +
                                        to_string(X[b]));
    auto elems = G.elements();
    std::vector<PhaseRow> rows;
    rows.reserve(X.size());
    for (const TorusElement& x : X) {
        PhaseRow row(elems.size());
        for (size_t j = 0; j < elems.size(); ++j) row[j] = Phase(character(elems[j], x, G));
        rows.push_back(std::move(row));
    }
    return FlatMatrix(std::move(rows));
}

FlatMatrix shifted_fourier(const AbelianGroup& G, const std::vector<std::vector<double>>& X,
                           double tol) {
    if (static_cast<Int>(X.size()) != G.order())
        throw std::invalid_argument("shifted_fourier: |X| must equal |G|");
    for (const auto& x : X)
        if (x.size() != G.rank())
            throw std::invalid_argument("shifted_fourier: coordinate count mismatch");
    for (size_t a = 0; a < X.size(); ++a)
        for (size_t b = a + 1; b < X.size(); ++b) {
            std::vector<double> diff(G.rank());
            for (size_t i = 0; i < G.rank(); ++i) diff[i] = X[a][i] - X[b][i];
            if (!G.in_torus_star_float(diff, tol))
                throw std::domain_error("shifted_fourier: difference of rows " +
                                        std::to_string(a) + " and " + std::to_string(b) +
                                        " is not in the torus star");
        }
    auto elems = G.elements();
    std::vector<PhaseRow> rows;
    rows.reserve(X.size());
    for (const auto& x : X) {
        PhaseRow row(elems.size());
        for (size_t j = 0; j < elems.size(); ++j) {
            double ph = 0;
            for (size_t i = 0; i < G.rank(); ++i)
                ph += x[i] * static_cast<double>(elems[j].coords[i]) /
                      static_cast<double>(G.moduli()[i]);
            row[j] = Phase::from_double(ph);
        }
        rows.push_back(std::move(row));
    }
    return FlatMatrix(std::move(rows));
}

std::vector<FlatMatrix> homogeneous_system(const HomogeneousSpec& spec) {
    int n = spec.A.nrows();
    if (spec.A.ncols() != n || spec.H.nrows() != n || spec.H.ncols() != n)
        throw std::invalid_argument("homogeneous_system: A and H must be n x n");
    std::vector<FlatMatrix> out;
    out.reserve(n);
    for (int r = 0; r < n; ++r) {
        std::vector<PhaseRow> rows(n, PhaseRow(n));
        for (int l = 0; l < n; ++l)
            for (int k = 0; k < n; ++k) rows[l][k] = spec.A.at(l, r) + spec.H.at(l, k);
        out.emplace_back(std::move(rows), true);
    }
    return out;
}

FlatMatrix function_phase_matrix(const TorusFunction& f) {
    const AbelianGroup& G = f.domain;
    const AbelianGroup& N = f.codomain;
    auto gelems = G.elements();
    auto nelems = N.elements();
    std::vector<PhaseRow> rows(gelems.size(), PhaseRow(nelems.size()));
    for (size_t l = 0; l < gelems.size(); ++l)
        for (size_t r = 0; r < nelems.size(); ++r)
            rows[l][r] = Phase(character(nelems[r], f.value(gelems[l]), N));
    return FlatMatrix(std::move(rows));
}

std::vector<FlatMatrix> mub_from_function(const TorusFunction& f) {
    if (f.domain.order() != f.codomain.order())
        throw std::invalid_argument("mub_from_function: |G| must equal |N|");
    HomogeneousSpec spec{function_phase_matrix(f), fourier_matrix(f.domain)};
    return homogeneous_system(spec);
}

namespace {

// Unordered pairs {g1,g2} with g1+g2 = s, grouped by the sum s.
std::vector<std::vector<std::pair<Int, Int>>> sum_classes(const AbelianGroup& G) {
    Int n = G.order();
    std::vector<std::vector<std::pair<Int, Int>>> classes(static_cast<size_t>(n));
    auto elems = G.elements();
    for (Int i = 0; i < n; ++i)
        for (Int j = i; j < n; ++j)
            classes[static_cast<size_t>(G.index(G.add(elems[i], elems[j])))].emplace_back(i, j);
    return classes;
}

bool in_group_star(const TorusElement& v) {
    return v.is_integral() && !v.to_group().is_zero();
}

}  // namespace

PlanarityReport check_planarity(const TorusFunction& f, PlanarityLevel level) {
    if (level == PlanarityLevel::uslovie && !f.integer_valued())
        throw std::domain_error("check_planarity: strict level requires integer-valued function");
    const AbelianGroup& G = f.domain;
    const AbelianGroup& N = f.codomain;
    auto elems = G.elements();
    auto classes = sum_classes(G);
    PlanarityReport rep;
    for (const auto& cls : classes) {
        for (size_t a = 0; a < cls.size(); ++a) {
            const auto& [i1, i2] = cls[a];
            TorusElement fa = N.add(f.value(elems[i1]), f.value(elems[i2]));
            for (size_t b = a + 1; b < cls.size(); ++b) {
                const auto& [i3, i4] = cls[b];
                TorusElement fb = N.add(f.value(elems[i3]), f.value(elems[i4]));
                TorusElement v = N.sub(fa, fb);
                bool ok = false;
                switch (level) {
                    case PlanarityLevel::uslovie:
                    case PlanarityLevel::general:
                        ok = in_group_star(v);
                        break;
                    case PlanarityLevel::most_general:
                        ok = N.in_torus_star(v);
                        break;
                }
                if (!ok) {
                    rep.holds = false;
                    rep.witness = {elems[i1], elems[i2], elems[i3], elems[i4]};
                    return rep;
                }
            }
        }
    }
    return rep;
}

TorusFunction planar_family(PlanarFamily family, const PlanarFamilyParams& params) {
    Int p = params.p;
    int k = params.k;
    if (!is_prime(p)) throw std::invalid_argument("planar_family: p must be prime");
    if (k < 1) throw std::invalid_argument("planar_family: k must be positive");
    FiniteField F(p, k);
    auto value_of = [&](const FieldElement& x) -> FieldElement {
        switch (family) {
            case PlanarFamily::dembowski_ostrom: {
                if (p == 2)
                    throw std::invalid_argument("planar_family: odd characteristic required");
                if (params.alpha < 0) throw std::invalid_argument("planar_family: alpha >= 0");
                Int g = std::gcd<Int>(k, params.alpha);
                if ((k / g) % 2 == 0)
                    throw std::invalid_argument("planar_family: k/gcd(k,alpha) must be odd");
                Int e = 1;
                for (Int i = 0; i < params.alpha; ++i) e *= p;
                return F.pow(x, e + 1);
            }
            case PlanarFamily::coulter_matthews: {
                if (p != 3) throw std::invalid_argument("planar_family: requires p = 3");
                if (params.alpha % 2 == 0)
                    throw std::invalid_argument("planar_family: alpha must be odd");
                if (std::gcd<Int>(k, params.alpha) != 1)
                    throw std::invalid_argument("planar_family: gcd(k, alpha) must be 1");
                Int e = 1;
                for (Int i = 0; i < params.alpha; ++i) e *= 3;
                return F.pow(x, (e + 1) / 2);
            }
            case PlanarFamily::ding_yuan: {
                if (p != 3) throw std::invalid_argument("planar_family: requires p = 3");
                if (k % 2 == 0) throw std::invalid_argument("planar_family: k must be odd");
                FieldElement u = F.element(params.u.empty() ? std::vector<Int>(k, 0) : params.u);
                if (u.is_zero()) throw std::invalid_argument("planar_family: u must be non-zero");
                FieldElement t = F.sub(F.pow(x, 10), F.mul(u, F.pow(x, 6)));
                return F.sub(t, F.mul(F.mul(u, u), F.mul(x, x)));
            }
        }
        throw std::logic_error("planar_family: unknown family");
    };
    TorusFunction f{F.additive_group(), F.additive_group(), {}};
    for (const FieldElement& x : F.elements())
        f.table.push_back(to_torus(F.to_group(value_of(x))));
    if (!check_planarity(f, PlanarityLevel::uslovie).holds)
        throw std::logic_error("planar_family: constructed function is not planar");
    return f;
}

TorusFunction prime_power_planar_function(Int n) {
    Int p;
    int k;
    if (!prime_power_decompose(n, p, k) || n < 2)
        throw std::domain_error("not a prime power: " + std::to_string(n));
    FiniteField F(p, k);
    TorusFunction f{F.additive_group(), F.additive_group(), {}};
    if (p % 2 == 1) {
        for (const FieldElement& x : F.elements())
            f.table.push_back(to_torus(F.to_group(F.mul(x, x))));
    } else {
        for (const FieldElement& x : F.elements()) f.table.push_back(F.half_square(x));
    }
    return f;
}

DifferenceMatrices difference_matrices(const FlatMatrix& A, const AbelianGroup& G,
                                       const RunConfig& cfg) {
    Int n = G.order();
    if (A.nrows() != n)
        throw std::invalid_argument("difference_matrices: row count must equal |G|");
    DifferenceMatrices out;
    auto elems = G.elements();
    for (Int d = 1; d < n; ++d) {
        const GroupElement& delta = elems[static_cast<size_t>(d)];
        std::vector<PhaseRow> rows;
        rows.reserve(static_cast<size_t>(n));
        for (Int i = 0; i < n; ++i) {
            Int shifted = G.index(G.add(elems[static_cast<size_t>(i)], delta));
            rows.push_back(schur(A.row(static_cast<int>(shifted)),
                                 schur_power(A.row(static_cast<int>(i)), -1)));
        }
        FlatMatrix D(std::move(rows));
        bool had = is_hadamard(D, cfg.tol);
        out.deltas.push_back(delta);
        out.mats.push_back(std::move(D));
        out.hadamard.push_back(had);
        out.all_hadamard = out.all_hadamard && had;
    }
    return out;
}

BasisSystem prime_power_mub(Int n) {
    TorusFunction f = prime_power_planar_function(n);
    std::vector<FlatMatrix> mats = mub_from_function(f);
    BasisSystem S = make_system(std::move(mats), true);
    MubVerdict v = is_mub_system(S);
    if (!v.is_complete)
        throw std::logic_error("prime_power_mub: self-verification failed for n = " +
                               std::to_string(n));
    return S;
}

namespace {

std::vector<std::vector<Int>> derivative_counts(const TorusFunction& f) {
    if (!f.integer_valued())
        throw std::domain_error("differential predicates require a group-valued function");
    const AbelianGroup& G = f.domain;
    const AbelianGroup& N = f.codomain;
    auto gelems = G.elements();
    std::vector<std::vector<Int>> counts(
        static_cast<size_t>(G.order()), std::vector<Int>(static_cast<size_t>(N.order()), 0));
    for (Int ai = 0; ai < G.order(); ++ai) {
        const GroupElement& a = gelems[static_cast<size_t>(ai)];
        for (const GroupElement& x : gelems) {
            GroupElement b = N.sub(f.value(G.add(x, a)).to_group(), f.value(x).to_group());
            ++counts[static_cast<size_t>(ai)][static_cast<size_t>(N.index(b))];
        }
    }
    return counts;
}

}  // namespace

bool is_diff_uniform(const TorusFunction& f) {
    auto counts = derivative_counts(f);
    for (size_t ai = 0; ai < counts.size(); ++ai)
        for (size_t bi = 0; bi < counts[ai].size(); ++bi) {
            if (ai == 0 && bi == 0) continue;  // a = 0, b = 0 excluded
            if (ai == 0) continue;             // a = 0, b != 0 has no solutions anyway
            if (counts[ai][bi] > 1) return false;
        }
    return true;
}

bool is_perfect_nonlinear(const TorusFunction& f) {
    if (f.domain.order() % f.codomain.order() != 0)
        throw std::invalid_argument("is_perfect_nonlinear: |N| must divide |G|");
    Int m = f.domain.order() / f.codomain.order();
    auto counts = derivative_counts(f);
    for (size_t ai = 1; ai < counts.size(); ++ai)
        for (size_t bi = 0; bi < counts[ai].size(); ++bi)
            if (counts[ai][bi] != m) return false;
    return true;
}

}  // namespace unbias
