#include "unbias/rds.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace unbias {

Int GroupTable::element_order(Int g) const {
    Int acc = g, ord = 1;
    while (acc != 0) {
        acc = add[acc][g];
        ++ord;
    }
    return ord;
}

GroupTable group_table(const AbelianGroup& G) {
    GroupTable T;
    T.order = G.order();
    T.moduli = G.moduli();
    auto elems = G.elements();
    T.add.assign(static_cast<size_t>(T.order), std::vector<Int>(static_cast<size_t>(T.order)));
    T.neg.resize(static_cast<size_t>(T.order));
    T.labels.reserve(static_cast<size_t>(T.order));
    for (Int a = 0; a < T.order; ++a) {
        T.labels.push_back(to_string(elems[a]));
        T.neg[a] = G.index(G.neg(elems[a]));
        for (Int b = 0; b < T.order; ++b) T.add[a][b] = G.index(G.add(elems[a], elems[b]));
    }
    return T;
}

GroupTable carry_group(const std::vector<Int>& dom, const std::vector<Int>& cod,
                       const std::vector<std::vector<Int>>& s) {
    AbelianGroup G(dom), N(cod);
    if (s.size() != cod.size())
        throw std::invalid_argument("carry_group: carry matrix needs one row per codomain factor");
    for (const auto& row : s)
        if (row.size() != dom.size())
            throw std::invalid_argument(
                "carry_group: carry matrix needs one column per domain factor");
    GroupTable T;
    T.order = G.order() * N.order();
    T.carry = GroupTable::CarrySpec{dom, cod, s};
    auto gelems = G.elements();
    auto nelems = N.elements();
    auto idx = [&](Int gi, Int ni) { return gi * N.order() + ni; };
    T.add.assign(static_cast<size_t>(T.order), std::vector<Int>(static_cast<size_t>(T.order)));
    T.neg.assign(static_cast<size_t>(T.order), -1);
    T.labels.resize(static_cast<size_t>(T.order));
    for (Int gi = 0; gi < G.order(); ++gi)
        for (Int ni = 0; ni < N.order(); ++ni) {
            std::ostringstream os;
            os << '(';
            for (size_t i = 0; i < dom.size(); ++i) os << (i ? "," : "") << gelems[gi].coords[i];
            os << ';';
            for (size_t i = 0; i < cod.size(); ++i) os << (i ? "," : "") << nelems[ni].coords[i];
            os << ')';
            T.labels[idx(gi, ni)] = os.str();
        }
    for (Int g1 = 0; g1 < G.order(); ++g1)
        for (Int n1 = 0; n1 < N.order(); ++n1)
            for (Int g2 = 0; g2 < G.order(); ++g2)
                for (Int n2 = 0; n2 < N.order(); ++n2) {
                    GroupElement x = G.add(gelems[g1], gelems[g2]);
                    std::vector<Int> y(cod.size());
                    for (size_t i = 0; i < cod.size(); ++i) {
                        Int b = nelems[n1].coords[i] + nelems[n2].coords[i];
                        for (size_t j = 0; j < dom.size(); ++j)
                            if (gelems[g1].coords[j] + gelems[g2].coords[j] >= dom[j])
                                b += s[i][j];
                        y[i] = b;
                    }
                    Int res = idx(G.index(x), N.index(N.element(std::move(y))));
                    T.add[idx(g1, n1)][idx(g2, n2)] = res;
                    if (res == 0) T.neg[idx(g1, n1)] = idx(g2, n2);
                }
    for (Int a = 0; a < T.order; ++a)
        if (T.neg[a] < 0) throw std::logic_error("carry_group: element without inverse");
    return T;
}

std::vector<Int> generated_subgroup(const GroupTable& K, const std::vector<Int>& gens) {
    std::vector<bool> in(static_cast<size_t>(K.order), false);
    in[0] = true;
    std::vector<Int> frontier{0};
    while (!frontier.empty()) {
        std::vector<Int> next;
        for (Int h : frontier)
            for (Int g : gens) {
                Int e = K.add[h][g];
                if (!in[e]) {
                    in[e] = true;
                    next.push_back(e);
                }
            }
        frontier = std::move(next);
    }
    std::vector<Int> out;
    for (Int e = 0; e < K.order; ++e)
        if (in[e]) out.push_back(e);
    return out;
}

bool is_subgroup(const GroupTable& K, const std::vector<Int>& elems) {
    std::vector<bool> in(static_cast<size_t>(K.order), false);
    for (Int e : elems) {
        if (e < 0 || e >= K.order || in[e]) return false;
        in[e] = true;
    }
    if (!in[0]) return false;
    for (Int a : elems)
        for (Int b : elems)
            if (!in[K.add[a][b]]) return false;
    return true;
}

namespace {

// depth-first search for a complement of N: a subgroup H with trivial
// intersection and |H| * |N| = |K|
bool complement_search(const GroupTable& K, const std::vector<bool>& inN, Int target,
                       std::vector<Int>& gens, Int from) {
    auto H = generated_subgroup(K, gens);
    for (Int e : H)
        if (e != 0 && inN[e]) return false;
    if (static_cast<Int>(H.size()) == target) return true;
    if (target % static_cast<Int>(H.size()) != 0) return false;
    for (Int g = from; g < K.order; ++g) {
        if (std::binary_search(H.begin(), H.end(), g) || inN[g]) continue;
        gens.push_back(g);
        if (complement_search(K, inN, target, gens, g + 1)) return true;
        gens.pop_back();
    }
    return false;
}

}  // namespace

RdsReport verify_rds(const RelativeDifferenceSet& D) {
    const GroupTable& K = D.K;
    if (!is_subgroup(K, D.N)) throw std::invalid_argument("verify_rds: N is not a subgroup of K");
    RdsReport rep;
    rep.counts.assign(static_cast<size_t>(K.order), 0);
    std::vector<bool> inN(static_cast<size_t>(K.order), false);
    for (Int e : D.N) inN[e] = true;
    for (Int e : D.R)
        if (e < 0 || e >= K.order) throw std::invalid_argument("verify_rds: R not contained in K");

    auto fail = [&](std::string why) {
        rep.valid = false;
        if (rep.reason.empty()) rep.reason = std::move(why);
    };
    rep.valid = true;
    Int nN = static_cast<Int>(D.N.size());
    Int nR = static_cast<Int>(D.R.size());
    if (K.order != D.m * D.n) fail("|K| != n*m");
    if (nN != D.n) fail("|N| != n");
    if (nR != D.r) fail("|R| != r");

    for (Int r1 : D.R)
        for (Int r2 : D.R) ++rep.counts[K.sub(r1, r2)];
    for (Int b = 0; b < K.order; ++b) {
        Int expect = b == 0 ? nR : (inN[b] ? 0 : D.lambda);
        if (rep.counts[b] != expect)
            fail("difference " + K.labels[b] + " hit " + std::to_string(rep.counts[b]) +
                 " times, expected " + std::to_string(expect));
    }
    rep.semiregular = rep.valid && D.r == D.m;
    if (rep.valid) {
        std::vector<Int> gens;
        rep.splitting = complement_search(K, inN, K.order / nN, gens, 1);
    }
    return rep;
}

RdsFromPlanar planar_to_rds(const TorusFunction& f) {
    PlanarityReport pl = check_planarity(f, PlanarityLevel::general);
    if (!pl.holds) {
        std::string w;
        for (const GroupElement& g : *pl.witness) w += (w.empty() ? "" : " ") + to_string(g);
        throw std::domain_error("planar_to_rds: planarity fails at quadruple " + w);
    }
    const AbelianGroup& G = f.domain;
    const AbelianGroup& N = f.codomain;
    TorusFunction f0 = f.normalized_at_zero();
    const auto& dom = G.moduli();
    const auto& cod = N.moduli();
    size_t m = dom.size(), mp = cod.size();

    // {f}(e_j) determines column j of the carry matrix: s_ij = d_j * frac
    std::vector<std::vector<Int>> s(mp, std::vector<Int>(m, 0));
    for (size_t j = 0; j < m; ++j) {
        std::vector<Int> e(m, 0);
        e[j] = dom[j] > 1 ? 1 : 0;
        const TorusElement& fe = f0.value(G.element(e));
        for (size_t i = 0; i < mp; ++i) {
            Rat v = rat_mod1(fe.coords[i]) * dom[j];
            if (!is_integer(v))
                throw std::domain_error(
                    "planar_to_rds: fractional parts are not multiples of 1/d_j");
            s[i][j] = v.numerator();
        }
    }
    auto Sx_coord = [&](const GroupElement& x, size_t i) {
        Rat v = 0;
        for (size_t j = 0; j < m; ++j) v += Rat(s[i][j] * x.coords[j], dom[j]);
        return v;
    };
    // the fractional part of f must be the linear map induced by s
    for (const GroupElement& x : G.elements())
        for (size_t i = 0; i < mp; ++i)
            if (rat_mod1(f0.value(x).coords[i]) != rat_mod1(Sx_coord(x, i)))
                throw std::logic_error("planar_to_rds: fractional part is not linear");

    RdsFromPlanar out;
    out.s = s;
    out.D.K = carry_group(dom, cod, s);
    for (Int ni = 0; ni < N.order(); ++ni) out.D.N.push_back(ni);
    for (const GroupElement& x : G.elements()) {
        std::vector<Int> y(mp);
        for (size_t i = 0; i < mp; ++i) {
            Rat v = f0.value(x).coords[i] - Sx_coord(x, i);
            if (!is_integer(v)) throw std::logic_error("planar_to_rds: residue not integral");
            y[i] = v.numerator();
        }
        out.D.R.push_back(G.index(x) * N.order() + N.index(N.element(std::move(y))));
    }
    out.D.m = G.order();
    out.D.n = N.order();
    out.D.r = G.order();
    out.D.lambda = 1;
    RdsReport rep = verify_rds(out.D);
    if (!rep.valid)
        throw std::logic_error("planar_to_rds: constructed set fails verification: " + rep.reason);
    return out;
}

namespace {

// coset id per element and lexicographically smallest representative per coset
void cosets_of(const GroupTable& K, const std::vector<Int>& N, std::vector<Int>& cid,
               std::vector<Int>& reps) {
    cid.assign(static_cast<size_t>(K.order), -1);
    reps.clear();
    for (Int e = 0; e < K.order; ++e) {
        if (cid[e] >= 0) continue;
        Int id = static_cast<Int>(reps.size());
        reps.push_back(e);
        for (Int y : N) cid[K.add[e][y]] = id;
    }
}

// cyclic decomposition of a GroupTable with descending invariant factors;
// returns the moduli and one generator per factor, found by depth-first
// search in element-index order (deterministic)
bool decompose_search(const GroupTable& Q, std::vector<Int>& moduli, std::vector<Int>& gens) {
    Int covered = 1;
    for (Int d : moduli) covered *= d;
    if (covered == Q.order) return true;
    Int prev = moduli.empty() ? Q.order : moduli.back();
    for (Int g = 1; g < Q.order; ++g) {
        Int d = Q.element_order(g);
        if (d < 2 || d > prev || prev % d != 0 || (Q.order / covered) % d != 0) continue;
        // mixed-radix sums over the extended generator list must be distinct
        gens.push_back(g);
        moduli.push_back(d);
        std::set<Int> seen;
        bool distinct = true;
        Int total = covered * d;
        for (Int idx = 0; idx < total && distinct; ++idx) {
            Int rem = idx, sum = 0;
            for (size_t t = gens.size(); t-- > 0;) {
                Int c = rem % moduli[t];
                rem /= moduli[t];
                for (Int rep = 0; rep < c; ++rep) sum = Q.add[sum][gens[t]];
            }
            distinct = seen.insert(sum).second;
        }
        if (distinct && decompose_search(Q, moduli, gens)) return true;
        gens.pop_back();
        moduli.pop_back();
    }
    return false;
}

}  // namespace

PlanarFromRds rds_to_planar(const RelativeDifferenceSet& D, const NPresentation& pres) {
    RdsReport rep = verify_rds(D);
    if (!rep.valid) throw std::domain_error("rds_to_planar: invalid difference set: " + rep.reason);
    if (!rep.semiregular || D.n != D.m || D.lambda != 1)
        throw std::domain_error("rds_to_planar: need a semiregular (n,n,n,1) set");
    const GroupTable& K = D.K;

    // validate the factor presentation of N
    if (pres.moduli.size() != pres.generators.size())
        throw std::invalid_argument("rds_to_planar: presentation moduli/generator mismatch");
    AbelianGroup Ngrp(pres.moduli);
    if (Ngrp.order() != D.n)
        throw std::invalid_argument("rds_to_planar: presentation order != |N|");
    std::vector<Int> nindex(static_cast<size_t>(K.order), -1);  // element -> index in Ngrp
    std::vector<Int> nelem(static_cast<size_t>(Ngrp.order()));  // index in Ngrp -> element
    {
        auto coords = Ngrp.elements();
        std::vector<bool> inN(static_cast<size_t>(K.order), false);
        for (Int e : D.N) inN[e] = true;
        for (Int yi = 0; yi < Ngrp.order(); ++yi) {
            Int e = 0;
            for (size_t i = 0; i < pres.moduli.size(); ++i)
                for (Int rep = 0; rep < coords[yi].coords[i]; ++rep)
                    e = K.add[e][pres.generators[i]];
            if (!inN[e] || nindex[e] >= 0)
                throw std::invalid_argument("rds_to_planar: presentation does not enumerate N");
            nindex[e] = yi;
            nelem[yi] = e;
        }
    }

    std::vector<Int> cid, reps;
    cosets_of(K, D.N, cid, reps);

    // quotient table on cosets
    GroupTable Q;
    Q.order = static_cast<Int>(reps.size());
    Q.add.assign(static_cast<size_t>(Q.order), std::vector<Int>(static_cast<size_t>(Q.order)));
    Q.neg.resize(static_cast<size_t>(Q.order));
    for (Int a = 0; a < Q.order; ++a) {
        Q.neg[a] = cid[K.neg[reps[a]]];
        for (Int b = 0; b < Q.order; ++b) Q.add[a][b] = cid[K.add[reps[a]][reps[b]]];
    }

    PlanarFromRds out;
    if (Q.order == 1) {
        out.domain_moduli = {1};
        out.generators = {reps[0]};
    } else {
        std::vector<Int> qgens;
        if (!decompose_search(Q, out.domain_moduli, qgens))
            throw std::logic_error("rds_to_planar: quotient decomposition failed");
        for (Int qg : qgens) out.generators.push_back(reps[qg]);
    }
    const std::vector<Int>& dmod = out.domain_moduli;
    size_t m = dmod.size(), mp = pres.moduli.size();
    AbelianGroup G(dmod);

    // carry matrix off d_j * g_j, expressed in presentation coordinates
    out.s.assign(mp, std::vector<Int>(m, 0));
    for (size_t j = 0; j < m; ++j) {
        Int e = 0;
        for (Int rep = 0; rep < dmod[j]; ++rep) e = K.add[e][out.generators[j]];
        if (nindex[e] < 0) throw std::logic_error("rds_to_planar: d_j * g_j is not in N");
        GroupElement y = Ngrp.at(nindex[e]);
        for (size_t i = 0; i < mp; ++i) out.s[i][j] = y.coords[i];
    }

    // phi(x; y) = sum x_j g_j + y, an isomorphism from the carry group onto K
    std::vector<Int> gpart(static_cast<size_t>(G.order()));
    for (Int xi = 0; xi < G.order(); ++xi) {
        GroupElement x = G.at(xi);
        Int e = 0;
        for (size_t j = 0; j < m; ++j)
            for (Int rep = 0; rep < x.coords[j]; ++rep) e = K.add[e][out.generators[j]];
        gpart[xi] = e;
    }

    // unique element of R over each coset of the quotient, coset identified
    // through phi's first component
    std::vector<Int> r_over(static_cast<size_t>(G.order()), -1);
    for (Int r : D.R) {
        Int x = -1;
        for (Int xi = 0; xi < G.order() && x < 0; ++xi)
            if (cid[gpart[xi]] == cid[r]) x = xi;
        if (x < 0 || r_over[x] >= 0)
            throw std::domain_error("rds_to_planar: R does not hit every coset exactly once");
        r_over[x] = r;
    }

    out.f.domain = G;
    out.f.codomain = Ngrp;
    for (Int xi = 0; xi < G.order(); ++xi) {
        if (r_over[xi] < 0)
            throw std::domain_error("rds_to_planar: R does not hit every coset exactly once");
        // y with phi(x; y) = r_x
        Int ye = K.add[K.neg[gpart[xi]]][r_over[xi]];
        if (nindex[ye] < 0) throw std::logic_error("rds_to_planar: residue is not in N");
        GroupElement y = Ngrp.at(nindex[ye]);
        GroupElement x = G.at(xi);
        std::vector<Rat> coords(mp);
        for (size_t i = 0; i < mp; ++i) {
            Rat v(y.coords[i]);
            for (size_t j = 0; j < m; ++j) v += Rat(out.s[i][j] * x.coords[j], dmod[j]);
            coords[i] = rat_mod(v, pres.moduli[i]);
        }
        out.f.table.push_back(TorusElement{std::move(coords)});
    }
    PlanarityReport pl = check_planarity(out.f, PlanarityLevel::general);
    if (!pl.holds) throw std::logic_error("rds_to_planar: recovered function is not planar");
    return out;
}

}  // namespace unbias
