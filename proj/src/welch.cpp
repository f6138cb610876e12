#include "unbias/welch.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace unbias {

Int binomial(Int n, Int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (Int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Int multinomial_of_multiset(const std::vector<int>& multiset) {
    Int k = static_cast<Int>(multiset.size());
    Int r = 1;
    for (Int i = 1; i <= k; ++i) r *= i;
    std::map<int, Int> mult;
    for (int v : multiset) ++mult[v];
    for (auto& [v, m] : mult)
        for (Int i = 1; i <= m; ++i) r /= i;
    return r;
}

Int max_mub_bound(Int n) { return n + 1; }

Rat hypothetical_mub_excess_lhs(Int n) { return Rat(n * (n + 1) * (n + 2) * (2 * n + 1), 2); }

Rat hypothetical_mub_excess_rhs(Int n) { return Rat(n * n * (n + 2) * (n + 2)); }

WelchReport welch_report(const VectorSystem& X, int k, const RunConfig& cfg) {
    if (k < 1) throw std::invalid_argument("welch_report: k must be >= 1");
    if (X.size() == 0) throw std::invalid_argument("welch_report: empty system");
    WelchReport rep;
    rep.k = k;
    Int binom = binomial(static_cast<Int>(X.dim) + k - 1, k);
    if (X.backend == Backend::exact) {
        rep.backend = Backend::exact;
        Cyc lhs = Cyc::from_rat(0);
        Cyc norm_sum = Cyc::from_rat(0);
        size_t m = X.exact.size();
        for (size_t i = 0; i < m; ++i) {
            const ExactVec& u = X.exact[i];
            norm_sum += exact_norm2(u).pow(k);
            // diagonal term
            lhs += exact_abs2_inner(u, u).pow(k);
            for (size_t j = i + 1; j < m; ++j) {
                Cyc t = exact_abs2_inner(u, X.exact[j]).pow(k);
                lhs += t + t;  // (i,j) and (j,i)
            }
        }
        lhs = lhs.scaled(Rat(binom));
        Cyc rhs = norm_sum * norm_sum;
        Cyc margin = lhs - rhs;
        rep.attained = margin.is_zero();
        rep.lhs_rat = lhs.rational();
        rep.rhs_rat = rhs.rational();
        rep.margin_rat = margin.rational();
        rep.lhs = lhs.to_complex().real();
        rep.rhs = rhs.to_complex().real();
        rep.margin = margin.to_complex().real();
    } else {
        rep.backend = Backend::floating;
        double lhs = 0, norm_sum = 0;
        size_t m = X.flt.size();
        for (size_t i = 0; i < m; ++i) {
            norm_sum += std::pow(float_norm2(X.flt[i]), k);
            lhs += std::pow(std::norm(float_inner(X.flt[i], X.flt[i])), k);
            for (size_t j = i + 1; j < m; ++j)
                lhs += 2.0 * std::pow(std::norm(float_inner(X.flt[i], X.flt[j])), k);
        }
        rep.lhs = static_cast<double>(binom) * lhs;
        rep.rhs = norm_sum * norm_sum;
        rep.margin = rep.lhs - rep.rhs;
        rep.attained = std::abs(rep.margin) < cfg.tol * std::max(1.0, rep.rhs);
    }
    return rep;
}

namespace {

void multisets_rec(int n, int k, int start, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
    if (k == 0) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < n; ++i) {
        cur.push_back(i);
        multisets_rec(n, k - 1, i, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> k_multisets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    multisets_rec(n, k, 0, cur, out);
    return out;
}

}  // namespace

WSet build_wset(const VectorSystem& X, int k) {
    if (k < 1) throw std::invalid_argument("build_wset: k must be >= 1");
    WSet W;
    W.k = k;
    W.backend = X.backend;
    int n = X.dim;
    auto multisets = k_multisets(n, k);
    if (X.backend == Backend::exact) {
        int order = 1;
        for (const ExactVec& v : X.exact) order = static_cast<int>(std::lcm<Int>(order, v.nroot));
        W.nroot = order;
        size_t m = X.exact.size();
        for (const ExactVec& v : X.exact) {
            Rat q(1);
            for (int i = 0; i < k; ++i) q *= v.scale2;
            W.colscale2k.push_back(q);
        }
        for (auto& ms : multisets) {
            WSet::Entry e;
            e.rows = ms;
            e.multinomial = multinomial_of_multiset(ms);
            e.eprod.reserve(m);
            for (size_t c = 0; c < m; ++c) {
                ExactVec vc = X.exact[c];
                vc.lift_to(order);
                CycPoly p{1};
                for (int r : ms) p = cyc_mul(p, vc.entries[r], order);
                e.eprod.push_back(std::move(p));
            }
            W.entries.push_back(std::move(e));
        }
    } else {
        size_t m = X.flt.size();
        for (auto& ms : multisets) {
            WSet::Entry e;
            e.rows = ms;
            e.multinomial = multinomial_of_multiset(ms);
            e.fprod.resize(m);
            for (size_t c = 0; c < m; ++c) {
                std::complex<double> p = 1;
                for (int r : ms) p *= X.flt[c][r];
                e.fprod[c] = p;
            }
            W.entries.push_back(std::move(e));
        }
    }
    return W;
}

Cyc wset_inner(const WSet& W, size_t a, size_t b) {
    const auto& ea = W.entries.at(a);
    const auto& eb = W.entries.at(b);
    Cyc sum = Cyc::from_rat(0);
    for (size_t c = 0; c < ea.eprod.size(); ++c) {
        CycPoly t = cyc_mul(cyc_conj(ea.eprod[c], W.nroot), eb.eprod[c], W.nroot);
        sum += Cyc(W.nroot, std::move(t)).scaled(W.colscale2k[c]);
    }
    return sum;
}

Cyc wset_norm2(const WSet& W, size_t a) {
    return wset_inner(W, a, a).scaled(Rat(W.entries.at(a).multinomial));
}

std::complex<double> wset_inner_float(const WSet& W, size_t a, size_t b) {
    const auto& ea = W.entries.at(a);
    const auto& eb = W.entries.at(b);
    std::complex<double> sum = 0;
    for (size_t c = 0; c < ea.fprod.size(); ++c) sum += std::conj(ea.fprod[c]) * eb.fprod[c];
    return sum;
}

double wset_norm2_float(const WSet& W, size_t a) {
    return static_cast<double>(W.entries.at(a).multinomial) *
           wset_inner_float(W, a, a).real();
}

AttainResult attains_welch(const VectorSystem& X, int k, const RunConfig& cfg) {
    WSet W = build_wset(X, k);
    AttainResult res;
    size_t m = W.entries.size();
    if (X.backend == Backend::exact) {
        Cyc first = wset_norm2(W, 0);
        for (size_t a = 1; a < m; ++a) {
            if (!(wset_norm2(W, a) == first)) {
                res.attained = false;
                res.witness = {W.entries[0].rows, W.entries[a].rows};
                res.reason = "unequal scaled lengths";
                return res;
            }
        }
        for (size_t a = 0; a < m; ++a)
            for (size_t b = a + 1; b < m; ++b)
                if (!wset_inner(W, a, b).is_zero()) {
                    res.attained = false;
                    res.witness = {W.entries[a].rows, W.entries[b].rows};
                    res.reason = "non-orthogonal W-set pair";
                    return res;
                }
    } else {
        double scale = 0;
        for (size_t a = 0; a < m; ++a) scale = std::max(scale, wset_norm2_float(W, a));
        double tol = cfg.tol * std::max(1.0, scale);
        double first = wset_norm2_float(W, 0);
        for (size_t a = 1; a < m; ++a)
            if (std::abs(wset_norm2_float(W, a) - first) > tol) {
                res.attained = false;
                res.witness = {W.entries[0].rows, W.entries[a].rows};
                res.reason = "unequal scaled lengths";
                return res;
            }
        for (size_t a = 0; a < m; ++a)
            for (size_t b = a + 1; b < m; ++b)
                if (std::abs(wset_inner_float(W, a, b)) > tol) {
                    res.attained = false;
                    res.witness = {W.entries[a].rows, W.entries[b].rows};
                    res.reason = "non-orthogonal W-set pair";
                    return res;
                }
    }
    return res;
}

bool is_t_design(const VectorSystem& X, int t, const RunConfig& cfg) {
    for (int k = 1; k <= t; ++k)
        if (!attains_welch(X, k, cfg).attained) return false;
    return true;
}

}  // namespace unbias
