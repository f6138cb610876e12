#include "unbias/lgraph.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace unbias {

PairGraph::PairGraph(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("PairGraph: need at least one row");
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) verts_.emplace_back(i, j);
    adj_.assign(verts_.size(), std::vector<bool>(verts_.size(), false));
}

int PairGraph::vertex_index(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= n_) throw std::out_of_range("PairGraph: bad vertex");
    // offset of block i, then j - i
    return i * n_ - i * (i - 1) / 2 + (j - i);
}

void PairGraph::set_edge(int a, int b, bool present) {
    if (a == b) throw std::invalid_argument("PairGraph: no loops");
    adj_[a][b] = adj_[b][a] = present;
}

int PairGraph::edge_count() const {
    int c = 0;
    for (size_t a = 0; a < adj_.size(); ++a)
        for (size_t b = a + 1; b < adj_.size(); ++b)
            if (adj_[a][b]) ++c;
    return c;
}

const PairGraph::EdgeWeight& PairGraph::weight(int a, int b) const {
    if (a > b) throw std::invalid_argument("PairGraph: weights are stored lexicographically");
    auto it = weights_.find({a, b});
    if (it == weights_.end()) throw std::out_of_range("PairGraph: no weight for edge");
    return it->second;
}

void PairGraph::set_weight(int a, int b, EdgeWeight w) {
    if (a >= b) throw std::invalid_argument("PairGraph: weights are stored lexicographically");
    weights_[{a, b}] = std::move(w);
}

PairGraph PairGraph::union_with(const PairGraph& o) const {
    if (n_ != o.n_) throw std::invalid_argument("PairGraph: vertex set mismatch");
    PairGraph u(n_);
    for (int a = 0; a < vertex_count(); ++a)
        for (int b = a + 1; b < vertex_count(); ++b)
            if (adj_[a][b] || o.adj_[a][b]) u.set_edge(a, b, true);
    return u;
}

std::string PairGraph::to_dot(bool weighted) const {
    std::ostringstream os;
    os << "graph pairgraph {\n";
    for (const auto& [i, j] : verts_) os << "  \"" << i << "," << j << "\";\n";
    for (int a = 0; a < vertex_count(); ++a)
        for (int b = a + 1; b < vertex_count(); ++b) {
            if (!adj_[a][b]) continue;
            os << "  \"" << verts_[a].first << "," << verts_[a].second << "\" -- \""
               << verts_[b].first << "," << verts_[b].second << "\"";
            if (weighted && weights_.count({a, b})) {
                const auto& w = weights_.at({a, b});
                os << " [label=\"" << w.value.real() << (w.value.imag() < 0 ? "-" : "+")
                   << std::abs(w.value.imag()) << "i\"]";
            }
            os << ";\n";
        }
    os << "}\n";
    return os.str();
}

namespace {

std::vector<PhaseRow> pair_products(const FlatMatrix& B) {
    std::vector<PhaseRow> prods;
    for (int i = 0; i < B.nrows(); ++i)
        for (int j = i; j < B.nrows(); ++j) prods.push_back(schur(B.row(i), B.row(j)));
    return prods;
}

}  // namespace

PairGraph k_graph(const FlatMatrix& B, const RunConfig& cfg) {
    PairGraph G(B.nrows());
    auto prods = pair_products(B);
    bool exact = B.is_exact() && cfg.backend == Backend::exact;
    for (int a = 0; a < G.vertex_count(); ++a)
        for (int b = a + 1; b < G.vertex_count(); ++b) {
            PairGraph::EdgeWeight w;
            bool zero;
            if (exact) {
                Cyc z = inner_exact(prods[a], prods[b]);
                zero = z.is_zero();
                w.value = z.to_complex();
                w.exact = std::move(z);
            } else {
                w.value = inner_float(prods[a], prods[b]);
                zero = std::abs(w.value) < cfg.tol * static_cast<double>(prods[a].size());
            }
            G.set_weight(a, b, std::move(w));
            G.set_edge(a, b, zero);
        }
    return G;
}

PairGraph l_graph(const FlatMatrix& A, const RunConfig& cfg) {
    PairGraph G(A.nrows());
    auto prods = pair_products(A);
    bool exact = A.is_exact() && cfg.backend == Backend::exact;
    for (int a = 0; a < G.vertex_count(); ++a)
        for (int b = a + 1; b < G.vertex_count(); ++b) {
            bool zero = exact ? inner_exact(prods[a], prods[b]).is_zero()
                              : std::abs(inner_float(prods[a], prods[b])) <
                                    cfg.tol * static_cast<double>(prods[a].size());
            G.set_edge(a, b, zero);
        }
    return G;
}

CoverageReport covers_complete(const PairGraph& LA, const PairGraph& LH) {
    if (LA.nrows() != LH.nrows() || LA.vertex_count() != LH.vertex_count())
        throw std::invalid_argument("covers_complete: vertex set mismatch");
    CoverageReport rep;
    for (int a = 0; a < LA.vertex_count(); ++a)
        for (int b = a + 1; b < LA.vertex_count(); ++b)
            if (!LA.adjacent(a, b) && !LH.adjacent(a, b)) {
                rep.covers = false;
                rep.missing.emplace_back(a, b);
            }
    return rep;
}

namespace {

class CliqueSolver {
public:
    explicit CliqueSolver(const PairGraph& g) : g_(g), best_(0) {}

    int solve() {
        int v = g_.vertex_count();
        std::vector<int> cand(v);
        for (int i = 0; i < v; ++i) cand[i] = i;
        // initial order by degree, descending
        std::vector<int> deg(v, 0);
        for (int a = 0; a < v; ++a)
            for (int b = 0; b < v; ++b)
                if (a != b && g_.adjacent(a, b)) ++deg[a];
        std::sort(cand.begin(), cand.end(), [&](int a, int b) { return deg[a] > deg[b]; });
        expand(cand, 0);
        return best_;
    }

private:
    // greedy colouring bound; returns candidates sorted by colour, ascending
    std::vector<std::pair<int, int>> colour(const std::vector<int>& cand) {
        std::vector<std::pair<int, int>> out;  // (vertex, colour)
        std::vector<std::vector<int>> classes;
        for (int v : cand) {
            bool placed = false;
            for (size_t c = 0; c < classes.size() && !placed; ++c) {
                bool conflict = false;
                for (int u : classes[c])
                    if (g_.adjacent(u, v)) {
                        conflict = true;
                        break;
                    }
                if (!conflict) {
                    classes[c].push_back(v);
                    placed = true;
                }
            }
            if (!placed) classes.push_back({v});
        }
        for (size_t c = 0; c < classes.size(); ++c)
            for (int v : classes[c]) out.emplace_back(v, static_cast<int>(c) + 1);
        return out;
    }

    void expand(const std::vector<int>& cand, int size) {
        if (cand.empty()) {
            best_ = std::max(best_, size);
            return;
        }
        auto coloured = colour(cand);
        for (size_t idx = coloured.size(); idx-- > 0;) {
            auto [v, bound] = coloured[idx];
            if (size + bound <= best_) return;
            std::vector<int> next;
            for (size_t j = 0; j < idx; ++j)
                if (g_.adjacent(coloured[j].first, v)) next.push_back(coloured[j].first);
            if (size + 1 > best_) best_ = size + 1;
            if (!next.empty()) expand(next, size + 1);
        }
    }

    const PairGraph& g_;
    int best_;
};

class ColourSolver {
public:
    ColourSolver(const PairGraph& g, int k) : g_(g), k_(k) {
        colours_.assign(g.vertex_count(), -1);
    }

    bool feasible() { return place(0); }

private:
    // DSATUR-style: pick the uncoloured vertex with most distinctly
    // coloured neighbours; symmetry broken by allowing at most one fresh
    // colour per step.
    bool place(int done) {
        int v = g_.vertex_count();
        if (done == v) return true;
        int pick = -1, bestsat = -1, bestdeg = -1;
        for (int i = 0; i < v; ++i) {
            if (colours_[i] >= 0) continue;
            std::vector<bool> seen(k_, false);
            int sat = 0, deg = 0;
            for (int j = 0; j < v; ++j) {
                if (!g_.adjacent(i, j)) continue;
                ++deg;
                if (colours_[j] >= 0 && !seen[colours_[j]]) {
                    seen[colours_[j]] = true;
                    ++sat;
                }
            }
            if (sat > bestsat || (sat == bestsat && deg > bestdeg)) {
                pick = i;
                bestsat = sat;
                bestdeg = deg;
            }
        }
        int maxused = -1;
        for (int i = 0; i < v; ++i) maxused = std::max(maxused, colours_[i]);
        for (int c = 0; c < std::min(k_, maxused + 2); ++c) {
            bool ok = true;
            for (int j = 0; j < v && ok; ++j)
                if (g_.adjacent(pick, j) && colours_[j] == c) ok = false;
            if (!ok) continue;
            colours_[pick] = c;
            if (place(done + 1)) return true;
            colours_[pick] = -1;
        }
        return false;
    }

    const PairGraph& g_;
    int k_;
    std::vector<int> colours_;
};

}  // namespace

int clique_number(const PairGraph& G, int cap) {
    if (G.vertex_count() > cap)
        throw std::domain_error("clique_number: graph too large for exact solver");
    if (G.edge_count() == 0) return 1;
    return CliqueSolver(G).solve();
}

int chromatic_number(const PairGraph& G, int cap) {
    if (G.vertex_count() > cap)
        throw std::domain_error("chromatic_number: graph too large for exact solver");
    int omega = clique_number(G, cap);
    for (int k = omega; k <= G.vertex_count(); ++k)
        if (ColourSolver(G, k).feasible()) return k;
    return G.vertex_count();
}

}  // namespace unbias
