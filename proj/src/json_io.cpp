#include "unbias/json_io.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace unbias {

Json rat_to_json(const Rat& q) { return Json::array({q.numerator(), q.denominator()}); }

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<Int>());
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("json: rational must be [num, den]");
    return Rat(j[0].get<Int>(), j[1].get<Int>());
}

Json group_to_json(const AbelianGroup& G) { return Json{{"moduli", G.moduli()}}; }

AbelianGroup group_from_json(const Json& j) {
    return AbelianGroup(j.at("moduli").get<std::vector<Int>>());
}

Json field_to_json(const FiniteField& F) {
    return Json{{"p", F.p()}, {"k", F.k()}, {"h", F.modulus()}};
}

FiniteField field_from_json(const Json& j) {
    Int p = j.at("p").get<Int>();
    int k = j.at("k").get<int>();
    if (j.contains("h")) return FiniteField(p, k, j["h"].get<std::vector<Int>>());
    return FiniteField(p, k);
}

Json matrix_to_json(const FlatMatrix& M) {
    Json out;
    if (M.is_exact()) {
        Int nroot = M.root_order();
        out["nroot"] = nroot;
        Json phases = Json::array();
        for (int i = 0; i < M.nrows(); ++i) {
            Json row = Json::array();
            for (int j = 0; j < M.ncols(); ++j) {
                Rat v = M.at(i, j).exact() * nroot;
                row.push_back(v.numerator());
            }
            phases.push_back(std::move(row));
        }
        out["phases"] = std::move(phases);
    } else {
        Json re = Json::array(), im = Json::array();
        for (int i = 0; i < M.nrows(); ++i) {
            Json rrow = Json::array(), irow = Json::array();
            for (int j = 0; j < M.ncols(); ++j) {
                auto z = M.at(i, j).to_complex();
                rrow.push_back(z.real());
                irow.push_back(z.imag());
            }
            re.push_back(std::move(rrow));
            im.push_back(std::move(irow));
        }
        out["re"] = std::move(re);
        out["im"] = std::move(im);
    }
    out["normalized"] = M.normalized();
    return out;
}

FlatMatrix matrix_from_json(const Json& j) {
    std::vector<PhaseRow> rows;
    if (j.contains("phases")) {
        Int nroot = j.at("nroot").get<Int>();
        if (nroot < 1) throw std::invalid_argument("json: nroot must be positive");
        for (const Json& r : j["phases"]) {
            PhaseRow row;
            for (const Json& a : r) row.emplace_back(Rat(a.get<Int>(), nroot));
            rows.push_back(std::move(row));
        }
    } else if (j.contains("re") && j.contains("im")) {
        const Json& re = j["re"];
        const Json& im = j["im"];
        if (re.size() != im.size()) throw std::invalid_argument("json: re/im shape mismatch");
        for (size_t i = 0; i < re.size(); ++i) {
            if (re[i].size() != im[i].size())
                throw std::invalid_argument("json: re/im shape mismatch");
            PhaseRow row;
            for (size_t c = 0; c < re[i].size(); ++c) {
                double x = re[i][c].get<double>(), y = im[i][c].get<double>();
                if (std::abs(std::hypot(x, y) - 1.0) > 1e-6)
                    throw std::invalid_argument("json: float matrix entry is not unit modulus");
                row.push_back(Phase::from_double(std::atan2(y, x) / (2 * std::numbers::pi)));
            }
            rows.push_back(std::move(row));
        }
    } else {
        throw std::invalid_argument("json: matrix needs phases or re/im");
    }
    size_t cols = rows.empty() ? 0 : rows[0].size();
    for (const PhaseRow& r : rows)
        if (r.size() != cols) throw std::invalid_argument("json: ragged matrix");
    return FlatMatrix(std::move(rows), j.value("normalized", false));
}

Json system_to_json(const std::vector<FlatMatrix>& mats, bool with_identity) {
    Json bases = Json::array();
    if (with_identity) {
        int n = mats.empty() ? 0 : mats[0].nrows();
        bases.push_back(Json{{"identity", n}});
    }
    for (const FlatMatrix& m : mats) bases.push_back(matrix_to_json(m));
    return Json{{"form", with_identity ? "muh_standard" : "raw"}, {"bases", std::move(bases)}};
}

BasisSystem system_from_json(const Json& j, const RunConfig& cfg) {
    if (!j.contains("bases") || !j["bases"].is_array() || j["bases"].empty())
        throw std::invalid_argument("json: system needs a non-empty bases array");
    std::string form = j.value("form", "raw");
    if (form != "raw" && form != "muh_standard")
        throw std::invalid_argument("json: unknown system form " + form);

    struct Entry {
        bool identity = false;
        int n = 0;
        FlatMatrix mat;
    };
    std::vector<Entry> entries;
    bool exact = cfg.backend == Backend::exact;
    int dim = -1;
    for (const Json& b : j["bases"]) {
        Entry e;
        if (b.contains("identity")) {
            e.identity = true;
            e.n = b["identity"].get<int>();
        } else {
            e.mat = matrix_from_json(b);
            if (e.mat.nrows() != e.mat.ncols())
                throw std::invalid_argument("json: system bases must be square");
            e.n = e.mat.nrows();
            exact = exact && e.mat.is_exact();
        }
        if (dim < 0) dim = e.n;
        if (e.n != dim) throw std::invalid_argument("json: basis dimension mismatch");
        entries.push_back(std::move(e));
    }
    if (dim < 1) throw std::invalid_argument("json: empty basis");

    BasisSystem S;
    S.dim = dim;
    S.form = form == "muh_standard" ? BasisForm::muh_standard : BasisForm::raw;
    S.backend = exact ? Backend::exact : Backend::floating;
    for (const Entry& e : entries) {
        if (exact) {
            if (e.identity) {
                S.ebases.push_back(identity_basis(dim));
            } else {
                std::vector<ExactVec> basis;
                for (int c = 0; c < dim; ++c) {
                    ExactVec col = exact_flat_column(e.mat, c);
                    if (!e.mat.normalized()) col.scale2 = Rat(1);
                    basis.push_back(std::move(col));
                }
                S.ebases.push_back(std::move(basis));
            }
        } else {
            std::vector<CVec> basis(dim, CVec(dim, 0.0));
            if (e.identity) {
                for (int c = 0; c < dim; ++c) basis[c][c] = 1.0;
            } else {
                double scale = e.mat.normalized() ? 1.0 / std::sqrt(double(dim)) : 1.0;
                for (int c = 0; c < dim; ++c)
                    for (int r = 0; r < dim; ++r)
                        basis[c][r] = scale * e.mat.at(r, c).to_complex();
            }
            S.fbases.push_back(std::move(basis));
        }
    }
    return S;
}

namespace {

Json torus_value_to_json(const TorusElement& t) {
    Json out = Json::array();
    for (const Rat& c : t.coords) out.push_back(rat_to_json(c));
    return out;
}

TorusElement torus_value_from_json(const Json& j, const AbelianGroup& G) {
    std::vector<Rat> coords;
    for (const Json& c : j) coords.push_back(rat_from_json(c));
    return G.torus(std::move(coords));
}

}  // namespace

Json function_to_json(const TorusFunction& f) {
    Json table = Json::array();
    for (const GroupElement& g : f.domain.elements())
        table.push_back(Json::array({g.coords, torus_value_to_json(f.value(g))}));
    return Json{{"group", group_to_json(f.domain)},
                {"codomain", group_to_json(f.codomain)},
                {"table", std::move(table)}};
}

TorusFunction function_from_json(const Json& j) {
    TorusFunction f{group_from_json(j.at("group")), group_from_json(j.at("codomain")), {}};
    f.table.assign(static_cast<size_t>(f.domain.order()), TorusElement{});
    std::vector<bool> seen(f.table.size(), false);
    for (const Json& row : j.at("table")) {
        if (!row.is_array() || row.size() != 2)
            throw std::invalid_argument("json: table rows are [coords, value]");
        GroupElement g = f.domain.element(row[0].get<std::vector<Int>>());
        Int idx = f.domain.index(g);
        if (seen[idx]) throw std::invalid_argument("json: duplicate table entry");
        seen[idx] = true;
        f.table[idx] = torus_value_from_json(row[1], f.codomain);
    }
    for (bool s : seen)
        if (!s) throw std::invalid_argument("json: table does not cover the domain");
    return f;
}

Json table_element_to_json(const GroupTable& K, Int e) {
    if (e < 0 || e >= K.order) throw std::out_of_range("json: element index out of range");
    if (K.moduli) {
        AbelianGroup G(*K.moduli);
        return Json(G.at(e).coords);
    }
    if (K.carry) {
        AbelianGroup G(K.carry->dom), N(K.carry->cod);
        std::vector<Int> coords = G.at(e / N.order()).coords;
        for (Int c : N.at(e % N.order()).coords) coords.push_back(c);
        return Json(coords);
    }
    throw std::invalid_argument("json: group table without structural descriptor");
}

Int table_element_from_json(const GroupTable& K, const Json& j) {
    auto coords = j.get<std::vector<Int>>();
    if (K.moduli) {
        AbelianGroup G(*K.moduli);
        return G.index(G.element(std::move(coords)));
    }
    if (K.carry) {
        AbelianGroup G(K.carry->dom), N(K.carry->cod);
        size_t m = K.carry->dom.size();
        if (coords.size() != m + K.carry->cod.size())
            throw std::invalid_argument("json: element coordinate count mismatch");
        std::vector<Int> x(coords.begin(), coords.begin() + m);
        std::vector<Int> y(coords.begin() + m, coords.end());
        return G.index(G.element(std::move(x))) * N.order() + N.index(N.element(std::move(y)));
    }
    throw std::invalid_argument("json: group table without structural descriptor");
}

namespace {

Json table_to_json(const GroupTable& K) {
    if (K.moduli) return Json{{"moduli", *K.moduli}};
    if (K.carry)
        return Json{{"domain_moduli", K.carry->dom},
                    {"codomain_moduli", K.carry->cod},
                    {"s", K.carry->s}};
    throw std::invalid_argument("json: group table without structural descriptor");
}

GroupTable table_from_json(const Json& j) {
    if (j.contains("moduli")) return group_table(AbelianGroup(j["moduli"].get<std::vector<Int>>()));
    if (j.contains("s"))
        return carry_group(j.at("domain_moduli").get<std::vector<Int>>(),
                           j.at("codomain_moduli").get<std::vector<Int>>(),
                           j["s"].get<std::vector<std::vector<Int>>>());
    throw std::invalid_argument("json: K needs moduli or a carry spec");
}

}  // namespace

Json rds_to_json(const RelativeDifferenceSet& D) {
    Json N = Json::array(), R = Json::array();
    for (Int e : D.N) N.push_back(table_element_to_json(D.K, e));
    for (Int e : D.R) R.push_back(table_element_to_json(D.K, e));
    return Json{{"K", table_to_json(D.K)},
                {"N", std::move(N)},
                {"R", std::move(R)},
                {"params", Json::array({D.m, D.n, D.r, D.lambda})}};
}

RelativeDifferenceSet rds_from_json(const Json& j) {
    RelativeDifferenceSet D;
    D.K = table_from_json(j.at("K"));
    for (const Json& e : j.at("N")) D.N.push_back(table_element_from_json(D.K, e));
    for (const Json& e : j.at("R")) D.R.push_back(table_element_from_json(D.K, e));
    const Json& p = j.at("params");
    if (!p.is_array() || p.size() != 4)
        throw std::invalid_argument("json: params must be [m, n, r, lambda]");
    D.m = p[0].get<Int>();
    D.n = p[1].get<Int>();
    D.r = p[2].get<Int>();
    D.lambda = p[3].get<Int>();
    return D;
}

Json presentation_to_json(const NPresentation& P, const GroupTable& K) {
    Json gens = Json::array();
    for (Int g : P.generators) gens.push_back(table_element_to_json(K, g));
    return Json{{"moduli", P.moduli}, {"generators", std::move(gens)}};
}

NPresentation presentation_from_json(const Json& j, const GroupTable& K) {
    NPresentation P;
    P.moduli = j.at("moduli").get<std::vector<Int>>();
    for (const Json& g : j.at("generators")) P.generators.push_back(table_element_from_json(K, g));
    return P;
}

Json report_to_json(const WelchReport& rep, const AttainResult* attain) {
    Json out{{"k", rep.k},
             {"backend", rep.backend == Backend::exact ? "exact" : "float"},
             {"lhs", rep.lhs},
             {"rhs", rep.rhs},
             {"margin", rep.margin},
             {"attained", rep.attained}};
    if (rep.lhs_rat) out["lhs_exact"] = rat_to_json(*rep.lhs_rat);
    if (rep.rhs_rat) out["rhs_exact"] = rat_to_json(*rep.rhs_rat);
    if (rep.margin_rat) out["margin_exact"] = rat_to_json(*rep.margin_rat);
    if (attain) {
        out["criterion_attained"] = attain->attained;
        if (!attain->reason.empty()) out["reason"] = attain->reason;
        if (attain->witness)
            out["witness"] = Json::array({attain->witness->first, attain->witness->second});
    }
    return out;
}

Json report_to_json(const MubVerdict& v) {
    Json fails = Json::array();
    for (const MubFailure& f : v.failures) {
        Json e{{"reason", f.reason}};
        if (f.basis1 >= 0) e["basis1"] = f.basis1;
        if (f.basis2 >= 0) e["basis2"] = f.basis2;
        if (f.col1 >= 0) e["col1"] = f.col1;
        if (f.col2 >= 0) e["col2"] = f.col2;
        if (f.basis2 >= 0) e["angle_sq"] = f.angle_sq;
        fails.push_back(std::move(e));
    }
    return Json{{"is_mub", v.is_mub}, {"is_complete", v.is_complete},
                {"failures", std::move(fails)}};
}

Json report_to_json(const PlanarityReport& rep) {
    Json out{{"holds", rep.holds}};
    if (rep.witness) {
        Json w = Json::array();
        for (const GroupElement& g : *rep.witness) w.push_back(g.coords);
        out["witness"] = std::move(w);
    }
    return out;
}

Json report_to_json(const RdsReport& rep, const GroupTable& K) {
    Json counts = Json::array();
    for (Int e = 0; e < K.order; ++e)
        counts.push_back(Json::array({table_element_to_json(K, e), rep.counts[e]}));
    Json out{{"valid", rep.valid},
             {"semiregular", rep.semiregular},
             {"splitting", rep.splitting},
             {"counts", std::move(counts)}};
    if (!rep.reason.empty()) out["reason"] = rep.reason;
    return out;
}

Json report_to_json(const GlavnajaResult& res) {
    Json out{{"ok", res.ok}};
    if (res.witness)
        out["witness"] = Json::array(
            {Json::array({res.witness->first.first, res.witness->first.second}),
             Json::array({res.witness->second.first, res.witness->second.second})});
    return out;
}

}  // namespace unbias
