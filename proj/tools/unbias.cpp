#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "unbias/json_io.hpp"
#include "unbias/lgraph.hpp"

using namespace unbias;

namespace {

constexpr int kOk = 0;        // property holds
constexpr int kFails = 1;     // property fails (witness in report)
constexpr int kBadInput = 2;  // usage / malformed input

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    try {
        Json j;
        in >> j;
        return j;
    } catch (const Json::exception& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

void emit(const Json& j, const std::string& out) {
    if (out.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream os(out);
        if (!os) throw std::invalid_argument("cannot open " + out + " for writing");
        os << j.dump(2) << "\n";
    }
}

struct GlobalOpts {
    std::string backend = "exact";
    double tol = 1e-9;
    unsigned long long seed = 0;
    std::string out;

    RunConfig config() const {
        RunConfig cfg;
        cfg.backend = backend == "float" ? Backend::floating : Backend::exact;
        cfg.tol = tol;
        cfg.seed = seed;
        return cfg;
    }
};

int cmd_gen(Int dim, bool odd_square, bool even_halfsquare, const std::string& family, Int alpha,
            Int u, const GlobalOpts& g) {
    Int p;
    int k;
    if (!prime_power_decompose(dim, p, k) || dim < 2) {
        std::cerr << "error: not a prime power: " << dim << "\n";
        return kBadInput;
    }
    TorusFunction f;
    if (!family.empty()) {
        PlanarFamilyParams params;
        params.p = p;
        params.k = k;
        params.alpha = alpha;
        if (u != 0) params.u = FiniteField(p, k).from_int(u).coeffs;
        PlanarFamily fam;
        if (family == "dembowski-ostrom") fam = PlanarFamily::dembowski_ostrom;
        else if (family == "coulter-matthews") fam = PlanarFamily::coulter_matthews;
        else if (family == "ding-yuan") fam = PlanarFamily::ding_yuan;
        else {
            std::cerr << "error: unknown family " << family << "\n";
            return kBadInput;
        }
        f = planar_family(fam, params);
    } else if (odd_square && p == 2) {
        std::cerr << "error: square construction needs odd characteristic\n";
        return kBadInput;
    } else if (even_halfsquare && p != 2) {
        std::cerr << "error: half-square construction needs characteristic 2\n";
        return kBadInput;
    } else {
        f = prime_power_planar_function(dim);
    }
    auto mats = mub_from_function(f);
    BasisSystem S = make_system(mats, true, g.config());
    MubVerdict v = is_mub_system(S, g.config());
    if (!v.is_complete) {
        std::cerr << "error: self-verification failed\n" << report_to_json(v).dump(2) << "\n";
        return kFails;
    }
    emit(system_to_json(mats, true), g.out);
    return kOk;
}

int cmd_verify(const std::string& file, const GlobalOpts& g) {
    BasisSystem S = system_from_json(read_json(file), g.config());
    MubVerdict v = is_mub_system(S, g.config());
    emit(report_to_json(v), g.out);
    return v.is_complete ? kOk : kFails;
}

int cmd_welch(const std::string& file, int k, const GlobalOpts& g) {
    BasisSystem S = system_from_json(read_json(file), g.config());
    VectorSystem X = S.union_vectors();
    WelchReport rep = welch_report(X, k, g.config());
    AttainResult att = attains_welch(X, k, g.config());
    emit(report_to_json(rep, &att), g.out);
    return rep.attained && att.attained ? kOk : kFails;
}

int cmd_lgraph(const std::string& file, const std::string& dot, bool weighted,
               const GlobalOpts& g) {
    FlatMatrix M = matrix_from_json(read_json(file));
    PairGraph G = weighted ? k_graph(M, g.config()) : l_graph(M, g.config());
    if (!dot.empty()) {
        std::ofstream os(dot);
        if (!os) throw std::invalid_argument("cannot open " + dot + " for writing");
        os << G.to_dot(weighted);
    }
    Json rep{{"rows", G.nrows()}, {"vertices", G.vertex_count()}, {"edges", G.edge_count()}};
    if (G.vertex_count() <= kExactSolverCap) {
        rep["clique_number"] = clique_number(G);
        rep["chromatic_number"] = chromatic_number(G);
    }
    emit(rep, g.out);
    return kOk;
}

int cmd_planar(const std::string& file, const std::string& condition, const GlobalOpts& g) {
    TorusFunction f = function_from_json(read_json(file));
    PlanarityLevel level;
    if (condition == "uslovie") level = PlanarityLevel::uslovie;
    else if (condition == "general") level = PlanarityLevel::general;
    else if (condition == "most-general") level = PlanarityLevel::most_general;
    else {
        std::cerr << "error: unknown condition " << condition << "\n";
        return kBadInput;
    }
    PlanarityReport rep = check_planarity(f, level);
    emit(report_to_json(rep), g.out);
    return rep.holds ? kOk : kFails;
}

int cmd_rds_check(const std::string& file, const GlobalOpts& g) {
    RelativeDifferenceSet D = rds_from_json(read_json(file));
    RdsReport rep = verify_rds(D);
    emit(report_to_json(rep, D.K), g.out);
    return rep.valid ? kOk : kFails;
}

int cmd_rds_from_planar(const std::string& file, const GlobalOpts& g) {
    TorusFunction f = function_from_json(read_json(file));
    RdsFromPlanar res = planar_to_rds(f);
    Json out = rds_to_json(res.D);
    out["carry_matrix"] = res.s;
    emit(out, g.out);
    return kOk;
}

int cmd_rds_to_planar(const std::string& file, const GlobalOpts& g) {
    Json j = read_json(file);
    RelativeDifferenceSet D = rds_from_json(j);
    if (!j.contains("N_presentation"))
        throw std::invalid_argument("to-planar needs an N_presentation entry");
    NPresentation pres = presentation_from_json(j["N_presentation"], D.K);
    PlanarFromRds res = rds_to_planar(D, pres);
    Json out = function_to_json(res.f);
    out["carry_matrix"] = res.s;
    out["domain_moduli"] = res.domain_moduli;
    Json gens = Json::array();
    for (Int e : res.generators) gens.push_back(table_element_to_json(D.K, e));
    out["generators"] = std::move(gens);
    emit(out, g.out);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact construction and verification of mutually unbiased bases"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--backend", g.backend, "Arithmetic backend")
        ->check(CLI::IsMember({"exact", "float"}));
    app.add_option("--tol", g.tol, "Float-mode tolerance")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "Seed for randomized operations");
    app.add_option("--out", g.out, "Write output to a file instead of stdout");

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a complete system of n+1 unbiased bases");
    Int dim = 0, alpha = 1, u = 0;
    bool odd_square = false, even_halfsquare = false;
    std::string family;
    gen->add_option("--dim", dim, "Dimension (prime power)")->required();
    gen->add_flag("--odd-square", odd_square, "Force the square construction (odd p)");
    gen->add_flag("--even-halfsquare", even_halfsquare,
                  "Force the half-square construction (p = 2)");
    gen->add_option("--family", family,
                    "Planar family: dembowski-ostrom | coulter-matthews | ding-yuan");
    gen->add_option("--alpha", alpha, "Family exponent parameter");
    gen->add_option("--u", u, "Family field-element parameter (base-p digits of an integer)");

    // verify
    auto* verify = app.add_subcommand("verify", "Verify a system file as a complete MUB system");
    std::string verify_file;
    verify->add_option("file", verify_file, "System JSON")->required();

    // welch
    auto* welch = app.add_subcommand("welch", "Welch bound report for the vectors of a system");
    std::string welch_file;
    int welch_k = 1;
    welch->add_option("file", welch_file, "System JSON")->required();
    welch->add_option("--k", welch_k, "Welch exponent")->check(CLI::PositiveNumber);

    // lgraph
    auto* lgraph = app.add_subcommand("lgraph", "Row-pair orthogonality graph of a flat matrix");
    std::string lgraph_file, lgraph_dot;
    bool lgraph_weighted = false;
    lgraph->add_option("file", lgraph_file, "Matrix JSON")->required();
    lgraph->add_option("--dot", lgraph_dot, "Write DOT output to this path");
    lgraph->add_flag("--weighted", lgraph_weighted, "Carry inner-product weights");

    // planar
    auto* planar = app.add_subcommand("planar", "Planarity conditions for a function table");
    auto* planar_check = planar->add_subcommand("check", "Check a planarity condition");
    std::string planar_file, planar_cond = "uslovie";
    planar_check->add_option("file", planar_file, "Function JSON")->required();
    planar_check->add_option("--condition", planar_cond, "uslovie | general | most-general");
    planar->require_subcommand(1);

    // rds
    auto* rds = app.add_subcommand("rds", "Relative difference set operations");
    auto* rds_check = rds->add_subcommand("check", "Verify a relative difference set");
    auto* rds_from = rds->add_subcommand("from-planar", "Difference set from a planar function");
    auto* rds_to = rds->add_subcommand("to-planar", "Planar function from a difference set");
    std::string rds_check_file, rds_from_file, rds_to_file;
    rds_check->add_option("file", rds_check_file, "Set JSON")->required();
    rds_from->add_option("file", rds_from_file, "Function JSON")->required();
    rds_to->add_option("file", rds_to_file, "Set JSON with N_presentation")->required();
    rds->require_subcommand(1);

    // allow global options to appear after the subcommand name
    for (CLI::App* sub : {gen, verify, welch, lgraph, planar, planar_check, rds, rds_check,
                          rds_from, rds_to})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kBadInput;
    }

    try {
        if (gen->parsed())
            return cmd_gen(dim, odd_square, even_halfsquare, family, alpha, u, g);
        if (verify->parsed()) return cmd_verify(verify_file, g);
        if (welch->parsed()) return cmd_welch(welch_file, welch_k, g);
        if (lgraph->parsed()) return cmd_lgraph(lgraph_file, lgraph_dot, lgraph_weighted, g);
        if (planar->parsed()) return cmd_planar(planar_file, planar_cond, g);
        if (rds->parsed()) {
            if (rds_check->parsed()) return cmd_rds_check(rds_check_file, g);
            if (rds_from->parsed()) return cmd_rds_from_planar(rds_from_file, g);
            if (rds_to->parsed()) return cmd_rds_to_planar(rds_to_file, g);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFails;
    }
    return kBadInput;
}
