// magbrauer: exact calculator for magnetic equivariant graded Brauer groups,
// twisted group cohomology, graded Clifford arithmetic, the tenfold
// classification and magnetic representation utilities.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "magb/cache.hpp"
#include "magb/groupspec.hpp"
#include "magb/serialize.hpp"

using namespace magb;

namespace {

struct GlobalOpts {
    std::string format = "text";
    std::string cache_dir_flag;
    long long budget_cells = 0;  // 0 = default
    int jobs = 1;
    bool no_cache = false;

    Budget budget() const {
        Budget b;
        if (budget_cells > 0) b.max_cells = budget_cells;
        return b;
    }
    std::string cache_dir() const { return no_cache ? "" : resolve_cache_dir(cache_dir_flag); }
    bool json_out() const { return format == "json"; }
};

void emit(const GlobalOpts& g, const json& j, const std::string& text) {
    if (g.json_out())
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text << "\n";
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_parameter("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

std::string structure_text(const std::string& title, const BrauerGroupStructure& s) {
    std::string out = title + " = " + invariant_factor_string(s.invariant_factors) +
                      "\norder: " + s.order.get_str();
    if (!s.generators.empty()) {
        out += "\ngenerators:";
        for (const auto& g : s.generators)
            out += "\n  " + g.name + ": order " + g.order.get_str();
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"magnetic equivariant graded Brauer group calculator"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    GlobalOpts g;
    app.add_option("--format", g.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--cache-dir", g.cache_dir_flag, "cohomology cache directory");
    app.add_flag("--no-cache", g.no_cache, "disable the cohomology cache");
    app.add_option("--budget", g.budget_cells, "dense elimination budget in matrix cells");
    app.add_option("--jobs", g.jobs, "parallel enumeration threads");

    std::string groupspec, phispec = "trivial", model = "Zt", field = "R";
    std::string file, ut_file, uc_file, algebra_file;
    int degree = 2, p = 0, q = 0;
    int az_t = 0, az_c = 0, az_s = 0;
    bool exact = false;
    double tol = -1.0;

    auto add_group_opts = [&](CLI::App* cmd, bool phi_required) {
        cmd->add_option("--group", groupspec, "group spec (cyclic:N, product(...), ...)")
            ->required();
        auto* o = cmd->add_option("--phi", phispec, "phi spec (mod2, proj2, values:[..], trivial)");
        if (phi_required) o->required();
    };

    auto* cmd_grbr = app.add_subcommand("grbr", "magnetic equivariant graded Brauer group");
    add_group_opts(cmd_grbr, true);
    auto* cmd_grbrp = app.add_subcommand("grbr-prime", "the subgroup GrBr' (a = 0)");
    add_group_opts(cmd_grbrp, true);
    auto* cmd_riehm = app.add_subcommand("riehm", "Riehm's equivariant graded Brauer group over R or C");
    cmd_riehm->add_option("--group", groupspec)->required();
    cmd_riehm->add_option("--field", field, "R or C")->check(CLI::IsMember({"R", "C"}));
    auto* cmd_cohom = app.add_subcommand("cohomology", "twisted group cohomology H^n(G, M)");
    add_group_opts(cmd_cohom, true);
    cmd_cohom->add_option("--model", model, "Z, Zt, Z<m>, Z<m>t, or QZt (units via Bockstein)");
    cmd_cohom->add_option("--degree", degree, "cohomological degree n >= 1");
    auto* cmd_tenfold = app.add_subcommand("tenfold", "classify a graded division algebra");
    cmd_tenfold->add_option("--algebra", algebra_file, "graded algebra JSON file")->required();
    auto* cmd_cliff = app.add_subcommand("clifford-class", "Brauer class of C^{p,q}");
    cmd_cliff->add_option("--p", p)->required();
    cmd_cliff->add_option("--q", q)->required();
    auto* cmd_az = app.add_subcommand("az", "Altland-Zirnbauer class lookup/detection");
    cmd_az->add_option("--t", az_t, "T^2 (0 absent, +1, -1)");
    cmd_az->add_option("--c", az_c, "C^2 (0 absent, +1, -1)");
    cmd_az->add_option("--s", az_s, "chiral presence (0 or 1)");
    cmd_az->add_option("--hamiltonian", file, "hamiltonian JSON matrix");
    cmd_az->add_option("--ut", ut_file, "time-reversal unitary JSON matrix");
    cmd_az->add_option("--uc", uc_file, "particle-hole unitary JSON matrix");
    cmd_az->add_option("--tol", tol, "tolerance (default 1e-9 relative)");
    cmd_az->add_flag("--exact", exact, "treat inputs as exact Gaussian rationals");
    auto* cmd_rep = app.add_subcommand("rep", "magnetic representation utilities");
    cmd_rep->require_subcommand(1);
    auto* rep_verify = cmd_rep->add_subcommand("verify", "check the twisted homomorphism law");
    auto* rep_cocycle = cmd_rep->add_subcommand("cocycle", "extract the scalar 2-cocycle and its class");
    auto* rep_triv = cmd_rep->add_subcommand("trivialize", "search a 1-cochain trivializing the cocycle");
    auto* rep_comm = cmd_rep->add_subcommand("commutant", "equivariant endomorphisms and Wigner type");
    auto* rep_dyson = cmd_rep->add_subcommand("dyson", "graded commutant and its tenfold class");
    for (auto* rc : {rep_verify, rep_cocycle, rep_triv, rep_comm, rep_dyson}) {
        add_group_opts(rc, true);
        rc->add_option("--file", file, "representation JSON file")->required();
    }
    auto* cmd_period = app.add_subcommand("periodicity", "4-periodicity predicate [phi* sigma] = 1");
    add_group_opts(cmd_period, true);
    auto* cmd_cache = app.add_subcommand("cache", "inspect or clear the cohomology cache");
    cmd_cache->require_subcommand(1);
    auto* cache_inspect_cmd = cmd_cache->add_subcommand("inspect", "list cache entries");
    auto* cache_clear_cmd = cmd_cache->add_subcommand("clear", "delete cache entries");

    CLI11_PARSE(app, argc, argv);

    auto magnetic = [&]() { return parse_magnetic_group(groupspec, phispec); };
    auto context = [&](const MagneticGroup& m, bool* cached) {
        CohomologyGroup h2 = h2_units_cached(m, g.budget(), g.cache_dir(), cached);
        return BrauerContext(m, std::move(h2));
    };

    if (cmd_grbr->parsed() || cmd_grbrp->parsed()) {
        MagneticGroup m = magnetic();
        bool cached = false;
        BrauerContext ctx = context(m, &cached);
        BrauerGroupStructure s =
            cmd_grbr->parsed() ? ctx.structure(g.jobs) : ctx.structure_prime();
        json j = brauer_structure_to_json(s);
        j["cached"] = cached;
        std::string title = cmd_grbr->parsed() ? "GrBr_(G,phi)(C)" : "GrBr'_(G,phi)(C)";
        emit(g, j, structure_text(title, s));
        return 0;
    }
    if (cmd_riehm->parsed()) {
        ParsedGroup pg = parse_group_spec(groupspec);
        RiehmGroupStructure s = riehm_grbr(pg.group, field[0], g.budget());
        json j = riehm_structure_to_json(s);
        emit(g, j,
             "GrBr_G(" + field + ") = " + invariant_factor_string(s.invariant_factors) +
                 "\norder: " + s.order.get_str());
        return 0;
    }
    if (cmd_cohom->parsed()) {
        MagneticGroup m = magnetic();
        bool cached = false;
        CohomologyGroup h = [&] {
            CoefficientModel cm = CoefficientModel::parse(model);
            if (cm.kind == CoeffKind::QmodZ) {
                if (degree != 2)
                    throw invalid_parameter("the units model is presented in degree 2");
                return h2_units_cached(m, g.budget(), g.cache_dir(), &cached);
            }
            return cohomology_cached(m, cm, degree, g.budget(), g.cache_dir(), &cached);
        }();
        json j;
        j["invariant_factors"] = json::array();
        for (const auto& d : h.invariant_factors) j["invariant_factors"].push_back(d.get_str());
        json gens = json::array();
        for (const auto& gen : h.generators) gens.push_back(cochain_to_json(m, gen));
        j["generators"] = gens;
        j["cached"] = cached;
        emit(g, j, invariant_factor_string(h.invariant_factors));
        return 0;
    }
    if (cmd_tenfold->parsed()) {
        GradedAlgebra a = graded_algebra_from_json(load_json_file(algebra_file));
        TenfoldClass cls = tenfold_classify(a, true);
        json j{{"tag", tenfold_tag_name(cls.tag)}, {"az", cls.az_label},
               {"T", cls.trs},                     {"C", cls.phs},
               {"S", cls.chiral}};
        emit(g, j, tenfold_tag_name(cls.tag) + " / " + cls.az_label);
        return 0;
    }
    if (cmd_cliff->parsed()) {
        int cls = clifford_class(p, q);
        emit(g, json{{"class", cls}}, std::to_string(cls));
        return 0;
    }
    if (cmd_az->parsed()) {
        TenfoldClass cls = [&] {
            if (!file.empty()) {
                json hj = load_json_file(file);
                if (exact || json_matrix_is_exact(hj)) {
                    std::optional<CycMat> ut, uc;
                    if (!ut_file.empty()) ut = exact_matrix_from_json(load_json_file(ut_file));
                    if (!uc_file.empty()) uc = exact_matrix_from_json(load_json_file(uc_file));
                    return az_detect_exact(exact_matrix_from_json(hj), ut, uc);
                }
                std::optional<ComplexMatrix> ut, uc;
                if (!ut_file.empty()) ut = complex_matrix_from_json(load_json_file(ut_file));
                if (!uc_file.empty()) uc = complex_matrix_from_json(load_json_file(uc_file));
                return az_detect(complex_matrix_from_json(hj), ut, uc, tol);
            }
            return az_lookup(az_t, az_c, az_s);
        }();
        json j{{"tag", tenfold_tag_name(cls.tag)}, {"az", cls.az_label},
               {"T", cls.trs},                     {"C", cls.phs},
               {"S", cls.chiral}};
        emit(g, j, cls.az_label);
        return 0;
    }
    if (cmd_rep->parsed()) {
        MagneticGroup m = magnetic();
        MagneticRep r = rep_from_json(m, load_json_file(file));
        if (rep_verify->parsed()) {
            TwistedHomReport rep = verify_twisted_hom(r);
            json j{{"twisted_homomorphism", rep.ok}};
            if (!rep.ok) j["witness"] = {rep.g, rep.h};
            emit(g, j,
                 rep.ok ? "twisted homomorphism: true"
                        : "twisted homomorphism: false at pair (" + std::to_string(rep.g) + "," +
                              std::to_string(rep.h) + ")");
            return 0;
        }
        if (rep_comm->parsed() || rep_dyson->parsed()) {
            CommutantReport c = commutant(r);
            json j{{"real_dimension", c.real_dimension}};
            std::string text = "commutant dimension: " + std::to_string(c.real_dimension);
            if (c.wigner_type != '?') {
                j["wigner_type"] = std::string(1, c.wigner_type);
                text += std::string("\nwigner type: ") + c.wigner_type;
            }
            if (c.dyson) {
                j["dyson_tag"] = tenfold_tag_name(c.dyson->tag);
                j["az"] = c.dyson->az_label;
                text += std::string("\ndyson class: ") + tenfold_tag_name(c.dyson->tag) + " / " +
                        c.dyson->az_label;
            }
            emit(g, j, text);
            return 0;
        }
        // cocycle / trivialize share the extraction and the class computation
        ScalarCocycle tau = extract_cocycle(r);
        bool cached = false;
        CohomologyGroup units = h2_units_cached(m, g.budget(), g.cache_dir(), &cached);
        Cochain c = tau.to_cochain(m);
        CocycleClass cls = class_of(units, c);
        json coords = json::array();
        for (const auto& v : cls.coords) coords.push_back(v.get_str());
        if (rep_cocycle->parsed()) {
            json j{{"order", tau.order},
                   {"cocycle", cochain_to_json(m, c)},
                   {"class", coords},
                   {"trivial", cls.trivial()},
                   {"cached", cached}};
            emit(g, j,
                 std::string("cocycle class: ") + (cls.trivial() ? "trivial" : "nontrivial") +
                     " coords " + coords.dump());
            return 0;
        }
        auto alpha = trivialize(units, c);
        if (alpha) {
            json j{{"trivializable", true}, {"alpha", cochain_to_json(m, *alpha)}, {"cached", cached}};
            emit(g, j, "trivializable: true\nalpha: " + cochain_to_json(m, *alpha)["values"].dump());
        } else {
            json j{{"trivializable", false}, {"class", coords}, {"cached", cached}};
            emit(g, j, "trivializable: false, class coords " + coords.dump());
        }
        return 0;
    }
    if (cmd_period->parsed()) {
        MagneticGroup m = magnetic();
        bool cached = false;
        CohomologyGroup units = h2_units_cached(m, g.budget(), g.cache_dir(), &cached);
        std::vector<std::uint8_t> phi(m.phi.begin(), m.phi.end());
        Cochain c = iota(m, cup_z2(m, phi, phi));
        bool periodic = class_of(units, c).trivial();
        emit(g, json{{"four_periodic", periodic}, {"cached", cached}},
             std::string("4-periodic: ") + (periodic ? "true" : "false"));
        return 0;
    }
    if (cmd_cache->parsed()) {
        std::string dir = resolve_cache_dir(g.cache_dir_flag);
        if (cache_inspect_cmd->parsed()) {
            auto entries = cache_inspect(dir);
            json j = json::array();
            std::string text = "cache dir: " + dir;
            for (const auto& e : entries) {
                j.push_back(json{{"file", e.file}, {"key", e.key}, {"engine_version", e.engine_version}});
                text += "\n" + e.file + "  " + e.key;
            }
            emit(g, j, text + "\nentries: " + std::to_string(entries.size()));
            return 0;
        }
        if (cache_clear_cmd->parsed()) {
            std::size_t n = cache_clear(dir);
            emit(g, json{{"removed", n}}, "removed " + std::to_string(n) + " entries");
            return 0;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const invalid_parameter& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const resource_limit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
