#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "fingeo/canon.hpp"
#include "fingeo/constructions.hpp"
#include "fingeo/gq.hpp"
#include "fingeo/incfile.hpp"
#include "fingeo/inversive.hpp"
#include "fingeo/reconstruct.hpp"

using namespace fingeo;

namespace {

OvoidPG make_ovoid(const PG3& pg, const std::string& kind) {
    if (kind == "elliptic") return elliptic_quadric(pg);
    if (kind == "suzuki") return suzuki_tits(pg);
    throw CLI::ValidationError("--ovoid must be elliptic or suzuki");
}

void emit(const std::string& path, const IncidenceStructure& S,
          const std::map<std::string, std::string>& meta) {
    if (path.empty() || path == "-")
        std::cout << write_inc(S, meta);
    else
        write_inc_file(path, S, meta);
}

int cmd_gen(const std::string& what, int q, const std::string& ovoid_kind,
            const std::string& out) {
    Field F(q);
    PG3 pg(F);
    std::map<std::string, std::string> meta{{"q", std::to_string(q)}};
    if (what == "wq") {
        meta["kind"] = "wq";
        emit(out, build_wq(pg).structure(), meta);
    } else if (what == "ovoid-elliptic" || what == "ovoid-suzuki") {
        OvoidPG O = make_ovoid(pg, what == "ovoid-elliptic" ? "elliptic" : "suzuki");
        meta["kind"] = what;
        emit(out, IncidenceStructure(static_cast<int>(pg.points().size()),
                                     {O.point_ids}),
             meta);
    } else if (what == "inversive") {
        OvoidPG O = make_ovoid(pg, ovoid_kind);
        meta["kind"] = "inversive";
        meta["ovoid"] = ovoid_kind;
        emit(out, build_inversive_from_ovoid(pg, O), meta);
    } else if (what == "pg-design") {
        meta["kind"] = "pg-design";
        emit(out, pg_hyperplane_design(3, pg), meta);
    } else if (what == "affine") {
        OvoidPG O = make_ovoid(pg, ovoid_kind);
        meta["kind"] = "affine";
        meta["ovoid"] = ovoid_kind;
        emit(out, contract(build_inversive_from_ovoid(pg, O), 0), meta);
    } else {
        throw CLI::ValidationError("unknown gen target " + what);
    }
    return 0;
}

int cmd_verify(const std::string& what, const std::string& path, int t) {
    IncFile f = read_inc_file(path);
    const IncidenceStructure& S = f.structure;
    try {
        if (what == "design") {
            DesignParams P = verify_t_design(S, t);
            std::cout << "design: " << P.t << "-(" << P.v << "," << P.k << ","
                      << P.lambda << ")\n"
                      << "b: " << P.b << "\nr: " << P.r << "\n"
                      << "symmetric: " << (P.is_symmetric ? "true" : "false") << "\n"
                      << "fisher_ok: " << (P.fisher_ok ? "true" : "false") << "\n";
        } else if (what == "gq") {
            GQView G = verify_gq(S);
            std::cout << "gq_order: (" << G.s() << "," << G.t() << ")\n"
                      << "points: " << G.num_points() << "\nlines: " << G.num_lines()
                      << "\n";
        } else if (what == "regular") {
            GQView G = verify_gq(S);
            RegularityReport R = verify_regularity(G);
            BipartiteCount C = count_complete_bipartite(G);
            std::cout << "regular: " << (R.regular ? "true" : "false") << "\n"
                      << "regular_pairs: " << R.regular_pairs << "\n"
                      << "total_pairs: " << R.total_pairs << "\n"
                      << "k_count: " << C.n << "\nk_bound: " << C.bound << "\n";
            if (!R.regular) return 1;
        } else if (what == "inversive") {
            InversivePlane I = verify_inversive(S);
            std::cout << "inversive_order: " << I.q() << "\n"
                      << "circles: " << I.num_circles() << "\n"
                      << "r: " << I.params().r << "\nlambda2: " << I.params().lambda_s[2]
                      << "\n";
        } else if (what == "pg-ovoid") {
            auto it = f.metadata.find("q");
            if (it == f.metadata.end())
                throw std::runtime_error("pg-ovoid file needs '# q=...' metadata");
            Field F(std::stoi(it->second));
            PG3 pg(F);
            if (S.num_blocks() != 1)
                throw std::runtime_error("pg-ovoid file must have exactly one block");
            OvoidReport rep = verify_pg_ovoid(pg, S.block(0));
            std::cout << "ok: " << (rep.ok ? "true" : "false") << "\n"
                      << "tangent_planes: " << rep.tangent_planes << "\n"
                      << "secant_planes: " << rep.secant_planes << "\n"
                      << "tangent_lines: " << rep.tangent_lines << "\n";
            if (!rep.witness.empty()) std::cout << "witness: " << rep.witness << "\n";
            if (!rep.ok) return 1;
        } else if (what == "dw") {
            DembowskiWagnerReport rep = check_dembowski_wagner(S);
            std::cout << "is_symmetric: " << (rep.is_symmetric ? "true" : "false") << "\n"
                      << "balance_gt_one: " << (rep.balance_gt_one ? "true" : "false")
                      << "\n"
                      << "all_lines_meet_all_blocks: "
                      << (rep.all_lines_meet_all_blocks ? "true" : "false") << "\n"
                      << "hypothesis_holds: " << (rep.hypothesis_holds ? "true" : "false")
                      << "\n";
            if (!rep.hypothesis_holds) return 1;
        } else {
            throw CLI::ValidationError("unknown verify target " + what);
        }
    } catch (const NotUniform& e) {
        std::cout << "not_uniform: " << e.what() << "\n";
        return 1;
    } catch (const NotBalanced& e) {
        std::cout << "not_balanced: " << e.what() << "\nwitness:";
        for (int x : e.witness) std::cout << ' ' << x;
        std::cout << "\n";
        return 1;
    } catch (const NotPartialLinear& e) {
        std::cout << "not_partial_linear: " << e.what() << "\n";
        return 1;
    } catch (const AxiomFailure& e) {
        std::cout << "gq_axiom_failure: " << e.what() << "\n";
        return 1;
    } catch (const BadPointCount& e) {
        std::cout << "bad_point_count: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-geometry workbench: designs, quadrangles, inversive planes"};
    app.require_subcommand(1);

    std::string gen_what, gen_out, gen_ovoid = "elliptic";
    int gen_q = 2;
    auto* gen = app.add_subcommand("gen", "construct an object and write it as an incidence file");
    gen->add_option("target", gen_what, "wq|ovoid-elliptic|ovoid-suzuki|inversive|pg-design|affine")
        ->required();
    gen->add_option("--q", gen_q, "field order")->required();
    gen->add_option("--ovoid", gen_ovoid, "elliptic|suzuki (for inversive/affine)");
    gen->add_option("-o,--output", gen_out, "output path (default stdout)");

    std::string ver_what, ver_file;
    int ver_t = 2;
    auto* ver = app.add_subcommand("verify", "verify a property of an incidence file");
    ver->add_option("target", ver_what, "design|gq|regular|inversive|pg-ovoid|dw")->required();
    ver->add_option("file", ver_file)->required()->check(CLI::ExistingFile);
    ver->add_option("--t", ver_t, "design strength for 'design'");

    std::string rec_file, rec_report;
    bool rec_iso = false;
    long long rec_budget = -1;
    auto* rec = app.add_subcommand("reconstruct", "run the inversive-plane-to-W(q) pipeline");
    rec->add_option("file", rec_file)->required()->check(CLI::ExistingFile);
    rec->add_flag("--check-iso", rec_iso, "also test isomorphism with the coordinate model");
    rec->add_option("--report", rec_report, "write the report to a file");
    rec->add_option("--budget", rec_budget, "node budget for the isomorphism search");

    std::string search_what, search_file;
    bool s_count = false, s_first = false, s_all = false;
    int s_jobs = 1;
    long long s_budget = -1;
    auto* sea = app.add_subcommand("search", "backtracking searches");
    sea->add_option("target", search_what, "gq-ovoids")->required();
    sea->add_option("file", search_file)->required()->check(CLI::ExistingFile);
    sea->add_flag("--count", s_count, "count all ovoids");
    sea->add_flag("--first", s_first, "stop at the first ovoid");
    sea->add_flag("--all", s_all, "enumerate all ovoids");
    sea->add_option("--jobs", s_jobs, "worker threads (output is independent of this)");
    sea->add_option("--budget", s_budget, "search node budget");

    std::string iso_a, iso_b;
    auto* iso = app.add_subcommand("iso", "test two incidence files for isomorphism");
    iso->add_option("a", iso_a)->required()->check(CLI::ExistingFile);
    iso->add_option("b", iso_b)->required()->check(CLI::ExistingFile);

    std::string stats_file;
    auto* sta = app.add_subcommand("stats", "basic counts of an incidence file");
    sta->add_option("file", stats_file)->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    try {
        if (*gen) return cmd_gen(gen_what, gen_q, gen_ovoid, gen_out);
        if (*ver) return cmd_verify(ver_what, ver_file, ver_t);
        if (*rec) {
            IncFile f = read_inc_file(rec_file);
            PipelineReport rep = dembowski_pipeline(f.structure, rec_iso, rec_budget);
            std::string text = format_report(rep);
            std::cout << text;
            if (!rec_report.empty()) {
                std::ofstream out(rec_report, std::ios::binary);
                out << text;
            }
            return rep.all_ok() ? 0 : 1;
        }
        if (*sea) {
            if (search_what != "gq-ovoids")
                throw CLI::ValidationError("unknown search target " + search_what);
            IncFile f = read_inc_file(search_file);
            GQView G = verify_gq(f.structure);
            OvoidSearchMode mode = s_first  ? OvoidSearchMode::find_one
                                   : s_all ? OvoidSearchMode::enumerate
                                           : OvoidSearchMode::count_all;
            OvoidSearchResult R = search_gq_ovoids(G, mode, s_jobs, s_budget);
            if (mode == OvoidSearchMode::count_all) {
                std::cout << R.count << "\n";
            } else if (mode == OvoidSearchMode::find_one) {
                if (R.first) {
                    for (size_t i = 0; i < R.first->size(); ++i)
                        std::cout << (i ? " " : "") << (*R.first)[i];
                    std::cout << "\n";
                } else {
                    std::cout << "none\n";
                }
            } else {
                for (const auto& o : R.all) {
                    for (size_t i = 0; i < o.size(); ++i)
                        std::cout << (i ? " " : "") << o[i];
                    std::cout << "\n";
                }
            }
            if (R.budget_exhausted) {
                std::cout << "budget_exhausted\n";
                return 1;
            }
            return 0;
        }
        if (*iso) {
            IncFile a = read_inc_file(iso_a);
            IncFile b = read_inc_file(iso_b);
            IsomorphismResult r = isomorphic(a.structure, b.structure);
            std::cout << "isomorphic: " << (r.isomorphic ? "true" : "false") << "\n";
            return r.isomorphic ? 0 : 1;
        }
        if (*sta) {
            IncFile f = read_inc_file(stats_file);
            std::cout << "points: " << f.structure.num_points() << "\n"
                      << "blocks: " << f.structure.num_blocks() << "\n";
            std::map<size_t, int> sizes;
            for (const auto& blk : f.structure.blocks()) ++sizes[blk.size()];
            for (const auto& [k, c] : sizes)
                std::cout << "blocks_of_size_" << k << ": " << c << "\n";
            for (const auto& [k, v2] : f.metadata) std::cout << "meta_" << k << ": " << v2 << "\n";
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cout << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
