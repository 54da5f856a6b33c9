#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hsurf/report.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact cohomology tables and Betti bounds for complex projective "
                 "hypersurfaces with structured singularity data"};
    app.fallthrough();
    app.require_subcommand(1);

    std::string format = "json";
    bool quiet = false;
    app.add_option("--format", format, "output format: json or text")->default_val("json");
    app.add_flag("--quiet", quiet, "suppress notes and per-case corpus lines");

    int n = 0, d = 0, s = 0, r = 0, cap = hsurf::kDefaultJetDegreeCap;
    std::string profile, matrix, base, germ, vars, seq, corpus_dir;

    auto* c_smooth =
        app.add_subcommand("smooth", "reference invariants of a smooth hypersurface");
    c_smooth->add_option("--n", n, "middle complex dimension")->required();
    c_smooth->add_option("--d", d, "degree")->required();

    auto* c_table =
        app.add_subcommand("table", "Betti bounds and vanishing tables for a profile file");
    c_table->add_option("--profile", profile, "profile JSON file")->required();

    auto* c_quadric =
        app.add_subcommand("quadric", "closed-form table of a singular quadric");
    c_quadric->add_option("--n", n, "middle complex dimension")->required();
    c_quadric->add_option("--matrix", matrix, "symmetric matrix JSON file")->required();

    auto* c_cone =
        app.add_subcommand("cone", "cohomology of the projective cone over a plane curve");
    c_cone->add_option("--base", base, "curve profile or table JSON file")->required();

    auto* c_lefschetz = app.add_subcommand(
        "lefschetz", "zero ranges of the relative cohomology of a hyperplane section");
    c_lefschetz->add_option("--n", n, "middle complex dimension")->required();
    c_lefschetz->add_option("--s", s, "singular locus dimension (-1 for smooth)")->required();
    c_lefschetz->add_option("--r", r, "number of irreducible components")->required();

    auto* c_chi = app.add_subcommand("chi", "Euler characteristic of a profile");
    c_chi->add_option("--profile", profile, "profile JSON file")->required();

    auto* c_milnor = app.add_subcommand("milnor", "Milnor number of an isolated germ");
    c_milnor->add_option("--germ", germ, "polynomial germ text")->required();
    c_milnor->add_option("--vars", vars, "comma-separated variables (default: inferred)");
    c_milnor->add_option("--cap", cap, "jet truncation degree cap");

    auto* c_solve =
        app.add_subcommand("solve-seq", "rank intervals for a finite exact sequence");
    c_solve->add_option("--seq", seq, "comma-separated ranks; identifiers mark unknowns")
        ->required();

    auto* c_corpus =
        app.add_subcommand("corpus", "run the bundled examples against their goldens");
    c_corpus->add_option("--dir", corpus_dir,
                         "corpus directory (default: $HSURF_CORPUS_DIR or ./corpus)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    hsurf::RunRequest req;
    req.format = format;
    req.quiet = quiet;
    req.cap = cap;
    if (*c_smooth) {
        req.command = "smooth";
        req.n = n;
        req.d = d;
    } else if (*c_table) {
        req.command = "table";
        req.profile_path = profile;
    } else if (*c_quadric) {
        req.command = "quadric";
        req.n = n;
        req.matrix_path = matrix;
    } else if (*c_cone) {
        req.command = "cone";
        req.base_path = base;
    } else if (*c_lefschetz) {
        req.command = "lefschetz";
        req.n = n;
        req.s = s;
        req.r = r;
    } else if (*c_chi) {
        req.command = "chi";
        req.profile_path = profile;
    } else if (*c_milnor) {
        req.command = "milnor";
        req.germ_text = germ;
        if (!vars.empty()) req.vars_csv = vars;
    } else if (*c_solve) {
        req.command = "solve-seq";
        req.seq_csv = seq;
    } else if (*c_corpus) {
        req.command = "corpus";
        if (!corpus_dir.empty()) {
            req.corpus_dir = corpus_dir;
        } else if (const char* env = std::getenv("HSURF_CORPUS_DIR")) {
            req.corpus_dir = std::string(env);
        }
    }

    return hsurf::run(req, std::cout, std::cerr);
}
