#ifndef HSURF_REPORT_HPP
#define HSURF_REPORT_HPP

#include <cctype>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hsurf/calculators.hpp"
#include "hsurf/errors.hpp"
#include "hsurf/json_io.hpp"
#include "hsurf/render.hpp"

namespace hsurf {

/// One CLI invocation, already parsed. Exactly one command; the path and
/// inline parameters it needs must be present.
struct RunRequest {
    std::string command;
    std::optional<std::string> profile_path;
    std::optional<std::string> matrix_path;
    std::optional<std::string> base_path;
    std::optional<std::string> germ_text;
    std::optional<std::string> vars_csv;
    std::optional<std::string> seq_csv;
    std::optional<int> n, d, s, r;
    int cap = kDefaultJetDegreeCap;
    std::string format = "json";  // "json" | "text"
    bool quiet = false;
    std::optional<std::string> corpus_dir;
};

struct Report {
    json results = json::object();
    std::vector<CohomologyTable> tables;
    std::vector<std::pair<std::string, std::string>> notes;  // (statement, citation key)
    std::vector<std::string> warnings;
};

namespace detail {

inline int require_param(const std::optional<int>& v, const char* name) {
    if (!v) throw error(std::string("missing required parameter --") + name);
    return *v;
}

inline std::string require_param(const std::optional<std::string>& v, const char* name) {
    if (!v) throw error(std::string("missing required parameter --") + name);
    return *v;
}

inline std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string current;
    for (char c : text) {
        if (c == ',') {
            out.push_back(current);
            current.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            current += c;
        }
    }
    out.push_back(current);
    return out;
}

/// Cite every provenance key appearing in the report's tables, sorted.
inline void collect_notes(Report& report) {
    std::set<std::string> keys;
    for (const auto& t : report.tables)
        for (const auto& row : t.rows) keys.insert(row.provenance);
    for (const auto& key : keys) {
        const auto statement = prov::statement(key);
        if (!statement.empty()) report.notes.emplace_back(std::string(statement), key);
    }
}

inline ExactSequenceSpec sequence_from_csv(const std::string& csv) {
    ExactSequenceSpec seq;
    int index = 0;
    for (const auto& token : split_csv(csv)) {
        if (token.empty()) throw error("empty term in --seq");
        const bool numeric =
            std::all_of(token.begin(), token.end(),
                        [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
        if (numeric)
            seq.terms.push_back(RankTerm::known(Integer(token), "t" + std::to_string(index)));
        else
            seq.terms.push_back(RankTerm::unknown(token));
        ++index;
    }
    return seq;
}

inline Report run_smooth(const RunRequest& req) {
    const int n = require_param(req.n, "n");
    const int d = require_param(req.d, "d");
    Report rep;
    rep.results["n"] = n;
    rep.results["d"] = d;
    rep.results["middle_betti"] = to_json(smooth_betti(n, d));
    rep.results["euler"] = to_json(smooth_euler(n, d));
    rep.tables.push_back(smooth_table(n, d));
    return rep;
}

inline Report run_table(const RunRequest& req) {
    const auto path = require_param(req.profile_path, "profile");
    const HypersurfaceProfile p = load_profile(path);
    require_valid(p);

    Report rep;
    rep.results["n"] = p.n;
    rep.results["d"] = p.d;
    rep.results["r"] = p.r;
    rep.results["s"] = p.s;
    rep.results["q_homology_manifold"] = p.q_homology_manifold;
    const auto support = vanishing_support(p);
    if (!support.cohomology.empty()) {
        rep.results["vanishing_window"] = {support.cohomology.lo, support.cohomology.hi};
        rep.results["vanishing_homology_window"] = {support.homology.lo, support.homology.hi};
        rep.results["transversal_milnor_sum"] = to_json(vanishing_top_rank_bound(p));
    }
    try {
        rep.results["euler"] = to_json(chi_of_profile(p));
    } catch (const error&) {
        // no closed form and no override: omit
    }

    rep.tables.push_back(betti_bounds_table(p));
    rep.tables.push_back(homology_bounds_table(p));
    rep.tables.push_back(vanishing_table(p, TableVariant::VanishingCohomology));
    rep.tables.push_back(vanishing_table(p, TableVariant::VanishingHomology));
    return rep;
}

inline Report run_quadric(const RunRequest& req) {
    const int n = require_param(req.n, "n");
    const auto path = require_param(req.matrix_path, "matrix");
    const SymMatrix m = matrix_from_json(load_json_file(path));
    const HypersurfaceProfile p = quadric_profile(n, m);

    Report rep;
    rep.results["n"] = n;
    rep.results["s"] = p.s;
    rep.results["rank"] = n + 1 - p.s;  // q; the smooth case reads n + 2
    rep.results["profile"] = to_json(p);
    if (p.s == -1)
        rep.tables.push_back(smooth_table(n, 2));
    else
        rep.tables.push_back(quadric_table(n, n + 1 - p.s));
    return rep;
}

inline Report run_cone(const RunRequest& req) {
    const auto path = require_param(req.base_path, "base");
    const json j = load_json_file(path);
    Report rep;

    CohomologyTable curve;
    std::optional<HypersurfaceProfile> curve_profile;
    if (j.is_object() && j.contains("schema")) {
        HypersurfaceProfile p = profile_from_json(j);
        if (p.n != 1) throw error("cone base profile must be a plane curve (n = 1)");
        require_valid(p);
        curve_profile = p;
        std::vector<Integer> mus;
        for (const auto& iso : p.isolated) mus.push_back(milnor(iso.germ).mu);
        const CurveBetti b = curve_betti(p.d, p.r, mus);
        curve.variant = TableVariant::CohomologyOfV;
        curve.rows.push_back(
            GroupInfo::free_of_rank(0, b.b0, detail::key(prov::kCurveExact)));
        curve.rows.push_back(
            GroupInfo::free_of_rank(1, b.b1, detail::key(prov::kCurveExact)));
        curve.rows.push_back(
            GroupInfo::free_of_rank(2, b.b2, detail::key(prov::kCurveExact)));
        rep.results["curve_degree"] = p.d;
        rep.results["curve_components"] = p.r;
    } else {
        curve = table_from_json(j);
        rep.warnings.push_back(
            "base is a bare table: no degree information, vanishing ranks skipped");
    }

    const CohomologyTable cone = cone_table(curve);
    rep.tables.push_back(curve);
    rep.tables.push_back(cone);

    if (curve_profile) {
        // the cone inherits the curve's degree and components; a singular
        // curve contributes cone lines with its own transversal types, and
        // a smooth curve of degree >= 2 contributes only the vertex, an
        // isolated cone germ of weights (1, 1, 1)
        HypersurfaceProfile cp;
        cp.n = 2;
        cp.d = curve_profile->d;
        cp.r = curve_profile->r;
        if (!curve_profile->isolated.empty()) {
            cp.s = 1;
            for (const auto& iso : curve_profile->isolated)
                cp.strata.push_back({"line-over-" + iso.label, 1, iso.germ, true});
        } else if (cp.d >= 2) {
            cp.s = 0;
            cp.isolated.push_back({"vertex", WeightedGerm{{1, 1, 1}, cp.d}});
        } else {
            cp.s = -1;  // the cone over a line is a plane
        }
        require_valid(cp);

        SpecializationKnowns knowns;
        for (int k = 1; k <= 4; ++k) knowns.v_ranks[k] = *cone.row(k).exact_rank;
        knowns.v_ranks[5] = 0;
        auto sol = solve_ranks(specialization_instance(cp, smooth_table(2, cp.d), knowns));
        if (!sol.feasible)
            throw error("cone data is inconsistent with the specialization sequence");
        json vanishing = json::object();
        for (const auto& [name, iv] : sol.intervals)
            if (name.rfind("phi", 0) == 0) vanishing[name.substr(3)] = to_json(iv);
        rep.results["vanishing_ranks"] = vanishing;
    }
    return rep;
}

inline Report run_lefschetz(const RunRequest& req) {
    const int n = require_param(req.n, "n");
    const int s = require_param(req.s, "s");
    const int r = require_param(req.r, "r");
    const auto sup = lefschetz_supplement(n, s, r);

    Report rep;
    rep.results["n"] = n;
    rep.results["s"] = s;
    rep.results["r"] = r;
    json zeros = json::array();
    for (int k = sup.lower_zero_range.lo; k <= sup.lower_zero_range.hi; ++k) zeros.push_back(k);
    for (int k = sup.upper_zero_range.lo; k <= sup.upper_zero_range.hi; ++k) zeros.push_back(k);
    rep.results["zero_degrees"] = zeros;
    rep.results["top_degree"] = 2 * n;
    rep.results["top_rank"] = to_json(sup.top_rank);
    rep.results["middle_degree"] = n;
    rep.results["middle_free"] = sup.middle_free;
    rep.notes.emplace_back(std::string(prov::statement(prov::kLefschetzSupplement)),
                           std::string(prov::kLefschetzSupplement));
    return rep;
}

inline void write_report(const RunRequest& req, const std::string& command, Report rep,
                         std::ostream& out) {
    if (rep.notes.empty()) collect_notes(rep);
    if (req.format == "json") {
        json j;
        j["schema"] = 1;
        j["command"] = command;
        j["results"] = rep.results;
        j["tables"] = json::array();
        for (const auto& t : rep.tables) j["tables"].push_back(to_json(t));
        j["notes"] = json::array();
        for (const auto& [statement, key] : rep.notes)
            j["notes"].push_back({{"citation", key}, {"statement", statement}});
        j["warnings"] = rep.warnings;
        out << j.dump(2) << "\n";
        return;
    }
    out << command << "\n";
    for (auto it = rep.results.begin(); it != rep.results.end(); ++it)
        out << "  " << it.key() << " = " << it.value().dump() << "\n";
    for (const auto& t : rep.tables) out << "\n" << render_table(t);
    for (const auto& w : rep.warnings) out << "warning: " << w << "\n";
    if (!req.quiet && !rep.notes.empty()) {
        out << "\nnotes:\n";
        for (const auto& [statement, key] : rep.notes)
            out << "  [" << key << "] " << statement << "\n";
    }
}

inline int run_corpus(const RunRequest& req, std::ostream& out, std::ostream& err);

}  // namespace detail

inline RunRequest request_from_json(const json& j) {
    RunRequest req;
    req.command = j.at("command").get<std::string>();
    if (j.contains("profile")) req.profile_path = j.at("profile").get<std::string>();
    if (j.contains("matrix")) req.matrix_path = j.at("matrix").get<std::string>();
    if (j.contains("base")) req.base_path = j.at("base").get<std::string>();
    if (j.contains("germ")) req.germ_text = j.at("germ").get<std::string>();
    if (j.contains("vars")) req.vars_csv = j.at("vars").get<std::string>();
    if (j.contains("seq")) req.seq_csv = j.at("seq").get<std::string>();
    if (j.contains("n")) req.n = j.at("n").get<int>();
    if (j.contains("d")) req.d = j.at("d").get<int>();
    if (j.contains("s")) req.s = j.at("s").get<int>();
    if (j.contains("r")) req.r = j.at("r").get<int>();
    if (j.contains("cap")) req.cap = j.at("cap").get<int>();
    if (j.contains("format")) req.format = j.at("format").get<std::string>();
    return req;
}

/// Dispatch a request, writing the report to `out` and diagnostics to `err`.
/// Exit codes: 0 success, 1 input/validation error, 2 internal assertion.
inline int run(const RunRequest& req, std::ostream& out, std::ostream& err) {
    try {
        if (req.format != "json" && req.format != "text")
            throw error("unknown format '" + req.format + "' (use json or text)");
        if (req.command == "smooth") {
            detail::write_report(req, "smooth", detail::run_smooth(req), out);
        } else if (req.command == "table") {
            detail::write_report(req, "table", detail::run_table(req), out);
        } else if (req.command == "quadric") {
            detail::write_report(req, "quadric", detail::run_quadric(req), out);
        } else if (req.command == "cone") {
            detail::write_report(req, "cone", detail::run_cone(req), out);
        } else if (req.command == "lefschetz") {
            detail::write_report(req, "lefschetz", detail::run_lefschetz(req), out);
        } else if (req.command == "chi") {
            const auto p = load_profile(detail::require_param(req.profile_path, "profile"));
            const Integer chi = chi_of_profile(p);
            if (req.format == "json")
                out << json{{"chi", to_json(chi)}}.dump(2) << "\n";
            else
                out << "chi = " << chi.str() << "\n";
        } else if (req.command == "milnor") {
            const auto text = detail::require_param(req.germ_text, "germ");
            std::vector<std::string> vars =
                req.vars_csv ? detail::split_csv(*req.vars_csv) : infer_variables(text);
            if (vars.empty() || (vars.size() == 1 && vars[0].empty()))
                throw error("no variables given or found in the germ");
            const auto result = milnor(ExplicitGerm{parse_poly(text, vars)}, req.cap);
            if (req.format == "json")
                out << to_json(result).dump(2) << "\n";
            else
                out << "mu = " << result.mu.str() << " (method " << to_string(result.method)
                    << ")\n";
        } else if (req.command == "solve-seq") {
            const auto seq = detail::sequence_from_csv(
                detail::require_param(req.seq_csv, "seq"));
            const auto sol = solve_ranks(seq);
            json intervals = json::object();
            for (const auto& t : seq.terms)
                if (!t.value && sol.feasible) intervals[t.name] = to_json(sol.intervals.at(t.name));
            if (req.format == "json")
                out << json{{"feasible", sol.feasible}, {"intervals", intervals}}.dump(2)
                    << "\n";
            else if (!sol.feasible)
                out << "infeasible\n";
            else
                for (const auto& [name, j] : intervals.items())
                    out << name << " in [" << j.at("lo").dump() << ", " << j.at("hi").dump()
                        << "]\n";
        } else if (req.command == "corpus") {
            return detail::run_corpus(req, out, err);
        } else {
            throw error("unknown command '" + req.command + "'");
        }
        return 0;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

namespace detail {

inline std::string resolve_path(const std::string& dir, const std::string& path) {
    if (!path.empty() && path.front() == '/') return path;
    return dir + "/" + path;
}

/// Run every bundled example against its checked-in golden report. Failures
/// are reported per case; the exit code is 1 if any case disagrees.
inline int run_corpus(const RunRequest& req, std::ostream& out, std::ostream& err) {
    std::string dir = req.corpus_dir.value_or("corpus");
    const json manifest = load_json_file(dir + "/manifest.json");
    if (!manifest.contains("cases")) throw io_error("corpus manifest has no cases");

    int passed = 0, total = 0;
    for (const auto& entry : manifest.at("cases")) {
        ++total;
        const std::string name = entry.at("name").get<std::string>();
        RunRequest case_req = request_from_json(entry.at("request"));
        if (case_req.profile_path)
            case_req.profile_path = resolve_path(dir, *case_req.profile_path);
        if (case_req.matrix_path)
            case_req.matrix_path = resolve_path(dir, *case_req.matrix_path);
        if (case_req.base_path) case_req.base_path = resolve_path(dir, *case_req.base_path);

        const std::string golden_path = resolve_path(dir, entry.at("golden").get<std::string>());
        std::ifstream golden_file(golden_path);
        if (!golden_file) {
            out << "FAIL " << name << " (missing golden " << golden_path << ")\n";
            continue;
        }
        std::stringstream golden;
        golden << golden_file.rdbuf();

        std::ostringstream got, got_err;
        const int code = run(case_req, got, got_err);
        if (code != 0) {
            out << "FAIL " << name << " (exit " << code << ")\n";
            continue;
        }
        if (got.str() != golden.str()) {
            out << "FAIL " << name << " (output differs from golden)\n";
            continue;
        }
        ++passed;
        if (!req.quiet) out << "PASS " << name << "\n";
    }
    out << "corpus: " << passed << "/" << total << " passed\n";
    return passed == total ? 0 : 1;
}

}  // namespace detail

}  // namespace hsurf

#endif
