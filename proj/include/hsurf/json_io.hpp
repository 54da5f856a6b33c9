#ifndef HSURF_JSON_IO_HPP
#define HSURF_JSON_IO_HPP

#include <fstream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hsurf/errors.hpp"
#include "hsurf/exact_sequence.hpp"
#include "hsurf/germ.hpp"
#include "hsurf/group_info.hpp"
#include "hsurf/milnor.hpp"
#include "hsurf/parse.hpp"
#include "hsurf/profile.hpp"
#include "hsurf/rational.hpp"

namespace hsurf {

using json = nlohmann::json;

// Arbitrary-precision values serialize as JSON numbers while they fit a
// 64-bit integer and as decimal strings beyond that; infinite upper bounds
// are the literal string "inf".

inline json to_json(const Integer& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

inline Integer integer_from_json(const json& j, const std::string& what) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::exception&) {
            throw io_error(what + ": not an integer");
        }
    }
    throw io_error(what + ": expected an integer or decimal string");
}

inline json to_json(const ExtendedRank& r) {
    if (r.infinite) return "inf";
    return to_json(r.value);
}

inline Rational rational_from_json(const json& j, const std::string& what) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        const auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(Integer(s));
            return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
        } catch (const std::exception&) {
            throw io_error(what + ": not a rational (use an integer or \"p/q\")");
        }
    }
    throw io_error(what + ": expected a rational entry");
}

// ---- germs ----

inline json to_json(const GermSpec& g) {
    json j;
    if (auto* b = std::get_if<BrieskornGerm>(&g)) {
        j["brieskorn"] = b->exponents;
    } else if (auto* w = std::get_if<WeightedGerm>(&g)) {
        j["weighted"] = {{"w", w->weights}, {"d", w->degree}};
    } else if (auto* e = std::get_if<ExplicitGerm>(&g)) {
        j["poly"] = e->poly.render();
        j["vars"] = e->poly.vars();
    } else {
        j["mu"] = to_json(std::get<DirectMu>(g).mu);
    }
    return j;
}

inline GermSpec germ_from_json(const json& j) {
    if (!j.is_object()) throw io_error("germ: expected an object");
    if (j.contains("brieskorn")) {
        BrieskornGerm g;
        for (const auto& e : j.at("brieskorn")) g.exponents.push_back(e.get<int>());
        return g;
    }
    if (j.contains("weighted")) {
        WeightedGerm g;
        const auto& w = j.at("weighted");
        for (const auto& e : w.at("w")) g.weights.push_back(e.get<int>());
        g.degree = w.at("d").get<int>();
        return g;
    }
    if (j.contains("poly")) {
        std::vector<std::string> vars;
        if (j.contains("vars"))
            for (const auto& v : j.at("vars")) vars.push_back(v.get<std::string>());
        else
            vars = infer_variables(j.at("poly").get<std::string>());
        return ExplicitGerm{parse_poly(j.at("poly").get<std::string>(), vars)};
    }
    if (j.contains("mu")) return DirectMu{integer_from_json(j.at("mu"), "germ mu")};
    throw io_error("germ: expected one of brieskorn/weighted/poly/mu");
}

// ---- profiles ----

inline json to_json(const HypersurfaceProfile& p) {
    json j;
    j["schema"] = 1;
    j["n"] = p.n;
    j["d"] = p.d;
    j["r"] = p.r;
    j["s"] = p.s;
    j["strata"] = json::array();
    for (const auto& st : p.strata)
        j["strata"].push_back({{"label", st.label},
                               {"dim", st.dim},
                               {"transversal", to_json(st.transversal)},
                               {"is_top", st.is_top}});
    j["isolated"] = json::array();
    for (const auto& iso : p.isolated)
        j["isolated"].push_back({{"label", iso.label}, {"germ", to_json(iso.germ)}});
    j["q_homology_manifold"] = p.q_homology_manifold;
    if (p.chi_override) j["chi_override"] = to_json(*p.chi_override);
    return j;
}

inline HypersurfaceProfile profile_from_json(const json& j) {
    if (!j.is_object()) throw io_error("profile: expected an object");
    if (!j.contains("schema")) throw io_error("profile: missing schema field");
    if (j.at("schema") != 1)
        throw io_error("profile: unsupported schema version " + j.at("schema").dump());
    HypersurfaceProfile p;
    p.n = j.at("n").get<int>();
    p.d = j.at("d").get<int>();
    p.r = j.value("r", 1);
    p.s = j.at("s").get<int>();
    for (const auto& st : j.value("strata", json::array())) {
        StratumSummary summary;
        summary.label = st.value("label", "");
        summary.dim = st.at("dim").get<int>();
        summary.transversal = germ_from_json(st.at("transversal"));
        summary.is_top = st.value("is_top", summary.dim == p.s);
        p.strata.push_back(std::move(summary));
    }
    for (const auto& iso : j.value("isolated", json::array())) {
        IsolatedSingularity point;
        point.label = iso.value("label", "");
        point.germ = germ_from_json(iso.at("germ"));
        p.isolated.push_back(std::move(point));
    }
    p.q_homology_manifold = j.value("q_homology_manifold", false);
    if (j.contains("chi_override"))
        p.chi_override = integer_from_json(j.at("chi_override"), "chi_override");
    return p;
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw io_error("cannot parse " + path + ": " + e.what());
    }
    return j;
}

inline HypersurfaceProfile load_profile(const std::string& path) {
    return profile_from_json(load_json_file(path));
}

inline SymMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw io_error("matrix: expected a nonempty array of rows");
    SymMatrix m;
    for (const auto& row : j) {
        if (!row.is_array()) throw io_error("matrix: rows must be arrays");
        std::vector<Rational> r;
        for (const auto& e : row) r.push_back(rational_from_json(e, "matrix entry"));
        m.push_back(std::move(r));
    }
    return m;
}

// ---- groups and tables ----

inline json to_json(const Torsion& t) {
    switch (t.kind) {
        case TorsionKind::None: return "none";
        case TorsionKind::Unknown: return "unknown";
        case TorsionKind::Specified: {
            json orders = json::array();
            for (const auto& o : t.orders) orders.push_back(to_json(o));
            return json{{"orders", orders}};
        }
    }
    return "unknown";
}

inline json to_json(const GroupInfo& g) {
    json j;
    j["degree"] = g.degree;
    j["kind"] = g.kind == GroupKind::Exact ? "exact" : "bounded";
    if (g.exact_rank) j["exact_rank"] = to_json(*g.exact_rank);
    j["rank_lo"] = to_json(g.rank_lo);
    j["rank_hi"] = to_json(g.rank_hi);
    j["torsion"] = to_json(g.torsion);
    j["known_free"] = g.known_free;
    j["provenance"] = g.provenance;
    return j;
}

inline json to_json(const CohomologyTable& t) {
    json rows = json::array();
    for (const auto& r : t.rows) rows.push_back(to_json(r));
    return json{{"variant", to_string(t.variant)}, {"rows", rows}};
}

inline CohomologyTable table_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows")) throw io_error("table: expected rows");
    CohomologyTable t;
    const std::string variant = j.value("variant", "cohomology");
    if (variant == "cohomology") t.variant = TableVariant::CohomologyOfV;
    else if (variant == "homology") t.variant = TableVariant::HomologyOfV;
    else if (variant == "vanishing_cohomology") t.variant = TableVariant::VanishingCohomology;
    else if (variant == "vanishing_homology") t.variant = TableVariant::VanishingHomology;
    else if (variant == "smooth_reference") t.variant = TableVariant::SmoothReference;
    else throw io_error("table: unknown variant " + variant);
    for (const auto& row : j.at("rows")) {
        const int degree = row.at("degree").get<int>();
        const std::string kind = row.value("kind", "exact");
        if (kind == "exact") {
            Integer rank = integer_from_json(row.at("exact_rank"), "exact_rank");
            const bool free = row.value("known_free", false);
            Torsion torsion = free ? Torsion::none() : Torsion::unknown();
            if (row.contains("torsion") && row.at("torsion") == "none")
                torsion = Torsion::none();
            t.rows.push_back(GroupInfo::exact(degree, rank, free, torsion,
                                              row.value("provenance", "user.supplied")));
        } else {
            Integer lo = integer_from_json(row.at("rank_lo"), "rank_lo");
            ExtendedRank hi = ExtendedRank::inf();
            if (!(row.at("rank_hi").is_string() && row.at("rank_hi") == "inf"))
                hi = ExtendedRank::of(integer_from_json(row.at("rank_hi"), "rank_hi"));
            t.rows.push_back(GroupInfo::bounded(degree, lo, hi,
                                                row.value("known_free", false),
                                                row.value("provenance", "user.supplied")));
        }
    }
    return t;
}

// ---- engine results ----

inline json to_json(const MilnorResult& r) {
    json j;
    j["mu"] = to_json(r.mu);
    j["method"] = to_string(r.method);
    if (r.oracle_stabilization_degree) j["stabilization_degree"] = *r.oracle_stabilization_degree;
    return j;
}

inline json to_json(const RankInterval& iv) {
    return json{{"lo", to_json(iv.lo)}, {"hi", to_json(iv.hi)}};
}

}  // namespace hsurf

#endif
