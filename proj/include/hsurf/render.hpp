#ifndef HSURF_RENDER_HPP
#define HSURF_RENDER_HPP

#include <sstream>
#include <string>
#include <vector>

#include "hsurf/group_info.hpp"
#include "hsurf/provenance.hpp"

namespace hsurf {

/// Human form of one group: "Z^3", "0", "rank in [0, 10] (free)", ...
inline std::string render_group(const GroupInfo& g) {
    if (g.is_exact()) {
        std::string base;
        const Integer& r = *g.exact_rank;
        if (r == 0)
            base = "0";
        else if (r == 1)
            base = "Z";
        else
            base = "Z^" + r.str();
        if (g.torsion.kind == TorsionKind::Specified) {
            for (const auto& o : g.torsion.orders) base += " + Z/" + o.str();
        } else if (g.torsion.kind == TorsionKind::Unknown) {
            base += (r == 0) ? " (torsion?)" : " (+ torsion?)";
        }
        return base;
    }
    std::string base;
    if (g.rank_hi.infinite)
        base = "rank >= " + g.rank_lo.str();
    else
        base = "rank in [" + g.rank_lo.str() + ", " + g.rank_hi.value.str() + "]";
    if (g.known_free) base += " (free)";
    return base;
}

inline std::string table_title(TableVariant v) {
    switch (v) {
        case TableVariant::CohomologyOfV: return "H^k(V; Z)";
        case TableVariant::HomologyOfV: return "H_k(V; Z)";
        case TableVariant::VanishingCohomology: return "H^k_phi(V)";
        case TableVariant::VanishingHomology: return "vanishing H_k(V)";
        case TableVariant::SmoothReference: return "H^k(V_t; Z) (smooth reference)";
    }
    return "?";
}

/// Aligned text table, one row per degree, with the provenance key.
inline std::string render_table(const CohomologyTable& t) {
    std::vector<std::string> groups;
    std::size_t width = 0;
    for (const auto& row : t.rows) {
        groups.push_back(render_group(row));
        width = std::max(width, groups.back().size());
    }
    std::ostringstream out;
    out << table_title(t.variant) << "\n";
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        std::string g = groups[i];
        g.resize(width, ' ');
        out << "  " << (t.rows[i].degree < 10 ? " " : "") << t.rows[i].degree << "  " << g
            << "  [" << t.rows[i].provenance << "]\n";
    }
    return out.str();
}

}  // namespace hsurf

#endif
