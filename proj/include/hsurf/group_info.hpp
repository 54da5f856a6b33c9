#ifndef HSURF_GROUP_INFO_HPP
#define HSURF_GROUP_INFO_HPP

#include <optional>
#include <string>
#include <vector>

#include "hsurf/errors.hpp"
#include "hsurf/rational.hpp"

namespace hsurf {

/// A nonnegative integer extended with +infinity, for rank upper bounds the
/// theory leaves open.
struct ExtendedRank {
    bool infinite = false;
    Integer value = 0;

    static ExtendedRank inf() { return {true, 0}; }
    static ExtendedRank of(Integer v) { return {false, std::move(v)}; }

    bool operator==(const ExtendedRank& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
    bool finite() const { return !infinite; }
    std::string str() const { return infinite ? "inf" : value.str(); }
};

inline ExtendedRank min(const ExtendedRank& a, const ExtendedRank& b) {
    if (a.infinite) return b;
    if (b.infinite) return a;
    return a.value <= b.value ? a : b;
}

enum class TorsionKind { None, Unknown, Specified };

struct Torsion {
    TorsionKind kind = TorsionKind::Unknown;
    std::vector<Integer> orders;  // prime-power orders, only for Specified

    static Torsion none() { return {TorsionKind::None, {}}; }
    static Torsion unknown() { return {TorsionKind::Unknown, {}}; }
    bool operator==(const Torsion& o) const { return kind == o.kind && orders == o.orders; }
};

enum class GroupKind { Exact, Bounded };

/// One cohomology degree's answer: an exact finitely generated abelian group
/// description, or an honest rank interval.
struct GroupInfo {
    int degree = 0;
    GroupKind kind = GroupKind::Bounded;
    std::optional<Integer> exact_rank;
    Torsion torsion = Torsion::unknown();
    Integer rank_lo = 0;
    ExtendedRank rank_hi = ExtendedRank::inf();
    bool known_free = false;
    std::string provenance;

    static GroupInfo exact(int degree, Integer rank, bool free, Torsion torsion,
                           std::string provenance) {
        if (free && !(torsion == Torsion::none()))
            throw internal_error("a known-free group cannot carry torsion");
        GroupInfo g;
        g.degree = degree;
        g.kind = GroupKind::Exact;
        g.exact_rank = rank;
        g.torsion = std::move(torsion);
        g.rank_lo = rank;
        g.rank_hi = ExtendedRank::of(rank);
        g.known_free = free;
        g.provenance = std::move(provenance);
        return g;
    }

    static GroupInfo free_of_rank(int degree, Integer rank, std::string provenance) {
        return exact(degree, std::move(rank), true, Torsion::none(), std::move(provenance));
    }

    static GroupInfo bounded(int degree, Integer lo, ExtendedRank hi, bool known_free,
                             std::string provenance) {
        if (!hi.infinite && lo > hi.value)
            throw internal_error("rank interval lower bound exceeds upper bound");
        GroupInfo g;
        g.degree = degree;
        g.kind = GroupKind::Bounded;
        g.torsion = known_free ? Torsion::none() : Torsion::unknown();
        g.rank_lo = std::move(lo);
        g.rank_hi = std::move(hi);
        g.known_free = known_free;
        g.provenance = std::move(provenance);
        return g;
    }

    bool is_exact() const { return kind == GroupKind::Exact; }
};

enum class TableVariant {
    CohomologyOfV,
    HomologyOfV,
    VanishingCohomology,
    VanishingHomology,
    SmoothReference,
};

inline std::string to_string(TableVariant v) {
    switch (v) {
        case TableVariant::CohomologyOfV: return "cohomology";
        case TableVariant::HomologyOfV: return "homology";
        case TableVariant::VanishingCohomology: return "vanishing_cohomology";
        case TableVariant::VanishingHomology: return "vanishing_homology";
        case TableVariant::SmoothReference: return "smooth_reference";
    }
    return "?";
}

/// Per-degree group descriptions, one row per degree, sorted ascending.
struct CohomologyTable {
    TableVariant variant = TableVariant::CohomologyOfV;
    std::vector<GroupInfo> rows;

    const GroupInfo& row(int degree) const {
        for (const auto& r : rows)
            if (r.degree == degree) return r;
        throw bad_table("no row for degree " + std::to_string(degree));
    }

    bool has_row(int degree) const {
        for (const auto& r : rows)
            if (r.degree == degree) return true;
        return false;
    }

    bool all_exact() const {
        for (const auto& r : rows)
            if (!r.is_exact()) return false;
        return true;
    }

    /// Alternating rank sum; only meaningful when all rows are exact.
    Integer euler() const {
        Integer chi = 0;
        for (const auto& r : rows) {
            if (!r.is_exact()) throw bad_table("euler characteristic needs an exact table");
            chi += (r.degree % 2 == 0) ? *r.exact_rank : -*r.exact_rank;
        }
        return chi;
    }
};

}  // namespace hsurf

#endif
