#ifndef HSURF_CALCULATORS_HPP
#define HSURF_CALCULATORS_HPP

#include <optional>
#include <string>
#include <vector>

#include "hsurf/errors.hpp"
#include "hsurf/exact_sequence.hpp"
#include "hsurf/group_info.hpp"
#include "hsurf/milnor.hpp"
#include "hsurf/profile.hpp"
#include "hsurf/provenance.hpp"
#include "hsurf/rational.hpp"

namespace hsurf {

namespace detail {
inline std::string key(std::string_view sv) { return std::string(sv); }
inline int sign_pow(int e) { return (e % 2 == 0) ? 1 : -1; }
}  // namespace detail

/// Middle Betti number of a smooth degree-d hypersurface in CP^{n+1}:
/// b_n = ((d-1)^{n+2} + (-1)^{n+1})/d + (3(-1)^n + 1)/2. The division is a
/// theorem; a remainder is a bug, not bad input.
inline Integer smooth_betti(int n, int d) {
    if (n < 1 || d < 1) throw error("smooth_betti needs n >= 1 and d >= 1");
    const Integer numer =
        pow_int(Integer(d - 1), static_cast<unsigned>(n + 2)) + detail::sign_pow(n + 1);
    if (numer % d != 0)
        throw internal_error("divisibility failed in smooth_betti(" + std::to_string(n) +
                             ", " + std::to_string(d) + ")");
    return numer / d + (n % 2 == 0 ? 2 : -1);
}

/// chi = (n+2) - (1/d) * (1 + (-1)^{n+1} (d-1)^{n+2}), exact.
inline Integer smooth_euler(int n, int d) {
    if (n < 1 || d < 1) throw error("smooth_euler needs n >= 1 and d >= 1");
    const Integer inner =
        1 + Integer(detail::sign_pow(n + 1)) *
                pow_int(Integer(d - 1), static_cast<unsigned>(n + 2));
    if (inner % d != 0)
        throw internal_error("integrality failed in smooth_euler(" + std::to_string(n) +
                             ", " + std::to_string(d) + ")");
    return Integer(n + 2) - inner / d;
}

/// Full cohomology table of a smooth degree-d hypersurface: the CP^n ranks
/// away from the middle degree and the middle Betti number at n, all free.
inline CohomologyTable smooth_table(int n, int d) {
    CohomologyTable t;
    t.variant = TableVariant::SmoothReference;
    for (int k = 0; k <= 2 * n; ++k) {
        if (k == n)
            t.rows.push_back(
                GroupInfo::free_of_rank(k, smooth_betti(n, d), detail::key(prov::kSmoothBetti)));
        else
            t.rows.push_back(GroupInfo::free_of_rank(k, (k % 2 == 0) ? 1 : 0,
                                                     detail::key(prov::kSmoothReference)));
    }
    if (t.euler() != smooth_euler(n, d))
        throw internal_error("smooth table fails the Euler characteristic cross-check");
    return t;
}

/// chi of a degree-d hypersurface with isolated singularities: the smooth
/// value corrected by (-1)^{n+1} * sum of Milnor numbers.
inline Integer euler_isolated(int n, int d, const std::vector<Integer>& mus) {
    if (n < 1 || d < 1) throw error("euler_isolated needs n >= 1 and d >= 1");
    Integer total = 0;
    for (const auto& mu : mus) {
        if (mu < 1) throw error("isolated Milnor numbers must be >= 1");
        total += mu;
    }
    return smooth_euler(n, d) + Integer(detail::sign_pow(n + 1)) * total;
}

struct CurveBetti {
    Integer b0, b1, b2;
};

/// Betti numbers of a reduced plane curve of degree d with r components and
/// the given isolated Milnor numbers: b_0 = 1, b_2 = r,
/// b_1 = r + 1 + d^2 - 3d - sum(mu).
inline CurveBetti curve_betti(int d, int r, const std::vector<Integer>& mus) {
    if (d < 1 || r < 1) throw error("curve_betti needs d >= 1 and r >= 1");
    Integer total = 0;
    for (const auto& mu : mus) {
        if (mu < 1) throw error("isolated Milnor numbers must be >= 1");
        total += mu;
    }
    const Integer b1 = Integer(r) + 1 + Integer(d) * d - Integer(3) * d - total;
    if (b1 < 0)
        throw negative_betti("curve data gives b_1 = " + b1.str() +
                             " < 0; the singularity total is impossible for degree " +
                             std::to_string(d));
    return {1, b1, Integer(r)};
}

struct DegreeWindow {
    int lo = 0;
    int hi = -1;
    bool empty() const { return lo > hi; }
    bool contains(int k) const { return lo <= k && k <= hi; }
};

/// Concentration degrees of the vanishing theories: cohomology in [n, n+s],
/// homology in [n+1, n+s+1], with the degree-n cohomology group and the top
/// homology group free. Both windows are empty for smooth profiles.
struct VanishingSupport {
    DegreeWindow cohomology;
    DegreeWindow homology;
    bool degree_n_cohomology_free = true;
    bool top_homology_free = true;
};

inline VanishingSupport vanishing_support(const HypersurfaceProfile& p) {
    require_valid(p);
    VanishingSupport v;
    v.cohomology = {p.n, p.n + p.s};
    v.homology = {p.n + 1, p.n + p.s + 1};
    return v;
}

/// Sum of transversal Milnor numbers over the top-dimensional strata; for
/// s = 0 this is the sum over the isolated points and is an exact rank.
inline Integer vanishing_top_rank_bound(const HypersurfaceProfile& p) {
    require_valid(p);
    if (p.s < 0) throw error("a smooth profile has no vanishing support");
    Integer total = 0;
    if (p.s == 0) {
        for (const auto& iso : p.isolated) total += milnor(iso.germ).mu;
        return total;
    }
    bool found = false;
    for (const auto& st : p.strata) {
        if (st.dim != p.s) continue;
        found = true;
        total += milnor(st.transversal).mu;
    }
    if (!found) throw missing_top_stratum();
    return total;
}

// forward declarations used by kato_classify
inline CohomologyTable betti_bounds_table(const HypersurfaceProfile& p);
inline CohomologyTable qhm_betti(const HypersurfaceProfile& p);

enum class KatoRegion { LefschetzIso, MiddleWindow, KatoIso };

inline std::string to_string(KatoRegion r) {
    switch (r) {
        case KatoRegion::LefschetzIso: return "lefschetz";
        case KatoRegion::MiddleWindow: return "middle";
        case KatoRegion::KatoIso: return "kato";
    }
    return "?";
}

struct KatoClassification {
    int degree = 0;
    KatoRegion region = KatoRegion::MiddleWindow;
    GroupInfo group;
    std::optional<std::string> map_description;  // "multiplication by d" on even Kato degrees
};

/// Classify degree k: Lefschetz isomorphism below n, Kato isomorphism above
/// n+s+1 (with the x d restriction map in even degrees), and the bounded
/// middle window in between.
inline KatoClassification kato_classify(const HypersurfaceProfile& p, int k) {
    require_valid(p);
    if (k < 0 || k > 2 * p.n) throw error("degree out of range [0, 2n]");
    KatoClassification out;
    out.degree = k;
    if (k < p.n) {
        out.region = KatoRegion::LefschetzIso;
        out.group = GroupInfo::free_of_rank(k, (k % 2 == 0) ? 1 : 0,
                                            detail::key(prov::kLefschetz));
        return out;
    }
    if (k >= p.n + p.s + 2) {
        out.region = KatoRegion::KatoIso;
        out.group =
            GroupInfo::free_of_rank(k, (k % 2 == 0) ? 1 : 0, detail::key(prov::kKato));
        if (k % 2 == 0) out.map_description = "multiplication by " + std::to_string(p.d);
        return out;
    }
    out.region = KatoRegion::MiddleWindow;
    out.group = betti_bounds_table(p).row(k);
    return out;
}

/// Zero ranges of the relative cohomology H^k(V, V cap H) for a generic
/// hyperplane H, the Z^r at the top, and freeness in the middle degree.
struct LefschetzSupplementReport {
    int n = 1;
    int s = -1;
    int r = 1;
    DegreeWindow lower_zero_range;  // k < n
    DegreeWindow upper_zero_range;  // n+s+1 < k < 2n
    Integer top_rank = 1;           // H^{2n} = Z^r
    bool middle_free = true;        // H^n is torsion-free
};

inline LefschetzSupplementReport lefschetz_supplement(int n, int s, int r) {
    if (n < 1 || s < -1 || s >= n || r < 1)
        throw error("lefschetz_supplement needs n >= 1, -1 <= s < n, r >= 1");
    LefschetzSupplementReport rep;
    rep.n = n;
    rep.s = s;
    rep.r = r;
    rep.lower_zero_range = {0, n - 1};
    rep.upper_zero_range = {n + s + 2, 2 * n - 1};  // empty when s = n-1
    rep.top_rank = r;
    return rep;
}

namespace detail {

struct MiddleSolution {
    RankInterval row_n;
    RankInterval row_n1;
};

/// For s = 0 the vanishing rank at degree n is exactly the Milnor total, and
/// the window sequence is five-term; solve it for both middle degrees.
inline MiddleSolution solve_isolated_window(const HypersurfaceProfile& p, const Integer& mu) {
    SpecializationKnowns knowns;
    knowns.phi_ranks[p.n] = mu;
    auto sol = solve_ranks(specialization_instance(p, smooth_table(p.n, p.d), knowns));
    if (!sol.feasible)
        throw error("singularity data is inconsistent with the specialization sequence");
    return {sol.intervals.at("b" + std::to_string(p.n) + "(V)"),
            sol.intervals.at("b" + std::to_string(p.n + 1) + "(V)")};
}

}  // namespace detail

/// Rank intervals (and exact groups where the theory pins them) for the
/// integral cohomology of V, degree by degree.
inline CohomologyTable betti_bounds_table(const HypersurfaceProfile& p) {
    require_valid(p);
    if (p.q_homology_manifold) return qhm_betti(p);

    const int n = p.n, s = p.s;
    const Integer bsm = smooth_betti(p.n, p.d);
    const Integer mu_top = (s >= 0) ? vanishing_top_rank_bound(p) : Integer(0);
    std::optional<detail::MiddleSolution> five_term;
    if (s == 0) five_term = detail::solve_isolated_window(p, mu_top);

    CohomologyTable table;
    table.variant = TableVariant::CohomologyOfV;
    for (int k = 0; k <= 2 * n; ++k) {
        const Integer cp_rank = (k % 2 == 0) ? 1 : 0;
        if (k < n) {
            table.rows.push_back(
                GroupInfo::free_of_rank(k, cp_rank, detail::key(prov::kLefschetz)));
            continue;
        }
        if (k == 2 * n && s == n - 1) {
            // the window reaches the top degree: H^{2n} = Z^r exactly, and
            // the transversal bound constrains r (n+s = 2n-1 is odd, so the
            // strictness clause never fires here)
            const Integer cap = 1 + mu_top;
            if (Integer(p.r) > cap)
                throw error("component count r = " + std::to_string(p.r) +
                            " exceeds the transversal bound 1 + " + mu_top.str());
            if (five_term) {  // n = 1: the five-term window also covers 2n
                const auto& iv = five_term->row_n1;
                if (Integer(p.r) < iv.lo ||
                    (!iv.hi.infinite && Integer(p.r) > iv.hi.value))
                    throw error("component count r is inconsistent with the "
                                "specialization sequence");
            }
            table.rows.push_back(
                GroupInfo::free_of_rank(k, p.r, detail::key(prov::kTopComponents)));
            continue;
        }
        if (k >= n + s + 2) {
            if (k == 2 * n) {
                if (p.r != 1)
                    throw internal_error("validation let r >= 2 through with s <= n-2");
                table.rows.push_back(
                    GroupInfo::free_of_rank(k, 1, detail::key(prov::kTopComponents)));
            } else {
                table.rows.push_back(
                    GroupInfo::free_of_rank(k, cp_rank, detail::key(prov::kKato)));
            }
            continue;
        }
        if (k == n) {
            if (five_term) {
                const auto& iv = five_term->row_n;
                table.rows.push_back(GroupInfo::bounded(
                    k, iv.lo, min(iv.hi, ExtendedRank::of(bsm)), true,
                    detail::key(prov::kIsolatedExact)));
            } else {
                table.rows.push_back(GroupInfo::bounded(k, 0, ExtendedRank::of(bsm), true,
                                                        detail::key(prov::kMiddleFree)));
            }
            continue;
        }
        if (k == n + s + 1) {
            // strict inequality for n+s even reads as cap - 1 on integers
            const Integer cap = 1 + mu_top - (((n + s) % 2 == 0) ? 1 : 0);
            Integer lo = 0;
            ExtendedRank hi = ExtendedRank::of(cap);
            if (five_term) {
                lo = five_term->row_n1.lo;
                hi = min(hi, five_term->row_n1.hi);
            }
            if (!hi.infinite && lo > hi.value)
                throw error("singularity data contradicts the transversal bound");
            table.rows.push_back(
                GroupInfo::bounded(k, lo, hi, false, detail::key(prov::kTopRankBound)));
            continue;
        }
        // n < k < n+s+1: nothing in scope bounds rank H^{k-1}_phi, so the
        // honest upper bound is infinite
        table.rows.push_back(GroupInfo::bounded(k, 0, ExtendedRank::inf(), false,
                                                detail::key(prov::kSpecializationBound)));
    }
    return table;
}

/// Same rank intervals in homology, with the freeness flags the homological
/// statements warrant: H_{n+s+1}(V) is free, while nothing is claimed for
/// H_n(V).
inline CohomologyTable homology_bounds_table(const HypersurfaceProfile& p) {
    CohomologyTable coh = betti_bounds_table(p);
    CohomologyTable out;
    out.variant = TableVariant::HomologyOfV;
    const int n = p.n, s = p.s;
    for (const auto& row : coh.rows) {
        const int k = row.degree;
        if (row.is_exact()) {
            if (k == n && p.s >= 0) {
                // H^n(V) is free as a kernel in a free group; H_n(V) is a
                // cokernel, so only its rank carries over
                out.rows.push_back(GroupInfo::exact(k, *row.exact_rank, false,
                                                    Torsion::unknown(), row.provenance));
            } else {
                out.rows.push_back(row);
            }
            continue;
        }
        if (k == n + s + 1) {
            out.rows.push_back(GroupInfo::bounded(k, row.rank_lo, row.rank_hi, true,
                                                  detail::key(prov::kMiddleHomology)));
        } else if (k == n) {
            out.rows.push_back(GroupInfo::bounded(k, row.rank_lo, row.rank_hi, false,
                                                  row.provenance));
        } else {
            out.rows.push_back(row);
        }
    }
    return out;
}

/// Betti numbers of a Q-homology-manifold hypersurface: CP^n ranks off the
/// middle degree, and the middle rank recovered from the Euler
/// characteristic supplied in the profile.
inline CohomologyTable qhm_betti(const HypersurfaceProfile& p) {
    require_valid(p);
    if (!p.q_homology_manifold)
        throw error("profile is not flagged as a Q-homology manifold");
    if (!p.chi_override) throw missing_chi();
    const int n = p.n, s = p.s;
    const Integer chi = *p.chi_override;
    const Integer bn_cp = (n % 2 == 0) ? 1 : 0;
    const Integer bn = bn_cp + Integer(detail::sign_pow(n)) * (chi - (n + 1));
    if (bn < 0)
        throw inconsistent_chi("chi = " + chi.str() + " forces b_n = " + bn.str() + " < 0");

    CohomologyTable table;
    table.variant = TableVariant::CohomologyOfV;
    for (int k = 0; k <= 2 * n; ++k) {
        const Integer cp_rank = (k % 2 == 0) ? 1 : 0;
        if (k == n) {
            // free by the middle-degree theorem, rank from chi
            table.rows.push_back(GroupInfo::exact(k, bn, true, Torsion::none(),
                                                  detail::key(prov::kQhmEuler)));
        } else if (k < n) {
            table.rows.push_back(
                GroupInfo::free_of_rank(k, cp_rank, detail::key(prov::kLefschetz)));
        } else if (k >= n + s + 2) {
            const auto prov_key = (k == 2 * n && s == n - 1) ? prov::kTopComponents : prov::kKato;
            table.rows.push_back(GroupInfo::free_of_rank(k, cp_rank, detail::key(prov_key)));
        } else {
            // rank pinned rationally; integral torsion stays unknown
            table.rows.push_back(GroupInfo::exact(k, cp_rank, false, Torsion::unknown(),
                                                  detail::key(prov::kQhmDuality)));
        }
    }
    if (table.euler() != chi)
        throw internal_error("qhm table fails the Euler characteristic cross-check");
    return table;
}

/// chi(V) = chi(Y) - chi(S1 minus Y) * mu - chi(S0) * (chi(F0) - 1), evaluated
/// exactly as written.
inline Integer stratified_euler_two_step(const Integer& chi_y, const Integer& chi_s1_minus_y,
                                         const Integer& mu_transversal, const Integer& chi_s0,
                                         const Integer& chi_f0) {
    return chi_y - chi_s1_minus_y * mu_transversal - chi_s0 * (chi_f0 - 1);
}

/// Exact cohomology of the rank-q quadric hypersurface in CP^{n+1},
/// 4 <= q <= n+1: the cone over a smooth quadric W in CP^{n-s} with vertex
/// CP^s reads off H^k(CP^s) below degree 2s+1, zero at 2s+1, and
/// H^{k-2s-2}(W) above.
inline CohomologyTable quadric_table(int n, int q) {
    if (n < 1) throw error("n must be >= 1");
    if (q < 4 || q > n + 1) throw rank_out_of_range(q);
    const int s = n + 1 - q;
    const int m = n - s - 1;  // complex dimension of the smooth quadric W
    const CohomologyTable w = smooth_table(m, 2);

    CohomologyTable table;
    table.variant = TableVariant::CohomologyOfV;
    for (int k = 0; k <= 2 * n; ++k) {
        Integer rank = 0;
        if (k <= 2 * s)
            rank = (k % 2 == 0) ? 1 : 0;  // H^k(CP^s)
        else if (k == 2 * s + 1)
            rank = 0;
        else
            rank = *w.row(k - 2 * s - 2).exact_rank;
        table.rows.push_back(GroupInfo::free_of_rank(k, rank, detail::key(prov::kQuadricCone)));
    }
    // Euler cross-check against the cone structure: chi = (s+1) + chi(W)
    if (table.euler() != Integer(s + 1) + smooth_euler(m, 2))
        throw internal_error("quadric table fails the Euler characteristic cross-check");
    return table;
}

/// Cohomology of the projective cone over a plane curve: H^0 = Z, H^1 = 0,
/// and the curve table shifted up by two.
inline CohomologyTable cone_table(const CohomologyTable& base) {
    if (base.rows.size() != 3)
        throw bad_table("cone base must be a full plane-curve table (degrees 0..2)");
    for (int k = 0; k <= 2; ++k) {
        if (!base.has_row(k)) throw bad_table("cone base is missing degree " + std::to_string(k));
        if (!base.row(k).is_exact()) throw bad_table("cone base rows must be exact");
    }
    CohomologyTable table;
    table.variant = TableVariant::CohomologyOfV;
    table.rows.push_back(GroupInfo::free_of_rank(0, 1, detail::key(prov::kLefschetz)));
    table.rows.push_back(GroupInfo::free_of_rank(1, 0, detail::key(prov::kLefschetz)));
    for (int k = 2; k <= 4; ++k) {
        const GroupInfo& b = base.row(k - 2);
        table.rows.push_back(
            GroupInfo::exact(k, *b.exact_rank, b.known_free, b.torsion,
                             detail::key(prov::kConeCurve)));
    }
    return table;
}

/// Per-degree description of the vanishing cohomology or homology: zero
/// outside the concentration window, exact for isolated singularities, and
/// honest bounds inside the window otherwise.
inline CohomologyTable vanishing_table(const HypersurfaceProfile& p, TableVariant variant) {
    if (variant != TableVariant::VanishingCohomology &&
        variant != TableVariant::VanishingHomology)
        throw error("vanishing_table needs a vanishing variant");
    require_valid(p);
    const int n = p.n, s = p.s;
    const bool homological = variant == TableVariant::VanishingHomology;
    const int shift = homological ? 1 : 0;
    const DegreeWindow window{n + shift, n + s + shift};
    const Integer mu_top = (s >= 0) ? vanishing_top_rank_bound(p) : Integer(0);

    // For a Q-homology manifold with a known Euler characteristic the
    // rational vanishing cohomology concentrates in the middle degree, so
    // every window rank is pinned: the middle one from the smooth Betti
    // number, zero elsewhere (with torsion unknown off the free degrees).
    std::optional<Integer> qhm_middle;
    if (p.q_homology_manifold && p.chi_override && s >= 0) {
        const CohomologyTable betti = qhm_betti(p);
        const Integer middle = smooth_betti(p.n, p.d) - *betti.row(n).exact_rank;
        if (middle < 0)
            throw inconsistent_chi("chi forces a negative vanishing rank in the middle");
        if (s == 0 && middle != mu_top)
            throw error("chi and the Milnor numbers disagree on the middle vanishing rank (" +
                        middle.str() + " vs " + mu_top.str() + ")");
        qhm_middle = middle;
    }

    CohomologyTable table;
    table.variant = variant;
    const auto concentration =
        detail::key(homological ? prov::kConcentrationHom : prov::kConcentration);
    for (int k = 0; k <= n + s + 1; ++k) {
        if (!window.contains(k)) {
            table.rows.push_back(GroupInfo::free_of_rank(k, 0, concentration));
            continue;
        }
        if (s == 0) {
            // single window degree, exact and free
            table.rows.push_back(GroupInfo::exact(k, mu_top, true, Torsion::none(),
                                                  detail::key(prov::kIsolatedExact)));
            continue;
        }
        const bool first = k == window.lo;  // degree n in cohomology
        const bool last = k == window.hi;   // degree n+s (cohomology) or n+s+1
        if (qhm_middle) {
            const bool middle_degree = k == n + shift;
            const Integer rank = middle_degree ? *qhm_middle : Integer(0);
            // freeness: the degree-n cohomology group and the top homology
            // group; rank-zero free rows are exactly zero
            const bool free = (!homological && first) || (homological && last);
            table.rows.push_back(GroupInfo::exact(
                k, rank, free, free ? Torsion::none() : Torsion::unknown(),
                detail::key(prov::kQhmDuality)));
            continue;
        }
        if (last) {
            table.rows.push_back(GroupInfo::bounded(k, 0, ExtendedRank::of(mu_top),
                                                    homological,
                                                    detail::key(prov::kTopRankBound)));
        } else if (first && !homological) {
            table.rows.push_back(
                GroupInfo::bounded(k, 0, ExtendedRank::inf(), true, concentration));
        } else {
            table.rows.push_back(
                GroupInfo::bounded(k, 0, ExtendedRank::inf(), false, concentration));
        }
    }
    return table;
}

/// chi(V) where a closed form applies: smooth, isolated singularities, or a
/// user-supplied override.
inline Integer chi_of_profile(const HypersurfaceProfile& p) {
    require_valid(p);
    if (p.chi_override) return *p.chi_override;
    if (p.s == -1) return smooth_euler(p.n, p.d);
    if (p.s == 0) {
        std::vector<Integer> mus;
        for (const auto& iso : p.isolated) mus.push_back(milnor(iso.germ).mu);
        return euler_isolated(p.n, p.d, mus);
    }
    throw error("no closed form for chi with a positive-dimensional singular locus; "
                "supply chi_override");
}

}  // namespace hsurf

#endif
