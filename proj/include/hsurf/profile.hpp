#ifndef HSURF_PROFILE_HPP
#define HSURF_PROFILE_HPP

#include <optional>
#include <string>
#include <vector>

#include "hsurf/errors.hpp"
#include "hsurf/germ.hpp"
#include "hsurf/milnor.hpp"
#include "hsurf/rational.hpp"

namespace hsurf {

/// A connected stratum of the singular locus, summarized by its dimension
/// and generic transversal singularity type.
struct StratumSummary {
    std::string label;
    int dim = 0;              // complex dimension of the stratum
    GermSpec transversal;     // transversal singularity type
    bool is_top = false;      // dim equals s
};

/// An isolated singular point (used when s = 0).
struct IsolatedSingularity {
    std::string label;
    GermSpec germ;
};

/// The global input record: V = {f = 0} in CP^{n+1} of degree d with r
/// irreducible components and an s-dimensional singular locus (s = -1 means
/// smooth), described by stratum summaries.
struct HypersurfaceProfile {
    int n = 1;
    int d = 1;
    int r = 1;
    int s = -1;
    std::vector<StratumSummary> strata;
    std::vector<IsolatedSingularity> isolated;
    bool q_homology_manifold = false;
    std::optional<Integer> chi_override;
};

struct Violation {
    std::string field;
    std::string message;
};

/// Every violated invariant, as data. An empty result means the profile
/// satisfies all downstream preconditions. The cap bounds the jet oracle
/// when an explicit isolated germ needs its Milnor number checked.
inline std::vector<Violation> validate(const HypersurfaceProfile& p,
                                       int degree_cap = kDefaultJetDegreeCap) {
    std::vector<Violation> out;
    auto bad = [&](std::string field, std::string message) {
        out.push_back({std::move(field), std::move(message)});
    };

    if (p.n < 1) bad("n", "ambient middle dimension n must be >= 1");
    if (p.d < 1) bad("d", "degree d must be >= 1");
    if (p.r < 1) bad("r", "component count r must be >= 1");
    if (p.s < -1) bad("s", "singular dimension s must be >= -1");
    if (p.s >= p.n) bad("s", "a reduced hypersurface has s < n");

    const bool has_sing = !p.strata.empty() || !p.isolated.empty();
    if (p.s == -1 && has_sing)
        bad("s", "s = -1 (smooth) requires empty strata and isolated lists");
    if (p.s >= 0 && !has_sing)
        bad("s", "s >= 0 requires singularity data (strata or isolated points)");
    if (p.s == 0) {
        if (p.isolated.empty()) bad("isolated", "s = 0 requires a nonempty isolated list");
        if (!p.strata.empty()) bad("strata", "s = 0 requires an empty strata list");
    }
    if (p.s >= 1) {
        if (!p.isolated.empty())
            bad("isolated", "the isolated list is reserved for s = 0; use dim-0 strata");
        bool has_top = false;
        for (const auto& st : p.strata)
            if (st.dim == p.s) has_top = true;
        if (!p.strata.empty() && !has_top)
            bad("strata", "no stratum has the declared top dimension s");
    }
    if (p.r >= 2 && p.s != p.n - 1)
        bad("r", "r >= 2 requires s = n-1 (two components meet in dimension n-1)");
    if (p.q_homology_manifold && p.r >= 2)
        bad("r", "a Q-homology manifold hypersurface is irreducible (its top cohomology "
                 "has rank 1 = r)");

    for (const auto& st : p.strata) {
        const std::string field = "strata[" + st.label + "]";
        if (st.dim < 0 || st.dim > p.s)
            bad(field, "stratum dimension must lie in [0, s]");
        if (st.is_top != (st.dim == p.s))
            bad(field, "is_top must hold exactly when dim equals s");
        for (const auto& msg : germ_violations(st.transversal)) bad(field, msg);
        const int vc = germ_variable_count(st.transversal);
        if (vc >= 0 && vc != p.n - st.dim + 1)
            bad(field, "transversal germ has " + std::to_string(vc) +
                           " variables; a dim-" + std::to_string(st.dim) +
                           " stratum needs n - dim + 1 = " +
                           std::to_string(p.n - st.dim + 1));
    }

    for (const auto& iso : p.isolated) {
        const std::string field = "isolated[" + iso.label + "]";
        auto germ_msgs = germ_violations(iso.germ);
        for (const auto& msg : germ_msgs) bad(field, msg);
        if (!germ_msgs.empty()) continue;
        const int vc = germ_variable_count(iso.germ);
        if (vc >= 0 && vc != p.n + 1)
            bad(field, "isolated germ has " + std::to_string(vc) +
                           " variables; expected n + 1 = " + std::to_string(p.n + 1));
        try {
            if (milnor(iso.germ, degree_cap).mu < 1)
                bad(field, "isolated singular point must have Milnor number >= 1");
        } catch (const error& e) {
            bad(field, std::string("Milnor number computation failed: ") + e.what());
        }
    }

    return out;
}

inline void require_valid(const HypersurfaceProfile& p) {
    auto violations = validate(p);
    if (violations.empty()) return;
    std::string msg = "invalid profile:";
    for (const auto& v : violations) msg += "\n  " + v.field + ": " + v.message;
    throw error(msg);
}

using SymMatrix = std::vector<std::vector<Rational>>;

/// Rank of a rational matrix by exact Gaussian elimination.
inline int matrix_rank(SymMatrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t rr = rank + 1; rr < rows; ++rr) {
            if (m[rr][col] == 0) continue;
            const Rational f = m[rr][col] / m[rank][col];
            for (std::size_t cc = col; cc < cols; ++cc) m[rr][cc] -= f * m[rank][cc];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

/// Rank of a symmetric quadric matrix, rejecting non-symmetric input.
inline int quadric_rank(const SymMatrix& q) {
    const std::size_t size = q.size();
    if (size == 0) throw error("quadric matrix is empty");
    for (const auto& row : q)
        if (row.size() != size) throw non_symmetric();
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = i + 1; j < size; ++j)
            if (q[i][j] != q[j][i]) throw non_symmetric();
    return matrix_rank(q);
}

/// Profile of the quadric hypersurface {x^T Q x = 0} in CP^{n+1}. Full rank
/// gives the smooth profile; ranks 4 <= q <= n+1 give the singular closed
/// form: the singular locus is a linear CP^s, s = n+1-q, with transversal
/// type A_1 in q variables.
inline HypersurfaceProfile quadric_profile(int n, const SymMatrix& matrix) {
    if (n < 1) throw error("n must be >= 1");
    if (matrix.size() != static_cast<std::size_t>(n) + 2)
        throw error("quadric matrix must have size n+2 = " + std::to_string(n + 2));
    bool all_zero = true;
    for (const auto& row : matrix)
        for (const auto& e : row)
            if (e != 0) all_zero = false;
    if (all_zero) throw error("quadric matrix is zero");

    const int q = quadric_rank(matrix);
    HypersurfaceProfile p;
    p.n = n;
    p.d = 2;
    p.r = 1;
    if (q == n + 2) {
        p.s = -1;
        return p;
    }
    if (q <= 3) throw rank_out_of_range(q);
    p.s = n + 1 - q;
    const GermSpec a1 = BrieskornGerm{std::vector<int>(q, 2)};  // q = n - s + 1 variables
    if (p.s == 0) {
        p.isolated.push_back({"vertex", a1});
    } else {
        p.strata.push_back({"vertex-locus", p.s, a1, true});
    }
    return p;
}

}  // namespace hsurf

#endif
