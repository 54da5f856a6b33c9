#ifndef HSURF_PROVENANCE_HPP
#define HSURF_PROVENANCE_HPP

#include <array>
#include <string>
#include <string_view>

namespace hsurf::prov {

// Registry of the results this library evaluates. Every GroupInfo row and
// report note carries one of these keys; rendering resolves them to the
// statements below, so no uncited claim reaches the user.

inline constexpr std::string_view kLefschetz = "lefschetz.hyperplane";
inline constexpr std::string_view kKato = "kato.range";
inline constexpr std::string_view kTopComponents = "top.components";
inline constexpr std::string_view kSmoothReference = "smooth.reference";
inline constexpr std::string_view kSmoothBetti = "smooth.betti";
inline constexpr std::string_view kSmoothEuler = "smooth.euler";
inline constexpr std::string_view kConcentration = "concentration.cohomology";
inline constexpr std::string_view kConcentrationHom = "concentration.homology";
inline constexpr std::string_view kMiddleFree = "middle.free";
inline constexpr std::string_view kMiddleHomology = "middle.homology";
inline constexpr std::string_view kSpecializationBound = "specialization.bound";
inline constexpr std::string_view kTopRankBound = "top.rank.bound";
inline constexpr std::string_view kIsolatedExact = "isolated.exact";
inline constexpr std::string_view kIsolatedEuler = "isolated.euler";
inline constexpr std::string_view kCurveExact = "curve.exact";
inline constexpr std::string_view kQhmDuality = "qhm.duality";
inline constexpr std::string_view kQhmEuler = "qhm.euler";
inline constexpr std::string_view kQuadricCone = "quadric.cone";
inline constexpr std::string_view kConeCurve = "cone.curve";
inline constexpr std::string_view kLefschetzSupplement = "lefschetz.supplement";
inline constexpr std::string_view kStratifiedEuler = "stratified.euler";

struct Citation {
    std::string_view key;
    std::string_view statement;
};

inline constexpr std::array<Citation, 21> kRegistry{{
    {kLefschetz,
     "Lefschetz hyperplane theorem: restriction from the ambient projective space is an "
     "isomorphism on H^k for k < n, so H^k(V) = Z for even k < n and 0 for odd k < n."},
    {kKato,
     "Kato's theorem: H^k(V) = H^k of the ambient projective space for n+s+2 <= k <= 2n, "
     "with the restriction map given by multiplication by d in even degrees."},
    {kTopComponents,
     "Top cohomology counts irreducible components: H^{2n}(V) = Z^r."},
    {kSmoothReference,
     "A smooth degree-d hypersurface has the cohomology of CP^n away from the middle "
     "degree; the middle rank follows from the degree."},
    {kSmoothBetti,
     "Middle Betti number of a smooth degree-d hypersurface: "
     "b_n = ((d-1)^{n+2} + (-1)^{n+1})/d + (3(-1)^n + 1)/2."},
    {kSmoothEuler,
     "Euler characteristic of a smooth degree-d hypersurface: "
     "chi = (n+2) - (1/d)(1 + (-1)^{n+1}(d-1)^{n+2})."},
    {kConcentration,
     "Vanishing cohomology is concentrated in degrees [n, n+s], and the degree-n group "
     "is free abelian."},
    {kConcentrationHom,
     "Vanishing homology is concentrated in degrees [n+1, n+s+1], and the top group is "
     "free abelian."},
    {kMiddleFree,
     "The middle-degree group injects into the middle cohomology of a smooth degree-d "
     "hypersurface: rank at most the smooth middle Betti number, and the cohomology "
     "group H^n(V) is free."},
    {kMiddleHomology,
     "H_{n+s+1}(V) splits off the corresponding vanishing homology group and is free."},
    {kSpecializationBound,
     "Specialization sequence bound: b_k(V) <= rank H^{k-1}_phi(V) + b_k(CP^n) for "
     "n+1 <= k <= n+s+1."},
    {kTopRankBound,
     "Transversal Milnor bound: b_{n+s+1}(V) <= 1 + sum of transversal Milnor numbers "
     "over the top-dimensional singular strata, strictly when n+s is even."},
    {kIsolatedExact,
     "For isolated singularities the only nonzero vanishing group has rank equal to the "
     "sum of the Milnor numbers, and the window exact sequence is five-term."},
    {kIsolatedEuler,
     "Euler characteristic with isolated singularities: the smooth value plus "
     "(-1)^{n+1} times the sum of the Milnor numbers."},
    {kCurveExact,
     "Plane curves: H_0 = Z, H_2 = Z^r, and H_1 is free of rank "
     "r + 1 + d^2 - 3d - sum of Milnor numbers."},
    {kQhmDuality,
     "A Q-homology-manifold hypersurface has rational vanishing cohomology concentrated "
     "in the middle degree, so its Betti numbers off the middle equal those of CP^n."},
    {kQhmEuler,
     "For a Q-homology manifold the middle Betti number is determined by the Euler "
     "characteristic: b_n = b_n(CP^n) + (-1)^n (chi - (n+1))."},
    {kQuadricCone,
     "A rank-q quadric is a cone over a smooth quadric with vertex a linear CP^s; its "
     "cohomology is that of the vertex in low degrees and of the smooth quadric shifted "
     "by 2s+2 above."},
    {kConeCurve,
     "For the projective cone over a plane curve C, H^k(V) = H^{k-2}(C) for k >= 2."},
    {kLefschetzSupplement,
     "Lefschetz supplement: H^k(V, V cap H) vanishes for k < n and for "
     "n+s+1 < k < 2n; the top group is Z^r and the degree-n group is torsion-free."},
    {kStratifiedEuler,
     "Two-step stratified Euler characteristic: chi(V) = chi(Y) - chi(S1 minus Y) * mu "
     "- chi(S0) * (chi(F0) - 1) for a transversal smooth member Y."},
}};

inline bool is_registered(std::string_view key) {
    for (const auto& c : kRegistry)
        if (c.key == key) return true;
    return false;
}

inline std::string_view statement(std::string_view key) {
    for (const auto& c : kRegistry)
        if (c.key == key) return c.statement;
    return "";
}

}  // namespace hsurf::prov

#endif
