#ifndef HSURF_GERM_HPP
#define HSURF_GERM_HPP

#include <string>
#include <variant>
#include <vector>

#include "hsurf/polynomial.hpp"
#include "hsurf/rational.hpp"

namespace hsurf {

/// x1^a1 + ... + xk^ak with all ai >= 2.
struct BrieskornGerm {
    std::vector<int> exponents;
};

/// Weighted-homogeneous singularity data: weights wi and weighted degree dw,
/// with 0 < wi <= dw.
struct WeightedGerm {
    std::vector<int> weights;
    int degree = 0;
};

/// An explicit polynomial germ vanishing at the origin.
struct ExplicitGerm {
    MultiPoly poly;
};

/// A Milnor number supplied directly by the user.
struct DirectMu {
    Integer mu;
};

using GermSpec = std::variant<BrieskornGerm, WeightedGerm, ExplicitGerm, DirectMu>;

/// Number of ambient variables, where the germ carries that information.
/// Brieskorn and weighted germs have one variable per exponent/weight;
/// a direct mu has no ambient dimension (returns -1).
inline int germ_variable_count(const GermSpec& spec) {
    if (auto* b = std::get_if<BrieskornGerm>(&spec))
        return static_cast<int>(b->exponents.size());
    if (auto* w = std::get_if<WeightedGerm>(&spec)) return static_cast<int>(w->weights.size());
    if (auto* e = std::get_if<ExplicitGerm>(&spec))
        return static_cast<int>(e->poly.vars().size());
    return -1;
}

/// Structural violations of the germ invariants, as messages.
inline std::vector<std::string> germ_violations(const GermSpec& spec) {
    std::vector<std::string> out;
    if (auto* b = std::get_if<BrieskornGerm>(&spec)) {
        if (b->exponents.empty()) out.push_back("Brieskorn germ needs at least one exponent");
        for (int a : b->exponents)
            if (a < 2) out.push_back("Brieskorn exponent " + std::to_string(a) + " is < 2");
    } else if (auto* w = std::get_if<WeightedGerm>(&spec)) {
        if (w->weights.empty()) out.push_back("weighted germ needs at least one weight");
        if (w->degree < 1) out.push_back("weighted degree must be positive");
        for (int wi : w->weights) {
            if (wi < 1) out.push_back("weight " + std::to_string(wi) + " is not positive");
            else if (wi > w->degree)
                out.push_back("weight " + std::to_string(wi) + " exceeds the weighted degree");
        }
    } else if (auto* e = std::get_if<ExplicitGerm>(&spec)) {
        if (e->poly.constant_term() != 0)
            out.push_back("explicit germ does not vanish at the origin");
    } else if (auto* d = std::get_if<DirectMu>(&spec)) {
        if (d->mu < 0) out.push_back("direct Milnor number is negative");
    }
    return out;
}

inline std::string describe(const GermSpec& spec) {
    if (auto* b = std::get_if<BrieskornGerm>(&spec)) {
        std::string s = "brieskorn[";
        for (std::size_t i = 0; i < b->exponents.size(); ++i)
            s += (i ? "," : "") + std::to_string(b->exponents[i]);
        return s + "]";
    }
    if (auto* w = std::get_if<WeightedGerm>(&spec)) {
        std::string s = "weighted[";
        for (std::size_t i = 0; i < w->weights.size(); ++i)
            s += (i ? "," : "") + std::to_string(w->weights[i]);
        return s + ";" + std::to_string(w->degree) + "]";
    }
    if (auto* e = std::get_if<ExplicitGerm>(&spec)) return "poly(" + e->poly.render() + ")";
    return "mu=" + std::get<DirectMu>(spec).mu.str();
}

}  // namespace hsurf

#endif
