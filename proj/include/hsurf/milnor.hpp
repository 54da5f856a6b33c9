#ifndef HSURF_MILNOR_HPP
#define HSURF_MILNOR_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hsurf/errors.hpp"
#include "hsurf/germ.hpp"
#include "hsurf/polynomial.hpp"
#include "hsurf/rational.hpp"

namespace hsurf {

enum class MilnorMethod { Brieskorn, WeightedHomogeneous, JetOracle, Direct };

inline std::string to_string(MilnorMethod m) {
    switch (m) {
        case MilnorMethod::Brieskorn: return "Brieskorn";
        case MilnorMethod::WeightedHomogeneous: return "WeightedHomogeneous";
        case MilnorMethod::JetOracle: return "JetOracle";
        case MilnorMethod::Direct: return "Direct";
    }
    return "?";
}

struct MilnorResult {
    Integer mu;
    MilnorMethod method;
    std::optional<int> oracle_stabilization_degree;  // present iff method == JetOracle
};

inline constexpr int kDefaultJetDegreeCap = 16;

/// mu = prod(ai - 1) for the germ x1^a1 + ... + xk^ak.
inline MilnorResult milnor_brieskorn(const std::vector<int>& exponents) {
    if (exponents.empty()) throw error("Brieskorn germ needs at least one exponent");
    Integer mu = 1;
    for (int a : exponents) {
        if (a < 2) throw error("Brieskorn exponent " + std::to_string(a) + " is < 2");
        mu *= (a - 1);
    }
    return {mu, MilnorMethod::Brieskorn, std::nullopt};
}

/// Milnor-Orlik: mu = prod((dw - wi)/wi) for an isolated weighted-homogeneous
/// germ. A non-integer product signals non-isolated or inconsistent data.
inline MilnorResult milnor_weighted(const std::vector<int>& weights, int degree) {
    if (weights.empty()) throw error("weighted germ needs at least one weight");
    if (degree < 1) throw error("weighted degree must be positive");
    Rational mu = 1;
    for (int w : weights) {
        if (w < 1 || w > degree)
            throw error("weights must satisfy 0 < w <= degree; got " + std::to_string(w));
        mu *= Rational(degree - w, w);
    }
    if (!is_integer(mu))
        throw non_integer_milnor("weighted Milnor product " + to_string(mu) +
                                 " is not an integer; the germ is not isolated "
                                 "weighted-homogeneous with these weights");
    return {numerator(mu), MilnorMethod::WeightedHomogeneous, std::nullopt};
}

namespace detail {

inline void enumerate_monomials(int nvars, int idx, int left, std::vector<int>& exps,
                                std::vector<Monomial>& out) {
    if (idx == nvars) {
        out.push_back(Monomial{exps});
        return;
    }
    for (int v = 0; v <= left; ++v) {
        exps[idx] = v;
        enumerate_monomials(nvars, idx + 1, left - v, exps, out);
    }
    exps[idx] = 0;
}

/// All monomials of total degree < cap in `nvars` variables, grlex order.
inline std::vector<Monomial> monomials_below(int nvars, int cap) {
    std::vector<Monomial> out;
    std::vector<int> exps(nvars, 0);
    enumerate_monomials(nvars, 0, cap - 1, exps, out);
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return GrlexLess{}(a, b); });
    return out;
}

/// Incremental row-echelon basis over Q with unit pivots.
class RationalEchelon {
public:
    explicit RationalEchelon(std::size_t cols) : cols_(cols) {}

    std::size_t rank() const { return rows_.size(); }

    /// Reduce `row` against the basis; if a nonzero remainder survives,
    /// absorb it as a new pivot row. Returns true if the rank grew.
    bool insert(std::vector<Rational> row) {
        std::size_t pivot = reduce(row);
        if (pivot == cols_) return false;
        const Rational inv = row[pivot];
        for (std::size_t c = pivot; c < cols_; ++c) row[c] /= inv;
        pivot_of_row_.push_back(pivot);
        pivot_row_[pivot] = rows_.size();
        rows_.push_back(std::move(row));
        return true;
    }

    /// True iff the vector lies in the row space.
    bool contains(std::vector<Rational> row) const { return reduce(row) == cols_; }

private:
    /// Forward-reduce in place; returns the leading column of the remainder,
    /// or cols_ if it vanished.
    std::size_t reduce(std::vector<Rational>& row) const {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (row[c] == 0) continue;
            auto it = pivot_row_.find(c);
            if (it == pivot_row_.end()) return c;
            const auto& basis = rows_[it->second];
            const Rational factor = row[c];
            for (std::size_t k = c; k < cols_; ++k) row[k] -= factor * basis[k];
        }
        return cols_;
    }

    std::size_t cols_;
    std::map<std::size_t, std::size_t> pivot_row_;
    std::vector<std::size_t> pivot_of_row_;
    std::vector<std::vector<Rational>> rows_;
};

}  // namespace detail

/// Independent Milnor-number oracle: dim_Q of Q[x]/(J(f) + m^N) by exact
/// Gaussian elimination for increasing N, accepting the answer once the
/// dimension repeats and every degree-(N-1) monomial reduces to zero modulo
/// the truncated ideal. The two conditions give m^{N-1} <= J + m^N, which
/// pins the quotient to the local Jacobian algebra from that point on.
inline MilnorResult milnor_jet_oracle(const MultiPoly& germ,
                                      int degree_cap = kDefaultJetDegreeCap) {
    if (degree_cap < 2) throw error("jet oracle degree cap must be >= 2");
    if (germ.constant_term() != 0) throw error("germ does not vanish at the origin");
    const int nvars = static_cast<int>(germ.vars().size());
    if (nvars == 0) throw error("germ has no variables");

    std::vector<MultiPoly> jac;
    for (auto& g : germ.jacobian())
        if (!g.is_zero()) jac.push_back(std::move(g));
    if (jac.empty()) throw empty_jacobian();

    std::optional<Integer> prev_dim;
    for (int N = 2; N <= degree_cap; ++N) {
        const auto monos = detail::monomials_below(nvars, N);
        std::map<Monomial, std::size_t, GrlexLess> col_of;
        for (std::size_t i = 0; i < monos.size(); ++i) col_of.emplace(monos[i], i);
        const std::size_t cols = monos.size();

        detail::RationalEchelon basis(cols);
        for (const auto& g : jac) {
            for (const auto& m : monos) {
                // g * m truncated below degree N
                std::vector<Rational> row(cols, Rational(0));
                bool nonzero = false;
                for (const auto& [gm, gc] : g.terms()) {
                    Monomial prod = gm;
                    for (int i = 0; i < nvars; ++i) prod.exps[i] += m.exps[i];
                    if (prod.degree() >= N) continue;
                    row[col_of.at(prod)] += gc;
                    nonzero = true;
                }
                if (nonzero) basis.insert(std::move(row));
            }
        }

        const Integer dim = Integer(cols) - Integer(basis.rank());
        // dim_N is nondecreasing: Q[x]/(J+m^{N+1}) surjects onto Q[x]/(J+m^N)
        if (prev_dim && dim < *prev_dim)
            throw internal_error("jet oracle dimension decreased between truncation degrees");

        if (prev_dim && dim == *prev_dim) {
            bool top_reducible = true;
            for (const auto& m : monos) {
                if (m.degree() != N - 1) continue;
                std::vector<Rational> unit(cols, Rational(0));
                unit[col_of.at(m)] = 1;
                if (!basis.contains(std::move(unit))) {
                    top_reducible = false;
                    break;
                }
            }
            if (top_reducible) return {dim, MilnorMethod::JetOracle, N};
        }
        prev_dim = dim;
    }
    throw not_stabilized(degree_cap);
}

namespace detail {

/// A sum of pure powers ci * x_{s(i)}^{ai} covering each variable exactly
/// once, all ai >= 2. Anything else is not treated as Brieskorn.
inline std::optional<std::vector<int>> recognize_brieskorn(const MultiPoly& germ) {
    const std::size_t nvars = germ.vars().size();
    if (germ.terms().size() != nvars || nvars == 0) return std::nullopt;
    std::vector<int> exponents(nvars, 0);
    for (const auto& [m, c] : germ.terms()) {
        int var = -1;
        for (std::size_t i = 0; i < nvars; ++i) {
            if (m.exps[i] == 0) continue;
            if (var != -1) return std::nullopt;  // mixed monomial
            var = static_cast<int>(i);
        }
        if (var == -1) return std::nullopt;  // constant term
        if (exponents[var] != 0) return std::nullopt;
        if (m.exps[var] < 2) return std::nullopt;
        exponents[var] = m.exps[var];
    }
    for (int a : exponents)
        if (a == 0) return std::nullopt;
    return exponents;
}

}  // namespace detail

/// Dispatch on the germ description. Explicit germs that are recognizably
/// Brieskorn are computed by both the closed form and the jet oracle, and a
/// disagreement is an error rather than a silent choice.
inline MilnorResult milnor(const GermSpec& spec, int degree_cap = kDefaultJetDegreeCap) {
    if (auto* b = std::get_if<BrieskornGerm>(&spec)) return milnor_brieskorn(b->exponents);
    if (auto* w = std::get_if<WeightedGerm>(&spec)) return milnor_weighted(w->weights, w->degree);
    if (auto* d = std::get_if<DirectMu>(&spec)) {
        if (d->mu < 0) throw error("direct Milnor number is negative");
        return {d->mu, MilnorMethod::Direct, std::nullopt};
    }
    const auto& germ = std::get<ExplicitGerm>(spec).poly;
    if (auto exps = detail::recognize_brieskorn(germ)) {
        const MilnorResult closed = milnor_brieskorn(*exps);
        const MilnorResult oracle = milnor_jet_oracle(germ, degree_cap);
        if (closed.mu != oracle.mu)
            throw cross_check_mismatch(closed.mu.str(), oracle.mu.str());
        return closed;
    }
    return milnor_jet_oracle(germ, degree_cap);
}

}  // namespace hsurf

#endif
