#ifndef HSURF_EXACT_SEQUENCE_HPP
#define HSURF_EXACT_SEQUENCE_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hsurf/errors.hpp"
#include "hsurf/group_info.hpp"
#include "hsurf/profile.hpp"
#include "hsurf/rational.hpp"

namespace hsurf {

/// One group in a finite exact sequence: a known nonnegative rank or a named
/// unknown. Zero groups are implicitly prepended and appended.
struct RankTerm {
    std::string name;
    std::optional<Integer> value;

    static RankTerm known(Integer v, std::string name = "") {
        return {std::move(name), std::move(v)};
    }
    static RankTerm unknown(std::string name) { return {std::move(name), std::nullopt}; }
};

struct ExactSequenceSpec {
    std::vector<RankTerm> terms;
};

struct RankInterval {
    Integer lo;
    ExtendedRank hi;
    bool operator==(const RankInterval& o) const { return lo == o.lo && hi == o.hi; }
};

struct RankSolution {
    bool feasible = false;
    std::map<std::string, RankInterval> intervals;  // keyed by term/variable name
};

namespace detail {

inline Integer floor_rat(const Rational& q) {
    Integer num = numerator(q), den = denominator(q);  // den > 0
    Integer quot = num / den;
    if (num % den != 0 && num < 0) --quot;
    return quot;
}

inline Integer ceil_rat(const Rational& q) {
    Integer num = numerator(q), den = denominator(q);
    Integer quot = num / den;
    if (num % den != 0 && num > 0) ++quot;
    return quot;
}

/// sum(coef_i * x_i) + constant >= 0 with rational entries.
struct LinIneq {
    std::vector<Rational> coef;
    Rational constant;
};

/// Scale to a primitive integer vector so duplicates can be discarded.
inline std::vector<Integer> normalized_key(const LinIneq& row) {
    Integer lcm_den = 1;
    for (const auto& c : row.coef)
        lcm_den = boost::multiprecision::lcm(lcm_den, denominator(c));
    lcm_den = boost::multiprecision::lcm(lcm_den, denominator(row.constant));
    std::vector<Integer> key;
    key.reserve(row.coef.size() + 1);
    Integer g = 0;
    auto push = [&](const Rational& c) {
        Integer v = numerator(c) * (lcm_den / denominator(c));
        g = boost::multiprecision::gcd(g, v);
        key.push_back(std::move(v));
    };
    for (const auto& c : row.coef) push(c);
    push(row.constant);
    if (g > 1)
        for (auto& v : key) v /= g;
    return key;
}

/// Fourier-Motzkin elimination over the rationals. Rounding the final
/// interval endpoints inward to integers is exact for the systems built
/// here: every exactness relation reads rank = i_{j-1} + i_j with
/// coefficients in {0, +-1} and interval-shaped supports, so the constraint
/// matrix is totally unimodular and the LP optima are attained at integer
/// points.
class FourierMotzkin {
public:
    explicit FourierMotzkin(std::size_t nvars) : nvars_(nvars) {}

    void add_equal(std::vector<Rational> coef, Rational constant) {
        LinIneq pos{coef, constant};
        LinIneq neg{std::move(coef), std::move(constant)};
        for (auto& c : neg.coef) c = -c;
        neg.constant = -neg.constant;
        add(std::move(pos));
        add(std::move(neg));
    }

    void add_nonneg(std::size_t var) {
        LinIneq row{std::vector<Rational>(nvars_, Rational(0)), Rational(0)};
        row.coef[var] = 1;
        add(std::move(row));
    }

    void add(LinIneq row) {
        auto key = normalized_key(row);
        if (seen_.insert(std::move(key)).second) rows_.push_back(std::move(row));
    }

    /// Eliminate every variable except `keep` (or all if keep is npos);
    /// returns false as soon as an infeasible constant row appears.
    bool eliminate_to(std::size_t keep) {
        for (std::size_t v = 0; v < nvars_; ++v) {
            if (v == keep) continue;
            if (!eliminate(v)) return false;
        }
        return check_constants();
    }

    /// Interval for the kept variable after eliminate_to(keep).
    RankInterval interval(std::size_t keep) const {
        std::optional<Integer> lo;
        std::optional<Integer> hi;
        for (const auto& row : rows_) {
            const Rational& c = row.coef[keep];
            if (c == 0) continue;
            if (c > 0) {
                Integer bound = ceil_rat(-row.constant / c);
                if (!lo || bound > *lo) lo = bound;
            } else {
                Integer bound = floor_rat(row.constant / -c);
                if (!hi || bound < *hi) hi = bound;
            }
        }
        RankInterval out{lo.value_or(Integer(0)),
                         hi ? ExtendedRank::of(*hi) : ExtendedRank::inf()};
        return out;
    }

    bool feasible_interval(std::size_t keep) const {
        auto iv = interval(keep);
        return iv.hi.infinite || iv.lo <= iv.hi.value;
    }

private:
    bool eliminate(std::size_t v) {
        std::vector<LinIneq> lower, upper, rest;
        for (auto& row : rows_) {
            const Rational& c = row.coef[v];
            if (c == 0)
                rest.push_back(std::move(row));
            else if (c > 0)
                lower.push_back(std::move(row));
            else
                upper.push_back(std::move(row));
        }
        rows_.clear();
        seen_.clear();
        for (auto& row : rest) add(std::move(row));
        for (const auto& l : lower) {
            for (const auto& u : upper) {
                // cancel v: (-c_u) * l + c_l * u, both multipliers positive
                const Rational ml = -u.coef[v];
                const Rational mu = l.coef[v];
                LinIneq combined{std::vector<Rational>(nvars_, Rational(0)), Rational(0)};
                for (std::size_t i = 0; i < nvars_; ++i)
                    combined.coef[i] = ml * l.coef[i] + mu * u.coef[i];
                combined.constant = ml * l.constant + mu * u.constant;
                add(std::move(combined));
            }
        }
        return check_constants();
    }

    bool check_constants() const {
        for (const auto& row : rows_) {
            bool all_zero = true;
            for (const auto& c : row.coef)
                if (c != 0) all_zero = false;
            if (all_zero && row.constant < 0) return false;
        }
        return true;
    }

    std::size_t nvars_;
    std::vector<LinIneq> rows_;
    std::set<std::vector<Integer>> seen_;
};

struct SequenceSystem {
    std::size_t nvars = 0;
    std::size_t n_images = 0;
    std::map<std::string, std::size_t> unknown_index;  // name -> variable index
    std::vector<std::size_t> term_unknown;  // per term: unknown var or npos

    FourierMotzkin build(const ExactSequenceSpec& seq) const {
        FourierMotzkin fm(nvars);
        for (std::size_t v = 0; v < nvars; ++v) fm.add_nonneg(v);
        const std::size_t m = seq.terms.size();
        for (std::size_t j = 0; j < m; ++j) {
            // rank(A_j) = i_{j-1} + i_j with the boundary images pinned to 0
            std::vector<Rational> coef(nvars, Rational(0));
            Rational constant = 0;
            if (j >= 1) coef[j - 1] += 1;
            if (j + 1 < m) coef[j] += 1;
            if (seq.terms[j].value) {
                constant = -Rational(*seq.terms[j].value);
            } else {
                coef[term_unknown[j]] -= 1;
            }
            fm.add_equal(std::move(coef), std::move(constant));
        }
        return fm;
    }
};

inline SequenceSystem make_system(const ExactSequenceSpec& seq) {
    SequenceSystem sys;
    const std::size_t m = seq.terms.size();
    sys.n_images = m >= 1 ? m - 1 : 0;
    sys.nvars = sys.n_images;
    sys.term_unknown.assign(m, static_cast<std::size_t>(-1));
    for (std::size_t j = 0; j < m; ++j) {
        if (seq.terms[j].value) {
            if (*seq.terms[j].value < 0) throw error("known ranks must be nonnegative");
            continue;
        }
        if (seq.terms[j].name.empty()) throw error("unknown terms need a name");
        auto [it, inserted] = sys.unknown_index.emplace(seq.terms[j].name, sys.nvars);
        if (inserted) ++sys.nvars;
        sys.term_unknown[j] = it->second;
    }
    return sys;
}

}  // namespace detail

/// Tightest per-term integer rank intervals consistent with exactness.
/// Image-rank variables i_j >= 0 carry the relations rank(A_j) = i_{j-1} + i_j
/// (with zero images off both ends); Fourier-Motzkin elimination projects the
/// system onto each variable in turn. Infeasibility is a result, not an error.
inline RankSolution solve_ranks(const ExactSequenceSpec& seq) {
    RankSolution out;
    if (seq.terms.empty()) {
        out.feasible = true;
        return out;
    }
    auto sys = detail::make_system(seq);

    {
        auto fm = sys.build(seq);
        if (!fm.eliminate_to(static_cast<std::size_t>(-1))) return out;  // infeasible
    }

    std::map<std::string, RankInterval> intervals;
    for (const auto& [name, var] : sys.unknown_index) {
        auto fm = sys.build(seq);
        if (!fm.eliminate_to(var) || !fm.feasible_interval(var)) return out;
        intervals.emplace(name, fm.interval(var));
    }
    // known terms report point intervals under their (possibly empty) names
    for (std::size_t j = 0; j < seq.terms.size(); ++j) {
        const auto& t = seq.terms[j];
        if (!t.value || t.name.empty()) continue;
        intervals.emplace(t.name, RankInterval{*t.value, ExtendedRank::of(*t.value)});
    }
    out.feasible = true;
    out.intervals = std::move(intervals);
    return out;
}

/// Classical exactness test: the alternating rank sum of a finite exact
/// sequence of finitely generated abelian groups vanishes.
inline bool alternating_sum_check(const ExactSequenceSpec& seq) {
    Integer sum = 0;
    bool negate = false;
    for (const auto& t : seq.terms) {
        if (!t.value) throw error("alternating_sum_check needs every rank known");
        sum += negate ? -*t.value : *t.value;
        negate = !negate;
    }
    return sum == 0;
}

/// Known ranks to thread into a specialization-sequence instance: Betti
/// numbers of V by degree, and vanishing-cohomology ranks by degree.
struct SpecializationKnowns {
    std::map<int, Integer> v_ranks;
    std::map<int, Integer> phi_ranks;
};

/// The degree-window exact sequence tying H^k(V), H^k(V_t) and H^k_phi(V)
/// for k in [n-1, n+s+2]. Concentration zeroes the phi terms outside
/// [n, n+s], which seals the window into a finite exact sequence.
inline ExactSequenceSpec specialization_instance(const HypersurfaceProfile& profile,
                                                 const CohomologyTable& smooth,
                                                 const SpecializationKnowns& knowns = {}) {
    require_valid(profile);
    if (smooth.variant != TableVariant::SmoothReference)
        throw error("specialization_instance needs a smooth reference table");
    const int n = profile.n, s = profile.s;
    if (!smooth.has_row(2 * n) || smooth.has_row(2 * n + 1))
        throw error("smooth reference table does not match n (inconsistent window)");
    for (const auto& r : smooth.rows)
        if (!r.is_exact()) throw error("smooth reference table must be exact");

    ExactSequenceSpec seq;
    auto deg = [](const char* base, int k) { return std::string(base) + std::to_string(k); };
    for (int k = n - 1; k <= n + s + 2; ++k) {
        // H^k(V)
        if (auto it = knowns.v_ranks.find(k); it != knowns.v_ranks.end())
            seq.terms.push_back(RankTerm::known(it->second, deg("b", k) + "(V)"));
        else
            seq.terms.push_back(RankTerm::unknown(deg("b", k) + "(V)"));
        // H^k(V_t)
        Integer bt = (k <= 2 * n && k >= 0) ? *smooth.row(k).exact_rank : Integer(0);
        seq.terms.push_back(RankTerm::known(bt, deg("b", k) + "(Vt)"));
        // H^k_phi(V)
        if (k < n || k > n + s) {
            seq.terms.push_back(RankTerm::known(0, deg("phi", k)));
        } else if (auto it = knowns.phi_ranks.find(k); it != knowns.phi_ranks.end()) {
            seq.terms.push_back(RankTerm::known(it->second, deg("phi", k)));
        } else {
            seq.terms.push_back(RankTerm::unknown(deg("phi", k)));
        }
    }
    return seq;
}

}  // namespace hsurf

#endif
