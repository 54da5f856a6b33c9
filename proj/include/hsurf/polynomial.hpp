#ifndef HSURF_POLYNOMIAL_HPP
#define HSURF_POLYNOMIAL_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "hsurf/errors.hpp"
#include "hsurf/rational.hpp"

namespace hsurf {

/// Exponent vector of a single term. Length always equals the ambient
/// variable count of the owning polynomial.
struct Monomial {
    std::vector<int> exps;

    int degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }
    bool is_constant() const {
        return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
    }
    bool operator==(const Monomial& other) const = default;
};

/// Graded lexicographic order: lower total degree first, ties broken
/// lexicographically on the exponent vector. Used both as the canonical
/// term order and as the column order of the jet oracle's matrices.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return std::lexicographical_compare(a.exps.begin(), a.exps.end(), b.exps.begin(),
                                            b.exps.end());
    }
};

/// Multivariate polynomial with exact rational coefficients over a fixed,
/// ordered variable list. Immutable in spirit: all operations return new
/// values; no zero coefficients are ever stored.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    explicit MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

    static MultiPoly zero(std::vector<std::string> variables) {
        return MultiPoly(std::move(variables));
    }

    static MultiPoly constant(std::vector<std::string> variables, const Rational& c) {
        MultiPoly p(std::move(variables));
        p.add_term(Monomial{std::vector<int>(p.vars_.size(), 0)}, c);
        return p;
    }

    static MultiPoly variable(std::vector<std::string> variables, std::size_t index) {
        MultiPoly p(std::move(variables));
        std::vector<int> e(p.vars_.size(), 0);
        e.at(index) = 1;
        p.add_term(Monomial{std::move(e)}, 1);
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational constant_term() const {
        return coefficient(Monomial{std::vector<int>(vars_.size(), 0)});
    }

    /// Merge a term into the polynomial, dropping the entry if it cancels.
    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        if (m.exps.size() != vars_.size())
            throw error("monomial arity does not match the variable list");
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Max total degree over terms; empty for the zero polynomial.
    std::optional<int> total_degree() const {
        if (terms_.empty()) return std::nullopt;
        // grlex order puts the highest-degree terms last
        return terms_.rbegin()->first.degree();
    }

    /// True iff all terms share one total degree. The zero polynomial is
    /// homogeneous vacuously.
    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
    }

    MultiPoly operator-() const {
        MultiPoly out(vars_);
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
        return out;
    }

    MultiPoly operator+(const MultiPoly& rhs) const {
        require_same_vars(rhs);
        MultiPoly out = *this;
        for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
        return out;
    }

    MultiPoly operator-(const MultiPoly& rhs) const {
        require_same_vars(rhs);
        MultiPoly out = *this;
        for (const auto& [m, c] : rhs.terms_) out.add_term(m, -c);
        return out;
    }

    MultiPoly operator*(const MultiPoly& rhs) const {
        require_same_vars(rhs);
        MultiPoly out(vars_);
        for (const auto& [ma, ca] : terms_) {
            for (const auto& [mb, cb] : rhs.terms_) {
                Monomial m = ma;
                for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] += mb.exps[i];
                out.add_term(m, ca * cb);
            }
        }
        return out;
    }

    MultiPoly operator*(const Rational& c) const {
        MultiPoly out(vars_);
        if (c == 0) return out;
        for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
        return out;
    }

    bool operator==(const MultiPoly& other) const {
        return vars_ == other.vars_ && terms_ == other.terms_;
    }

    /// Partial derivatives in variable order, exact coefficients.
    std::vector<MultiPoly> jacobian() const {
        std::vector<MultiPoly> out;
        out.reserve(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            MultiPoly d(vars_);
            for (const auto& [m, c] : terms_) {
                if (m.exps[i] == 0) continue;
                Monomial dm = m;
                dm.exps[i] -= 1;
                d.add_term(dm, c * m.exps[i]);
            }
            out.push_back(std::move(d));
        }
        return out;
    }

    /// Substitute 1 for the chart variable; the result lives in the
    /// remaining variables.
    MultiPoly dehomogenize(std::size_t chart) const {
        if (chart >= vars_.size()) throw error("chart index out of range");
        std::vector<std::string> new_vars;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (i != chart) new_vars.push_back(vars_[i]);
        MultiPoly out(new_vars);
        for (const auto& [m, c] : terms_) {
            Monomial nm;
            nm.exps.reserve(new_vars.size());
            for (std::size_t i = 0; i < m.exps.size(); ++i)
                if (i != chart) nm.exps.push_back(m.exps[i]);
            out.add_term(nm, c);
        }
        return out;
    }

    /// Canonical rendering: graded-lex descending, coefficients pulled into
    /// the grammar's `coeff` form so that parse(render(p)) == p.
    std::string render() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            const bool negative = c < 0;
            const Rational abs_c = negative ? Rational(-c) : c;
            if (out.empty()) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            out += render_term(m, abs_c);
        }
        return out;
    }

private:
    void require_same_vars(const MultiPoly& other) const {
        if (vars_ != other.vars_)
            throw error("polynomials are over different variable lists");
    }

    static std::string render_coeff(const Rational& c) {
        if (is_integer(c)) return numerator(c).str();
        return "(" + numerator(c).str() + "/" + denominator(c).str() + ")";
    }

    std::string render_term(const Monomial& m, const Rational& abs_c) const {
        std::string body;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (m.exps[i] == 0) continue;
            if (!body.empty()) body += "*";
            body += vars_[i];
            if (m.exps[i] > 1) body += "^" + std::to_string(m.exps[i]);
        }
        if (body.empty()) return render_coeff(abs_c);
        if (abs_c == 1) return body;
        return render_coeff(abs_c) + "*" + body;
    }

    std::vector<std::string> vars_;
    TermMap terms_;
};

inline MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p * c; }

}  // namespace hsurf

#endif
