#ifndef HSURF_PARSE_HPP
#define HSURF_PARSE_HPP

#include <cctype>
#include <limits>
#include <string>
#include <vector>

#include "hsurf/errors.hpp"
#include "hsurf/polynomial.hpp"

namespace hsurf {

// Polynomial text grammar (whitespace-insensitive):
//
//   poly   := ['-'] term (('+' | '-') term)*
//   term   := coeff ['*' factor ('*' factor)*]
//           | factor ('*' factor)*
//   factor := var ['^' uint]
//   coeff  := int | '(' int '/' uint ')'
//   var    := identifier drawn from the supplied variable list
//   int    := ['-'] digits
//
// Parentheses appear only around rational coefficients. A bare coeff with no
// factors is a constant term, so "0" is the zero polynomial.
namespace detail {

class PolyParser {
public:
    PolyParser(const std::string& text, const std::vector<std::string>& variables)
        : text_(text), vars_(variables) {}

    MultiPoly parse() {
        MultiPoly acc(vars_);
        skip_ws();
        bool negate = accept('-');
        acc = acc + apply_sign(parse_term(), negate);
        skip_ws();
        while (!at_end()) {
            bool minus;
            if (accept('+'))
                minus = false;
            else if (accept('-'))
                minus = true;
            else
                throw parse_error("expected '+' or '-' between terms", pos_);
            acc = acc + apply_sign(parse_term(), minus);
            skip_ws();
        }
        return acc;
    }

private:
    static MultiPoly apply_sign(MultiPoly p, bool negate) { return negate ? -p : std::move(p); }

    MultiPoly parse_term() {
        skip_ws();
        if (at_end()) throw parse_error("expected a term", pos_);
        Rational coeff = 1;
        bool have_coeff = false;
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == '-') {
            coeff = parse_coeff();
            have_coeff = true;
        }
        MultiPoly term = MultiPoly::constant(vars_, coeff);
        if (have_coeff) {
            skip_ws();
            if (!accept('*')) return term;  // bare constant term
        }
        term = term * parse_factor();
        skip_ws();
        while (accept('*')) {
            term = term * parse_factor();
            skip_ws();
        }
        return term;
    }

    MultiPoly parse_factor() {
        skip_ws();
        const std::size_t start = pos_;
        if (at_end() || !is_ident_start(peek()))
            throw parse_error("expected a variable name", pos_);
        std::string name;
        while (!at_end() && is_ident_char(peek())) name += text_[pos_++];
        std::size_t index = vars_.size();
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) {
                index = i;
                break;
            }
        if (index == vars_.size())
            throw parse_error("unknown variable '" + name + "'", start);
        int exponent = 1;
        skip_ws();
        if (accept('^')) exponent = parse_exponent();
        std::vector<int> exps(vars_.size(), 0);
        exps[index] = exponent;
        MultiPoly p(vars_);
        p.add_term(Monomial{std::move(exps)}, 1);
        return p;
    }

    int parse_exponent() {
        skip_ws();
        const std::size_t start = pos_;
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw parse_error("expected an exponent", pos_);
        long long value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (text_[pos_++] - '0');
            if (value > std::numeric_limits<int>::max())
                throw parse_error("exponent overflow", start);
        }
        return static_cast<int>(value);
    }

    Rational parse_coeff() {
        skip_ws();
        bool negate = accept('-');
        skip_ws();
        if (accept('(')) {
            Integer num = parse_int();
            skip_ws();
            if (!accept('/')) throw parse_error("expected '/' in rational coefficient", pos_);
            const std::size_t den_pos = pos_;
            Integer den = parse_uint();
            if (den == 0) throw parse_error("zero denominator", den_pos);
            skip_ws();
            if (!accept(')')) throw parse_error("expected ')'", pos_);
            Rational q(num, den);
            return negate ? Rational(-q) : q;
        }
        Integer v = parse_int();
        return negate ? Rational(-v) : Rational(v);
    }

    Integer parse_int() {
        skip_ws();
        bool negate = accept('-');
        Integer v = parse_uint();
        return negate ? Integer(-v) : v;
    }

    Integer parse_uint() {
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw parse_error("expected a number", pos_);
        std::string digits;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            digits += text_[pos_++];
        return Integer(digits);
    }

    static bool is_ident_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    static bool is_ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    bool accept(char c) {
        if (!at_end() && peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    const std::string& text_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& variables) {
    return detail::PolyParser(text, variables).parse();
}

/// Variable names in order of first appearance, for callers that do not
/// supply an explicit list.
inline std::vector<std::string> infer_variables(const std::string& text) {
    std::vector<std::string> vars;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
                name += text[i++];
            if (std::find(vars.begin(), vars.end(), name) == vars.end()) vars.push_back(name);
        } else {
            ++i;
        }
    }
    return vars;
}

}  // namespace hsurf

#endif
