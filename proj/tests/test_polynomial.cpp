#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hsurf/parse.hpp"
#include "hsurf/polynomial.hpp"

using namespace hsurf;

namespace {

MultiPoly rand_poly(std::mt19937& rng, const std::vector<std::string>& vars, int max_terms = 5,
                    int max_exp = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expd(0, max_exp);
    std::uniform_int_distribution<int> coefd(-6, 6);
    MultiPoly p(vars);
    const int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        std::vector<int> exps(vars.size());
        for (auto& e : exps) e = expd(rng);
        p.add_term(Monomial{exps}, coefd(rng));
    }
    return p;
}

MultiPoly rand_homogeneous(std::mt19937& rng, const std::vector<std::string>& vars, int degree,
                           int max_terms = 6) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> coefd(-5, 5);
    MultiPoly p(vars);
    const int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        // split `degree` across the variables
        std::vector<int> exps(vars.size(), 0);
        int left = degree;
        for (std::size_t i = 0; i + 1 < vars.size(); ++i) {
            std::uniform_int_distribution<int> part(0, left);
            exps[i] = part(rng);
            left -= exps[i];
        }
        exps.back() = left;
        p.add_term(Monomial{exps}, coefd(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("parse_poly: canonical forms from the worked examples", "[polynomial]") {
    const std::vector<std::string> xyz{"x", "y", "z"};
    auto quadric = parse_poly("x^2 + y^2 + z^2", xyz);
    REQUIRE(quadric.terms().size() == 3);
    for (const auto& [m, c] : quadric.terms()) {
        REQUIRE(c == 1);
        REQUIRE(m.degree() == 2);
    }

    const std::vector<std::string> v5{"x", "y", "z", "t", "v"};
    auto threefold = parse_poly("y^2*z + x^3 + t*x^2 + v^3", v5);
    REQUIRE(threefold.terms().size() == 4);
    REQUIRE(threefold.total_degree() == 3);
    REQUIRE(threefold.is_homogeneous());

    auto zero = parse_poly("0", {"x", "y"});
    REQUIRE(zero.is_zero());
    REQUIRE(zero.terms().empty());
}

TEST_CASE("parse_poly: coefficients, signs, whitespace", "[polynomial]") {
    const std::vector<std::string> xy{"x", "y"};
    auto p = parse_poly("(1/2)*x^2 - 3*y + 1", xy);
    REQUIRE(p.coefficient(Monomial{{2, 0}}) == Rational(1, 2));
    REQUIRE(p.coefficient(Monomial{{0, 1}}) == -3);
    REQUIRE(p.constant_term() == 1);

    REQUIRE(parse_poly("  x ^ 2+ y", xy) == parse_poly("x^2+y", xy));
    REQUIRE(parse_poly("-x + x", xy).is_zero());
    REQUIRE(parse_poly("x*x", xy) == parse_poly("x^2", xy));
    REQUIRE(parse_poly("x^0", xy) == parse_poly("1", xy));
    REQUIRE(parse_poly("(-1/2)*x", xy).coefficient(Monomial{{1, 0}}) == Rational(-1, 2));
}

TEST_CASE("parse_poly: error reporting", "[polynomial]") {
    const std::vector<std::string> xy{"x", "y"};
    REQUIRE_THROWS_AS(parse_poly("x + w", xy), parse_error);
    try {
        parse_poly("x + w", xy);
    } catch (const parse_error& e) {
        REQUIRE(e.offset() == 4);
    }
    REQUIRE_THROWS_AS(parse_poly("x^99999999999", xy), parse_error);
    REQUIRE_THROWS_AS(parse_poly("x+", xy), parse_error);
    REQUIRE_THROWS_AS(parse_poly("2x", xy), parse_error);
    REQUIRE_THROWS_AS(parse_poly("(1/0)*x", xy), parse_error);
    REQUIRE_THROWS_AS(parse_poly("x y", xy), parse_error);
}

TEST_CASE("total_degree and is_homogeneous", "[polynomial]") {
    const std::vector<std::string> xyz{"x", "y", "z"};
    REQUIRE(parse_poly("x^3 + y^2*z", xyz).total_degree() == 3);
    REQUIRE(parse_poly("x*y*z", xyz).total_degree() == 3);
    REQUIRE_FALSE(parse_poly("0", xyz).total_degree().has_value());

    REQUIRE(parse_poly("x^2 + y", {"x", "y"}).is_homogeneous() == false);
    REQUIRE(parse_poly("0", xyz).is_homogeneous());
    const std::vector<std::string> v5{"x", "y", "z", "t", "v"};
    REQUIRE(parse_poly("y^2*z + x^3 + t*x^2 + v^3", v5).is_homogeneous());
}

TEST_CASE("jacobian: hand-differentiated oracles", "[polynomial]") {
    const std::vector<std::string> xy{"x", "y"};
    auto j1 = parse_poly("x^2+y^2", xy).jacobian();
    REQUIRE(j1[0] == parse_poly("2*x", xy));
    REQUIRE(j1[1] == parse_poly("2*y", xy));

    auto j2 = parse_poly("x^3+y^2", xy).jacobian();
    REQUIRE(j2[0] == parse_poly("3*x^2", xy));
    REQUIRE(j2[1] == parse_poly("2*y", xy));

    auto j3 = parse_poly("5", xy).jacobian();
    REQUIRE(j3[0].is_zero());
    REQUIRE(j3[1].is_zero());
}

TEST_CASE("dehomogenize: chart substitution", "[polynomial]") {
    const std::vector<std::string> xyz{"x", "y", "z"};
    auto cone = parse_poly("x*y*z", xyz);
    REQUIRE(cone.dehomogenize(2) == parse_poly("x*y", {"x", "y"}));

    auto q = parse_poly("x^2+y^2+z^2", xyz).dehomogenize(2);
    REQUIRE(q == parse_poly("x^2+y^2+1", {"x", "y"}));

    const std::vector<std::string> v5{"x", "y", "z", "t", "v"};
    auto local = parse_poly("y^2*z + x^3 + t*x^2 + v^3", v5).dehomogenize(3);
    REQUIRE(local == parse_poly("y^2*z + x^3 + x^2 + v^3", {"x", "y", "z", "v"}));

    REQUIRE_THROWS_AS(cone.dehomogenize(7), error);
}

TEST_CASE("mixed variable lists are rejected", "[polynomial]") {
    auto p = parse_poly("x", {"x", "y"});
    auto q = parse_poly("x", {"x", "z"});
    REQUIRE_THROWS_AS(p + q, error);
    REQUIRE_THROWS_AS(p * q, error);
}

TEST_CASE("parse/render round trip is the identity", "[polynomial][property]") {
    std::mt19937 rng(20240811);
    const std::vector<std::string> vars{"x", "y", "z"};
    for (int trial = 0; trial < 200; ++trial) {
        auto p = rand_poly(rng, vars);
        auto text = p.render();
        REQUIRE(parse_poly(text, vars) == p);
        REQUIRE(parse_poly(text, vars).render() == text);
    }
}

TEST_CASE("jacobian is linear", "[polynomial][property]") {
    std::mt19937 rng(7);
    const std::vector<std::string> vars{"x", "y"};
    for (int trial = 0; trial < 100; ++trial) {
        auto f = rand_poly(rng, vars);
        auto g = rand_poly(rng, vars);
        Rational a(3, 2), b(-2);
        auto lhs = (f * a + g * b).jacobian();
        auto jf = f.jacobian();
        auto jg = g.jacobian();
        for (std::size_t i = 0; i < vars.size(); ++i)
            REQUIRE(lhs[i] == jf[i] * a + jg[i] * b);
    }
}

TEST_CASE("Euler relation for homogeneous polynomials", "[polynomial][property]") {
    std::mt19937 rng(99);
    const std::vector<std::string> vars{"x", "y", "z"};
    for (int trial = 0; trial < 100; ++trial) {
        const int d = 1 + trial % 5;
        auto f = rand_homogeneous(rng, vars, d);
        auto jac = f.jacobian();
        MultiPoly sum(vars);
        for (std::size_t i = 0; i < vars.size(); ++i)
            sum = sum + MultiPoly::variable(vars, i) * jac[i];
        REQUIRE(sum == f * Rational(d));
    }
}

TEST_CASE("total degree is additive under products", "[polynomial][property]") {
    std::mt19937 rng(123);
    const std::vector<std::string> vars{"x", "y"};
    int checked = 0;
    while (checked < 100) {
        auto f = rand_poly(rng, vars);
        auto g = rand_poly(rng, vars);
        if (f.is_zero() || g.is_zero()) continue;
        ++checked;
        REQUIRE((f * g).total_degree().value() ==
                f.total_degree().value() + g.total_degree().value());
    }
}
