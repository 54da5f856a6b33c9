#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "hsurf/milnor.hpp"
#include "hsurf/parse.hpp"

using namespace hsurf;

TEST_CASE("milnor_brieskorn closed form", "[milnor]") {
    REQUIRE(milnor_brieskorn({2, 2, 2}).mu == 1);  // A_1 germ x^2+y^2+z^2
    REQUIRE(milnor_brieskorn({2, 3, 3}).mu == 4);  // y^2+x^3+v^3
    for (int k = 1; k <= 5; ++k)  // A_k germs x^{k+1}+y^2
        REQUIRE(milnor_brieskorn({k + 1, 2}).mu == k);
    REQUIRE(milnor_brieskorn({2, 2, 2}).method == MilnorMethod::Brieskorn);
    REQUIRE_FALSE(milnor_brieskorn({2, 2}).oracle_stabilization_degree.has_value());
    REQUIRE_THROWS_AS(milnor_brieskorn({2, 1}), error);
}

TEST_CASE("milnor_weighted closed form", "[milnor]") {
    REQUIRE(milnor_weighted({1, 1}, 3).mu == 4);  // plane cubic cone germ
    REQUIRE(milnor_weighted({5, 5, 5}, 5).mu == 0);  // all weights equal the degree: smooth
    REQUIRE(milnor_weighted({3, 2, 2}, 6).mu == 4);  // y^2+x^3+v^3 rescaled
    REQUIRE(milnor_weighted({3, 2, 2}, 6).method == MilnorMethod::WeightedHomogeneous);
    REQUIRE_THROWS_AS(milnor_weighted({2, 3}, 7), non_integer_milnor);
    REQUIRE_THROWS_AS(milnor_weighted({0, 1}, 3), error);
    REQUIRE_THROWS_AS(milnor_weighted({4, 1}, 3), error);
}

TEST_CASE("milnor_weighted agrees with milnor_brieskorn on pure powers", "[milnor][property]") {
    // weights d/a_i scaled to integers: for exponents (a1..ak) take
    // d = lcm(a) and w_i = d / a_i
    for (int a1 = 2; a1 <= 5; ++a1) {
        for (int a2 = 2; a2 <= 5; ++a2) {
            const int d = std::lcm(a1, a2);
            auto w = milnor_weighted({d / a1, d / a2}, d);
            auto b = milnor_brieskorn({a1, a2});
            REQUIRE(w.mu == b.mu);
        }
    }
}

TEST_CASE("jet oracle: worked cases", "[milnor]") {
    auto a1 = milnor_jet_oracle(parse_poly("x^2+y^2", {"x", "y"}));
    REQUIRE(a1.mu == 1);
    REQUIRE(a1.method == MilnorMethod::JetOracle);
    REQUIRE(a1.oracle_stabilization_degree == 3);

    auto a2 = milnor_jet_oracle(parse_poly("x^3+y^2", {"x", "y"}));
    REQUIRE(a2.mu == 2);  // quotient basis {1, x}

    auto e = milnor_jet_oracle(parse_poly("y^2+x^3+v^3", {"y", "x", "v"}));
    REQUIRE(e.mu == 4);

    // four variables: suspension leaves the Milnor number alone
    auto s1 = milnor_jet_oracle(parse_poly("x^2+y^2+z^2+w^2", {"x", "y", "z", "w"}));
    REQUIRE(s1.mu == 1);
    auto s4 = milnor_jet_oracle(parse_poly("x^3+y^3+z^2+w^2", {"x", "y", "z", "w"}));
    REQUIRE(s4.mu == 4);

    // smooth germ: Jacobian contains a unit
    REQUIRE(milnor_jet_oracle(parse_poly("x + y^2", {"x", "y"})).mu == 0);
}

TEST_CASE("jet oracle: failure modes", "[milnor]") {
    // non-isolated: singular along the y-axis
    REQUIRE_THROWS_AS(milnor_jet_oracle(parse_poly("x^2*y", {"x", "y"}), 8), not_stabilized);
    try {
        milnor_jet_oracle(parse_poly("x^2*y", {"x", "y"}), 8);
    } catch (const not_stabilized& e) {
        REQUIRE(e.degree_cap() == 8);
    }
    REQUIRE_THROWS_AS(milnor_jet_oracle(parse_poly("0", {"x", "y"})), empty_jacobian);
    REQUIRE_THROWS_AS(milnor_jet_oracle(parse_poly("x", {"x"}), 1), error);
    REQUIRE_THROWS_AS(milnor_jet_oracle(parse_poly("1 + x^2", {"x", "y"})), error);
}

TEST_CASE("jet oracle equals Brieskorn product on the exponent grid", "[milnor][property]") {
    // exhaustive: exponents in {2,3,4}, up to 3 variables
    const std::vector<std::string> names{"x", "y", "z"};
    for (int k = 1; k <= 3; ++k) {
        std::vector<int> exps(k, 2);
        while (true) {
            MultiPoly germ(std::vector<std::string>(names.begin(), names.begin() + k));
            for (int i = 0; i < k; ++i) {
                std::vector<int> e(k, 0);
                e[i] = exps[i];
                germ.add_term(Monomial{e}, 1);
            }
            Integer expected = 1;
            for (int a : exps) expected *= (a - 1);
            auto got = milnor_jet_oracle(germ);
            REQUIRE(got.mu == expected);

            int i = k - 1;
            while (i >= 0 && exps[i] == 4) exps[i--] = 2;
            if (i < 0) break;
            ++exps[i];
        }
    }
}

TEST_CASE("jet oracle is invariant under variable permutation and scaling",
          "[milnor][property]") {
    const std::vector<std::string> xyv{"x", "y", "v"};
    const std::vector<std::string> vyx{"v", "y", "x"};
    auto base = milnor_jet_oracle(parse_poly("y^2+x^3+v^3", xyv));
    auto permuted = milnor_jet_oracle(parse_poly("y^2+x^3+v^3", vyx));
    REQUIRE(base.mu == permuted.mu);

    auto scaled = milnor_jet_oracle(parse_poly("y^2+x^3+v^3", xyv) * Rational(-7, 3));
    REQUIRE(scaled.mu == base.mu);

    // a non-quasihomogeneous check under variable swap
    auto f = parse_poly("x^3 + y^7 + x*y^5", {"x", "y"});
    auto g = parse_poly("y^3 + x^7 + y*x^5", {"x", "y"});
    REQUIRE(milnor_jet_oracle(f).mu == milnor_jet_oracle(g).mu);
}

TEST_CASE("milnor dispatch", "[milnor]") {
    REQUIRE(milnor(BrieskornGerm{{2, 3, 3}}).mu == 4);
    REQUIRE(milnor(WeightedGerm{{3, 2, 2}, 6}).mu == 4);

    auto both = milnor(ExplicitGerm{parse_poly("x^2+y^3+v^3", {"x", "y", "v"})});
    REQUIRE(both.mu == 4);
    REQUIRE(both.method == MilnorMethod::Brieskorn);  // cross-checked closed form

    auto direct = milnor(DirectMu{7});
    REQUIRE(direct.mu == 7);
    REQUIRE(direct.method == MilnorMethod::Direct);
    REQUIRE_THROWS_AS(milnor(DirectMu{-1}), error);

    // not recognizably Brieskorn: routed to the oracle
    auto mixed = milnor(ExplicitGerm{parse_poly("x^2 + x*y + y^2", {"x", "y"})});
    REQUIRE(mixed.method == MilnorMethod::JetOracle);
    REQUIRE(mixed.mu == 1);

    // repeated variable is not Brieskorn
    auto rep = milnor(ExplicitGerm{parse_poly("x^2 + x^3 + y^2", {"x", "y"})});
    REQUIRE(rep.method == MilnorMethod::JetOracle);
    REQUIRE(rep.mu == 1);
}
