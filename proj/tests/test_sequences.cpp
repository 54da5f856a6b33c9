#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "hsurf/exact_sequence.hpp"
#include "hsurf/profile.hpp"

using namespace hsurf;

namespace {

// Independent oracle: enumerate unknown assignments up to `cap` and keep the
// ones admitting a chain of nonnegative image ranks that closes at zero.
struct OracleReport {
    bool feasible = false;
    std::map<std::string, std::pair<Integer, Integer>> ranges;
};

bool chain_feasible(const std::vector<Integer>& ranks) {
    Integer image = 0;  // image of the implicit leading zero
    for (const auto& r : ranks) {
        image = r - image;
        if (image < 0) return false;
    }
    return image == 0;
}

OracleReport brute_force(const ExactSequenceSpec& seq, int cap) {
    std::vector<std::string> names;
    for (const auto& t : seq.terms)
        if (!t.value && std::find(names.begin(), names.end(), t.name) == names.end())
            names.push_back(t.name);

    OracleReport out;
    std::vector<int> assign(names.size(), 0);
    while (true) {
        std::vector<Integer> ranks;
        ranks.reserve(seq.terms.size());
        for (const auto& t : seq.terms) {
            if (t.value) {
                ranks.push_back(*t.value);
            } else {
                const auto idx =
                    std::find(names.begin(), names.end(), t.name) - names.begin();
                ranks.push_back(assign[idx]);
            }
        }
        if (chain_feasible(ranks)) {
            out.feasible = true;
            for (std::size_t i = 0; i < names.size(); ++i) {
                auto [it, inserted] = out.ranges.emplace(
                    names[i], std::make_pair(Integer(assign[i]), Integer(assign[i])));
                if (!inserted) {
                    it->second.first = std::min(it->second.first, Integer(assign[i]));
                    it->second.second = std::max(it->second.second, Integer(assign[i]));
                }
            }
        }
        std::size_t i = 0;
        while (i < assign.size() && assign[i] == cap) assign[i++] = 0;
        if (i == assign.size()) break;
        ++assign[i];
    }
    return out;
}

ExactSequenceSpec seq_known(std::initializer_list<int> ranks) {
    ExactSequenceSpec seq;
    int idx = 0;
    for (int r : ranks) seq.terms.push_back(RankTerm::known(r, "t" + std::to_string(idx++)));
    return seq;
}

CohomologyTable smooth_reference(std::vector<Integer> ranks) {
    CohomologyTable t;
    t.variant = TableVariant::SmoothReference;
    for (std::size_t k = 0; k < ranks.size(); ++k)
        t.rows.push_back(
            GroupInfo::free_of_rank(static_cast<int>(k), ranks[k], "smooth.reference"));
    return t;
}

HypersurfaceProfile cone_profile() {
    // projective cone over the triangle curve: three singular lines through
    // a point, each with transversal A_1
    HypersurfaceProfile p;
    p.n = 2;
    p.d = 3;
    p.r = 3;
    p.s = 1;
    p.strata.push_back({"L1", 1, BrieskornGerm{{2, 2}}, true});
    p.strata.push_back({"L2", 1, BrieskornGerm{{2, 2}}, true});
    p.strata.push_back({"L3", 1, BrieskornGerm{{2, 2}}, true});
    p.strata.push_back({"vertex", 0, DirectMu{4}, false});
    return p;
}

}  // namespace

TEST_CASE("solve_ranks: two unknowns around known middle ranks", "[sequences]") {
    ExactSequenceSpec seq;
    seq.terms.push_back(RankTerm::known(0));
    seq.terms.push_back(RankTerm::unknown("a"));
    seq.terms.push_back(RankTerm::known(7));
    seq.terms.push_back(RankTerm::known(2));
    seq.terms.push_back(RankTerm::unknown("b"));
    seq.terms.push_back(RankTerm::known(0));

    auto sol = solve_ranks(seq);
    REQUIRE(sol.feasible);
    REQUIRE(sol.intervals.at("a") == RankInterval{5, ExtendedRank::of(7)});
    REQUIRE(sol.intervals.at("b") == RankInterval{0, ExtendedRank::of(2)});

    // the solved system couples b = a - 5: check through the oracle
    auto oracle = brute_force(seq, 12);
    REQUIRE(oracle.feasible);
    REQUIRE(oracle.ranges.at("a") == std::make_pair(Integer(5), Integer(7)));
    REQUIRE(oracle.ranges.at("b") == std::make_pair(Integer(0), Integer(2)));
}

TEST_CASE("solve_ranks: exactness forces zero and alternating sums", "[sequences]") {
    ExactSequenceSpec pinched;
    pinched.terms.push_back(RankTerm::known(0));
    pinched.terms.push_back(RankTerm::unknown("x"));
    pinched.terms.push_back(RankTerm::known(0));
    auto sol = solve_ranks(pinched);
    REQUIRE(sol.feasible);
    REQUIRE(sol.intervals.at("x") == RankInterval{0, ExtendedRank::of(0)});

    ExactSequenceSpec middle;
    middle.terms.push_back(RankTerm::known(3));
    middle.terms.push_back(RankTerm::unknown("x"));
    middle.terms.push_back(RankTerm::known(3));
    auto sum = solve_ranks(middle);
    REQUIRE(sum.feasible);
    REQUIRE(sum.intervals.at("x") == RankInterval{6, ExtendedRank::of(6)});
}

TEST_CASE("alternating_sum_check", "[sequences]") {
    REQUIRE(alternating_sum_check(seq_known({2, 7, 5})));
    REQUIRE_FALSE(alternating_sum_check(seq_known({1, 1, 1})));
    REQUIRE(alternating_sum_check(seq_known({0, 7, 7, 2, 2, 0})));
    ExactSequenceSpec with_unknown;
    with_unknown.terms.push_back(RankTerm::unknown("x"));
    REQUIRE_THROWS_AS(alternating_sum_check(with_unknown), error);
}

TEST_CASE("fully-known feasible sequences give point intervals", "[sequences][property]") {
    auto seq = seq_known({2, 7, 5});
    auto sol = solve_ranks(seq);
    REQUIRE(sol.feasible);
    REQUIRE(sol.intervals.at("t0") == RankInterval{2, ExtendedRank::of(2)});
    REQUIRE(sol.intervals.at("t1") == RankInterval{7, ExtendedRank::of(7)});
    REQUIRE(sol.intervals.at("t2") == RankInterval{5, ExtendedRank::of(5)});
}

TEST_CASE("perturbing a known rank to an odd alternating sum is infeasible",
          "[sequences][property]") {
    auto seq = seq_known({2, 7, 5});
    REQUIRE(solve_ranks(seq).feasible);
    for (std::size_t j = 0; j < seq.terms.size(); ++j) {
        auto bumped = seq;
        bumped.terms[j].value = *bumped.terms[j].value + 1;  // makes the sum odd
        REQUIRE_FALSE(alternating_sum_check(bumped));
        REQUIRE_FALSE(solve_ranks(bumped).feasible);
    }
}

TEST_CASE("solve_ranks is invariant under sequence reversal", "[sequences][property]") {
    ExactSequenceSpec seq;
    seq.terms.push_back(RankTerm::known(1));
    seq.terms.push_back(RankTerm::known(7));
    seq.terms.push_back(RankTerm::unknown("a"));
    seq.terms.push_back(RankTerm::known(2));
    seq.terms.push_back(RankTerm::unknown("b"));
    seq.terms.push_back(RankTerm::known(1));

    auto forward = solve_ranks(seq);
    auto reversed = seq;
    std::reverse(reversed.terms.begin(), reversed.terms.end());
    auto backward = solve_ranks(reversed);
    REQUIRE(forward.feasible == backward.feasible);
    if (forward.feasible) REQUIRE(forward.intervals == backward.intervals);
}

TEST_CASE("Fourier-Motzkin matches brute-force enumeration", "[sequences][property]") {
    // a modest family here; the acceptance suite runs the full sweep
    const std::vector<std::vector<int>> patterns = {
        {-1, 3, 2},        {0, -1, 4, -2, 0}, {-1, -2},          {5, -1, 3, -2, 1},
        {-1, 7, 2, -2, 0}, {1, -1, 1, -2, 1}, {2, -1, -2, 3, 0},
    };
    // negative entries mark unknowns (-1 -> "u0", -2 -> "u1")
    for (const auto& pat : patterns) {
        ExactSequenceSpec seq;
        for (int v : pat) {
            if (v >= 0)
                seq.terms.push_back(RankTerm::known(v));
            else
                seq.terms.push_back(RankTerm::unknown("u" + std::to_string(-v - 1)));
        }
        auto sol = solve_ranks(seq);
        auto oracle = brute_force(seq, 25);
        REQUIRE(sol.feasible == oracle.feasible);
        if (!sol.feasible) continue;
        auto wider = brute_force(seq, 40);
        for (const auto& [name, range] : oracle.ranges) {
            const auto& iv = sol.intervals.at(name);
            REQUIRE(iv.lo == range.first);
            if (iv.hi.infinite) {
                // unbounded: the oracle's max must keep growing with its cap
                REQUIRE(wider.ranges.at(name).second > range.second);
            } else {
                REQUIRE(iv.hi.value == range.second);
                REQUIRE(iv.hi.value < 25);  // the cap never clipped this one
            }
        }
    }
}

TEST_CASE("specialization_instance: cone over the triangle curve", "[sequences]") {
    auto profile = cone_profile();
    REQUIRE(validate(profile).empty());
    auto smooth = smooth_reference({1, 0, 7, 0, 1});

    SpecializationKnowns knowns;
    knowns.v_ranks = {{1, 0}, {2, 1}, {3, 1}, {4, 3}, {5, 0}};

    auto seq = specialization_instance(profile, smooth, knowns);
    auto sol = solve_ranks(seq);
    REQUIRE(sol.feasible);
    REQUIRE(sol.intervals.at("phi2") == RankInterval{7, ExtendedRank::of(7)});
    REQUIRE(sol.intervals.at("phi3") == RankInterval{2, ExtendedRank::of(2)});
}

TEST_CASE("specialization_instance: smooth profile pins V to the smooth member",
          "[sequences]") {
    HypersurfaceProfile p;
    p.n = 2;
    p.d = 3;
    auto smooth = smooth_reference({1, 0, 7, 0, 1});
    auto seq = specialization_instance(p, smooth);

    // every vanishing term is emitted as a known zero
    for (const auto& t : seq.terms)
        if (t.name.rfind("phi", 0) == 0) REQUIRE(t.value == Integer(0));

    auto sol = solve_ranks(seq);
    REQUIRE(sol.feasible);
    REQUIRE(sol.intervals.at("b1(V)") == RankInterval{0, ExtendedRank::of(0)});
    REQUIRE(sol.intervals.at("b2(V)") == RankInterval{7, ExtendedRank::of(7)});
    REQUIRE(sol.intervals.at("b3(V)") == RankInterval{0, ExtendedRank::of(0)});
}

TEST_CASE("specialization_instance: isolated singularities give the 5-term window",
          "[sequences]") {
    HypersurfaceProfile p;  // cubic surface with one node
    p.n = 2;
    p.d = 3;
    p.s = 0;
    p.isolated.push_back({"node", BrieskornGerm{{2, 2, 2}}});
    auto smooth = smooth_reference({1, 0, 7, 0, 1});

    SpecializationKnowns knowns;
    knowns.phi_ranks = {{2, 1}};  // sum of Milnor numbers at the only window degree

    auto seq = specialization_instance(p, smooth, knowns);
    auto sol = solve_ranks(seq);
    REQUIRE(sol.feasible);
    REQUIRE(sol.intervals.at("b2(V)") == RankInterval{6, ExtendedRank::of(7)});
    REQUIRE(sol.intervals.at("b3(V)") == RankInterval{0, ExtendedRank::of(1)});
    REQUIRE(sol.intervals.at("b4(V)") == RankInterval{1, ExtendedRank::of(1)});
}

TEST_CASE("specialization_instance rejects mismatched windows", "[sequences]") {
    HypersurfaceProfile p;
    p.n = 3;
    p.d = 2;
    auto smooth = smooth_reference({1, 0, 7, 0, 1});  // a surface table, not n = 3
    REQUIRE_THROWS_AS(specialization_instance(p, smooth), error);
}
