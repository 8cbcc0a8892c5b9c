#include <random>

#include <doctest.h>
#include <json.hpp>

#include "rigid/convolution.hpp"
#include "rigid/g2.hpp"

using namespace rigid;

namespace {

const Character kHalf(1, 2);
const Character kThird(1, 3);

FormalLocalSystem quadratic_seed() { return rank_one(kHalf, kHalf); }

} // namespace

TEST_SUITE("convolution") {

TEST_CASE("convolution of the quadratic seed") {
    FormalLocalSystem g = mc(quadratic_seed(), kHalf);
    FormalLocalSystem want;
    want.finite_points.push_back({"alpha1", make_monodromy({{trivial_char(), {2}}})});
    want.finite_points.push_back({"alpha2", make_monodromy({{trivial_char(), {2}}})});
    want.at_infinity = make_monodromy({{kHalf, {2}}});
    CHECK(g == want);
    CHECK(g.rank() == 2);
    CHECK(g.rigidity_index() == 2);
    CHECK(g.provenance == Provenance::ConstructedByAlgorithm);
}

TEST_CASE("trivial convolution character is refused") {
    CHECK_THROWS_WITH_AS(mc(quadratic_seed(), trivial_char()),
                         doctest::Contains("invalid-character"), math_error);
}

TEST_CASE("input must be a valid system with two finite points") {
    FormalLocalSystem f;
    f.finite_points.push_back({"a", make_monodromy({{kHalf, {1}}})});
    f.at_infinity = make_monodromy({{kHalf, {1}}});
    CHECK_THROWS_AS(mc(f, kHalf), validation_error);
}

TEST_CASE("degenerate convolution reports the nonpositive rank") {
    FormalLocalSystem f;
    f.finite_points.push_back({"alpha1", make_monodromy({{trivial_char(), {2, 1}}})});
    f.finite_points.push_back({"alpha2", make_monodromy({{trivial_char(), {2, 1}}})});
    f.at_infinity = make_monodromy({{kThird, {1, 1, 1}}});
    f.validate();
    CHECK_THROWS_WITH_AS(mc(f, Character(2, 3)),
                         doctest::Contains("degenerate-convolution"), math_error);
}

TEST_CASE("involution and composition on tower intermediates") {
    const Character chis[] = {kHalf, kThird, Character(1, 7)};
    for (const auto& [phi, eta] : {std::pair<Character, Character>{{0, 1}, {0, 1}},
                                   {{1, 7}, {2, 7}},
                                   {{1, 5}, {1, 3}}}) {
        for (const auto& h : construct_h(phi, eta)) {
            for (const auto& chi : chis) {
                CAPTURE(h.rank());
                CHECK(mc_involution_check(h, chi));
            }
            // mc(mc(f, chi), rho) = mc(f, chi*rho) whenever chi*rho != 1
            CHECK(mc(mc(h, kHalf), kThird) == mc(h, mul(kHalf, kThird)));
            CHECK(mc(mc(h, kThird), kThird) == mc(h, mul(kThird, kThird)));
        }
    }
}

TEST_CASE("randomized towers keep involution, composition and rigidity") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> den(1, 9), lvl(0, 6);
    auto rand_char = [&]() {
        long long q = den(rng);
        return Character(std::uniform_int_distribution<long long>(0, q - 1)(rng), q);
    };
    int done = 0;
    while (done < 100) {
        Character phi = rand_char(), eta = rand_char();
        std::vector<FormalLocalSystem> tower;
        try {
            tower = construct_h(phi, eta);
        } catch (const math_error&) {
            continue; // parameters hit a forbidden product; resample
        }
        const FormalLocalSystem& h = tower[lvl(rng)];
        Character chi = rand_char(), rho = rand_char();
        if (is_trivial(chi) || is_trivial(rho) || is_trivial(mul(chi, rho))) continue;
        CAPTURE(phi.str());
        CAPTURE(eta.str());
        CHECK(mc_involution_check(h, chi));
        CHECK(mc(mc(h, chi), rho) == mc(h, mul(chi, rho)));
        CHECK(mc(h, chi).rigidity_index() == h.rigidity_index());
        ++done;
    }
}

TEST_CASE("middle tensor shifts characters pointwise") {
    FormalLocalSystem l = rank_one(kHalf, kThird);
    RankOneSystem tw{{{"alpha1", kThird}, {"alpha2", kHalf}}};
    FormalLocalSystem g = mt(l, tw);
    CHECK(g.finite_points[0].second.parts.count(mul(kHalf, kThird)) == 1);
    CHECK(g.finite_points[1].second.parts.count(mul(kThird, kHalf)) == 1);
    CHECK(g.at_infinity.parts.count(mul(l.at_infinity.det(), mul(kThird, kHalf))) == 1);
    g.validate();
    CHECK(mt(g, tw.dual()) == l);
}

TEST_CASE("twist with an unknown label is refused") {
    FormalLocalSystem l = rank_one(kHalf, kHalf);
    RankOneSystem tw{{{"bogus", kThird}}};
    CHECK_THROWS_WITH_AS(mt(l, tw), doctest::Contains("unknown finite point"),
                         validation_error);
}

TEST_CASE("missing twist labels act trivially") {
    FormalLocalSystem l = rank_one(kHalf, kHalf);
    RankOneSystem tw{{{"alpha1", kThird}}};
    FormalLocalSystem g = mt(l, tw);
    CHECK(g.finite_points[1].second == l.finite_points[1].second);
    CHECK(g.at_infinity.parts.count(mul(trivial_char(), kThird)) == 1);
}

TEST_CASE("greedy reduction of a construction tower reaches rank one") {
    FormalLocalSystem h6 = construct_h(trivial_char(), trivial_char()).back();
    ReductionTrace tr = katz_reduce(h6);
    CHECK(tr.outcome == "rigid-reducible");
    CHECK(tr.ranks() == std::vector<int>{7, 6, 5, 4, 3, 2, 1});
    CHECK(tr.final_system.rank() == 1);

    ReductionTrace tr5 = katz_reduce(construct_h(Character(1, 7), Character(2, 7)).back());
    CHECK(tr5.outcome == "rigid-reducible");
    std::vector<int> r5 = tr5.ranks();
    REQUIRE(r5.size() >= 2);
    CHECK(r5.front() == 7);
    CHECK(r5.back() == 1);
    for (size_t i = 1; i < r5.size(); ++i) CHECK(r5[i] < r5[i - 1]);
}

TEST_CASE("rank-one input reduces trivially") {
    ReductionTrace tr = katz_reduce(rank_one(kHalf, kThird));
    CHECK(tr.outcome == "rigid-reducible");
    CHECK(tr.steps.empty());
    CHECK(tr.ranks() == std::vector<int>{1});
}

TEST_CASE("non-rigid input stops with no convolution direction") {
    FormalLocalSystem f;
    f.finite_points.push_back({"alpha1", make_monodromy({{kHalf, {1, 1}}})});
    f.finite_points.push_back({"alpha2", make_monodromy({{kHalf, {1, 1}}})});
    f.at_infinity = make_monodromy({{trivial_char(), {2}}});
    f.validate();
    CHECK(f.rigidity_index() == 6);
    ReductionTrace tr = katz_reduce(f);
    CHECK(tr.outcome == "no-nontrivial-character-at-infinity");
    CHECK(tr.ranks() == std::vector<int>{2, 2});
    CHECK(tr.steps.size() == 1);
    CHECK(!tr.steps[0].chi.has_value());
}

TEST_CASE("reduction trace serializes to JSON") {
    ReductionTrace tr = katz_reduce(construct_h(trivial_char(), trivial_char()).back());
    nlohmann::json j = nlohmann::json::parse(to_json(tr));
    CHECK(j["start_rank"] == 7);
    CHECK(j["outcome"] == "rigid-reducible");
    CHECK(j["steps"].size() == 6);
    CHECK(j["steps"][0].contains("twist"));
    CHECK(j["final"]["finite_points"].size() == 2);
}

} // TEST_SUITE
