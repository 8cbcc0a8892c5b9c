#include <algorithm>
#include <random>

#include <doctest.h>

#include "rigid/local_data.hpp"

using namespace rigid;

namespace {

LocalMonodromy h6_alpha1() {
    return make_monodromy(
        {{quadratic_char(), {1, 1, 1, 1}}, {trivial_char(), {1, 1, 1}}});
}

LocalMonodromy h6_alpha2() { return make_monodromy({{trivial_char(), {3, 2, 2}}}); }

} // namespace

TEST_SUITE("local_data") {

TEST_CASE("e_sequence and its inverse") {
    CHECK(e_sequence({3, 2, 2}) == std::vector<int>{3, 3, 1});
    CHECK(e_sequence({7}) == std::vector<int>{1, 1, 1, 1, 1, 1, 1});
    CHECK(e_sequence({1, 1, 1}) == std::vector<int>{3});
    CHECK(partition_from_e({3, 3, 1}) == Partition{3, 2, 2});
    CHECK(partition_from_e({2, 1, 0, 0}) == Partition{2, 1});
    CHECK(partition_from_e({}) == Partition{});
    CHECK_THROWS_AS(partition_from_e({1, 2}), math_error);
}

TEST_CASE("random partitions round-trip through e-sequences") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> nblocks(1, 8), blocklen(1, 6);
    for (int i = 0; i < 1000; ++i) {
        Partition p;
        int nb = nblocks(rng);
        for (int j = 0; j < nb; ++j) p.push_back(blocklen(rng));
        std::sort(p.rbegin(), p.rend());
        CAPTURE(i);
        CHECK(partition_from_e(e_sequence(p)) == p);
    }
}

TEST_CASE("make_monodromy merges repeated characters and sorts blocks") {
    LocalMonodromy m = make_monodromy(
        {{quadratic_char(), {1}}, {quadratic_char(), {2}}, {trivial_char(), {3}}});
    CHECK(m.parts.size() == 2);
    CHECK(m.parts[quadratic_char()] == Partition{2, 1});
    CHECK(m.degree() == 6);
    CHECK(m.e(quadratic_char(), 1) == 2);
    CHECK(m.e(quadratic_char(), 2) == 1);
    CHECK(m.e(Character(1, 3), 1) == 0);
}

TEST_CASE("determinant and identity tests") {
    CHECK(make_monodromy({{trivial_char(), {1, 1}}}).is_identity());
    CHECK(!make_monodromy({{trivial_char(), {2}}}).is_identity());
    CHECK(!make_monodromy({{quadratic_char(), {1}}}).is_identity());
    LocalMonodromy m = make_monodromy({{Character(1, 3), {2}}, {Character(1, 2), {1}}});
    // det = 2*(1/3) + 1*(1/2) = 7/6
    CHECK(m.det() == Character(1, 6));
}

TEST_CASE("GL centralizer dimensions of the rank-7 classes") {
    CHECK(centralizer_dim_gl(h6_alpha1()) == 25);
    CHECK(centralizer_dim_gl(h6_alpha2()) == 19);
    CHECK(centralizer_dim_gl(make_monodromy({{trivial_char(), {7}}})) == 7);
    CHECK(centralizer_dim_gl(make_monodromy({{trivial_char(), {1, 1, 1, 1, 1, 1, 1}}})) == 49);
}

TEST_CASE("rank_one systems") {
    FormalLocalSystem l = rank_one(Character(1, 2), Character(1, 3));
    CHECK(l.rank() == 1);
    CHECK(l.finite_points[0].first == "alpha1");
    CHECK(l.finite_points[1].first == "alpha2");
    CHECK(l.at_infinity.parts.count(Character(5, 6)) == 1);
    l.validate();
    CHECK(l.rigidity_index() == 2);
    CHECK(l.euler_characteristic() == -1);
}

TEST_CASE("validation catches the documented violations") {
    FormalLocalSystem f;
    f.finite_points.push_back({"a", make_monodromy({{quadratic_char(), {1}}})});
    f.at_infinity = make_monodromy({{quadratic_char(), {1}}});
    CHECK_THROWS_WITH_AS(f.validate(),
                         doctest::Contains("fewer than two finite singular points"),
                         validation_error);

    FormalLocalSystem g = rank_one(Character(1, 2), Character(1, 2));
    g.finite_points[0].second = make_monodromy({{trivial_char(), {1}}});
    CHECK_THROWS_WITH_AS(g.validate(), doctest::Contains("identity local monodromy"),
                         validation_error);

    FormalLocalSystem h = rank_one(Character(1, 2), Character(1, 2));
    h.at_infinity = make_monodromy({{Character(1, 3), {1}}});
    CHECK_THROWS_WITH_AS(h.validate(), doctest::Contains("determinant mismatch"),
                         validation_error);

    FormalLocalSystem k = rank_one(Character(1, 2), Character(1, 2));
    k.at_infinity = make_monodromy({{trivial_char(), {1, 1}}});
    CHECK_FALSE(k.violations().empty()); // degree mismatch at infinity
}

TEST_CASE("rigidity index of the rank-7 endpoint") {
    FormalLocalSystem f;
    f.finite_points.push_back({"alpha1", h6_alpha1()});
    f.finite_points.push_back({"alpha2", h6_alpha2()});
    f.at_infinity = make_monodromy({{trivial_char(), {7}}});
    f.validate();
    CHECK(f.rigidity_index() == -49 + 25 + 19 + 7);
    CHECK(f.rigidity_index() == 2);
    CHECK(f.euler_characteristic() == -7 + 3 + 3 + 1);
}

TEST_CASE("equality ignores label order and provenance") {
    FormalLocalSystem a = rank_one(Character(1, 2), Character(1, 3));
    FormalLocalSystem b = a;
    std::swap(b.finite_points[0], b.finite_points[1]);
    b.provenance = Provenance::ConstructedByAlgorithm;
    CHECK(a == b);
    b.finite_points[0].second = make_monodromy({{Character(2, 3), {1}}});
    CHECK(!(a == b));
}

TEST_CASE("JSON round trip") {
    FormalLocalSystem f;
    f.finite_points.push_back({"alpha1", h6_alpha1()});
    f.finite_points.push_back({"alpha2", h6_alpha2()});
    f.at_infinity = make_monodromy({{trivial_char(), {7}}});
    f.provenance = Provenance::ConstructedByAlgorithm;
    FormalLocalSystem g = system_from_json(to_json(f));
    CHECK(f == g);
    CHECK(g.provenance == Provenance::ConstructedByAlgorithm);
    CHECK(g.finite_points[0].first == "alpha1");
}

TEST_CASE("JSON parser rejects malformed input") {
    CHECK_THROWS_AS(system_from_json("not json"), validation_error);
    CHECK_THROWS_AS(system_from_json("{}"), validation_error);
    CHECK_THROWS_AS(system_from_json(R"({"finite_points": [], "infinity": {}})"),
                    validation_error);
    // duplicate character inside one monodromy
    CHECK_THROWS_WITH_AS(
        system_from_json(
            R"({"finite_points": [
                 {"label":"a","parts":[{"char":"1/2","blocks":[1]},{"char":"2/4","blocks":[1]}]},
                 {"label":"b","parts":[{"char":"0/1","blocks":[2]}]}],
                "infinity": {"parts":[{"char":"0/1","blocks":[4]}]}})"),
        doctest::Contains("duplicate character"), validation_error);
}

TEST_CASE("missing labels default to alphaN") {
    FormalLocalSystem f = system_from_json(
        R"({"finite_points": [
             {"parts":[{"char":"1/2","blocks":[1]}]},
             {"parts":[{"char":"1/2","blocks":[1]}]}],
            "infinity": {"parts":[{"char":"0/1","blocks":[1]}]}})");
    CHECK(f.finite_points[0].first == "alpha1");
    CHECK(f.finite_points[1].first == "alpha2");
    f.validate();
}

} // TEST_SUITE
