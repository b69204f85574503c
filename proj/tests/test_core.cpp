#include "support/fixtures.hpp"

#include "tsr/errors.hpp"

#include <doctest.h>

#include <sstream>

using namespace tsr;

TEST_CASE("closure of generators") {
    auto one_edge = simplicial_complex::closure({simplex{0, 1}});
    CHECK(one_edge.size() == 3);
    CHECK(one_edge.find(simplex{0}).has_value());
    CHECK(one_edge.find(simplex{1}).has_value());

    auto hollow = simplicial_complex::closure({simplex{0, 1}, simplex{1, 2}, simplex{0, 2}});
    CHECK(hollow.size() == 6);
    CHECK(hollow.dim() == 1);

    auto full = simplicial_complex::closure({simplex{0, 1, 2}});
    CHECK(full.size() == 7);
    CHECK(full.dim() == 2);

    // canonical iteration order: dimension, then lexicographic
    CHECK(full.at(0) == simplex{0});
    CHECK(full.at(3) == simplex{0, 1});
    CHECK(full.at(4) == simplex{0, 2});
    CHECK(full.at(6) == simplex{0, 1, 2});

    CHECK_THROWS_AS(simplicial_complex::closure({simplex{0, 1}, simplex{0, 1}}),
                    validation_error);
}

TEST_CASE("simplex canonical form") {
    CHECK_THROWS_AS(simplex(std::vector<int>{1, 0}), validation_error);
    CHECK_THROWS_AS(simplex(std::vector<int>{0, 0}), validation_error);
    CHECK_THROWS_AS(simplex(std::vector<int>{-1}), validation_error);
    CHECK(parse_simplex(" [0, 2,5]") == simplex{0, 2, 5});
    CHECK(format_simplex(simplex{0, 2, 5}) == "[0,2,5]");
    CHECK_THROWS_AS(parse_simplex("[]"), parse_error);
    CHECK_THROWS_AS(parse_simplex("0,1"), parse_error);
}

TEST_CASE("validate_filtration") {
    CHECK_NOTHROW(fixtures::tri());

    auto K = fixtures::tri().complex_ptr();
    SUBCASE("duplicate value") {
        std::map<simplex, rat> vals{{{0}, 0},      {{1}, 1},      {{2}, 2},
                                    {{0, 1}, 3},   {{1, 2}, 3},   {{0, 2}, 5}};
        CHECK_THROWS_WITH_AS(validate_filtration(K, vals),
                             doctest::Contains("DuplicateValue"), validation_error);
    }
    SUBCASE("monotonicity violation") {
        std::map<simplex, rat> vals{{{0}, 10},     {{1}, 1},      {{2}, 2},
                                    {{0, 1}, 3},   {{1, 2}, 4},   {{0, 2}, 5}};
        CHECK_THROWS_WITH_AS(validate_filtration(K, vals),
                             doctest::Contains("MonotonicityViolation"), validation_error);
    }
    SUBCASE("missing value") {
        std::map<simplex, rat> vals{{{0}, 0}};
        CHECK_THROWS_WITH_AS(validate_filtration(K, vals), doctest::Contains("MissingValue"),
                             validation_error);
    }
}

TEST_CASE("injectivity radius") {
    CHECK(injectivity_radius(fixtures::tri()) == rat(1));
    CHECK(injectivity_radius(fixtures::edge()) == rat(1));
    CHECK(injectivity_radius(fixtures::path3g()) == rat(1));

    auto lone = std::make_shared<simplicial_complex>(simplicial_complex::closure({simplex{0}}));
    auto f = validate_filtration(lone, std::vector<rat>{rat(0)});
    CHECK_THROWS_WITH_AS(injectivity_radius(f), doctest::Contains("SingleSimplex"), domain_error);
}

TEST_CASE("genericity") {
    CHECK_FALSE(is_generic(fixtures::tri())); // gap 1 realized twice
    CHECK(is_generic(fixtures::path3g()));

    auto lone = std::make_shared<simplicial_complex>(simplicial_complex::closure({simplex{0}}));
    CHECK(is_generic(validate_filtration(lone, std::vector<rat>{rat(0)})));
}

TEST_CASE("upper and lower sets") {
    auto tri = fixtures::tri().complex();
    CHECK(upper_set(tri, simplex{0, 1}) == std::vector<simplex>{simplex{0, 1}});
    CHECK(upper_set(tri, simplex{0}) ==
          std::vector<simplex>{simplex{0}, simplex{0, 1}, simplex{0, 2}});
    CHECK(lower_set(tri, simplex{1, 2}) ==
          std::vector<simplex>{simplex{1}, simplex{2}, simplex{1, 2}});
    CHECK(lower_set(tri, simplex{0}) == std::vector<simplex>{simplex{0}});

    auto trif = fixtures::trif().complex();
    CHECK(upper_set(trif, simplex{0, 1}) ==
          std::vector<simplex>{simplex{0, 1}, simplex{0, 1, 2}});
    CHECK(lower_set(trif, simplex{0, 1, 2}).size() == 7);

    CHECK_THROWS_WITH_AS(upper_set(tri, simplex{7}), doctest::Contains("SimplexNotInComplex"),
                         validation_error);

    // σ sits in both of its own sets; equal-dimension upper/lower sets are disjoint
    for (int i = 0; i < trif.size(); ++i) {
        auto up = trif.upper_set(i);
        auto lo = trif.lower_set(i);
        CHECK(std::find(up.begin(), up.end(), i) != up.end());
        CHECK(std::find(lo.begin(), lo.end(), i) != lo.end());
        for (int j = 0; j < trif.size(); ++j) {
            if (i == j || trif.at(i).dim() != trif.at(j).dim()) continue;
            auto lo_j = trif.lower_set(j);
            for (int u : trif.upper_set(i))
                CHECK(std::find(lo_j.begin(), lo_j.end(), u) == lo_j.end());
        }
    }
}

TEST_CASE("filtration file round trip") {
    std::ostringstream out;
    write_filtration(out, fixtures::path3g());
    filtration back = read_filtration(*std::make_unique<std::istringstream>(out.str()));
    CHECK(back.complex() == fixtures::path3g().complex());
    for (int id = 0; id < back.size(); ++id)
        CHECK(back.value(id) == fixtures::path3g().value(id));

    std::ostringstream again;
    write_filtration(again, back);
    CHECK(again.str() == out.str()); // bit-exact
}

TEST_CASE("filtration file parsing") {
    SUBCASE("comments, decimals and fractions") {
        std::istringstream in("# a comment\n0 : 0\n1 : 0.5\n0 1 : 7/2  # inline\n");
        auto f = read_filtration(in);
        CHECK(f.value(simplex{1}) == rat(1, 2));
        CHECK(f.value(simplex{0, 1}) == rat(7, 2));
    }
    SUBCASE("not closed") {
        std::istringstream in("0 : 0\n0 1 : 1\n");
        CHECK_THROWS_WITH_AS(read_filtration(in), doctest::Contains("not closed"),
                             validation_error);
    }
    SUBCASE("syntax error") {
        std::istringstream in("0 ; 0\n");
        CHECK_THROWS_AS(read_filtration(in), parse_error);
    }
    SUBCASE("non-injective") {
        std::istringstream in("0 : 1\n1 : 1\n");
        CHECK_THROWS_WITH_AS(read_filtration(in), doctest::Contains("DuplicateValue"),
                             validation_error);
    }
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("101/100") == rat(101, 100));
    CHECK(parse_rational("-3.25") == rat(-13, 4));
    CHECK(parse_rational(" 4 ") == rat(4));
    CHECK(format_rational(rat(6, 4)) == "3/2");
    CHECK(format_rational(rat(-8, 2)) == "-4");
    CHECK_THROWS_AS(parse_rational("1/0"), parse_error);
    CHECK_THROWS_AS(parse_rational("x"), parse_error);
}
