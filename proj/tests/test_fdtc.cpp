#include "monodromy/fdtc.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace monodromy;

TEST_CASE("fractional Dehn twist coefficients of standard classes") {
    CHECK(fdtc(parse_twist_word("Ta Tb^-1")) == Rat(0));
    CHECK(fdtc(parse_twist_word("Ta Tb")) == Rat(1, 6));  // trefoil
    CHECK(fdtc(S11Class::boundary_twist()) == Rat(1));
    CHECK(fdtc(S11Class::identity()) == Rat(0));
    CHECK(fdtc(parse_twist_word("Ta")) == Rat(0));

    for (auto [p, q] : {std::pair<long, long>{2, 3}, {2, 5}, {3, 4}, {2, -3}}) {
        MClass mc;
        mc.periodic.push_back(torus_knot_piece(p, q));
        CHECK(side_fdtc(mc, {{0, 0}, 0}) == make_rat(1, p * q));
    }
}

TEST_CASE("cable composite coefficients") {
    S11Class fig8 = parse_twist_word("Ta Tb^-1");
    MClass cab;
    cab.periodic.push_back(cable_pattern_piece(2, 1));
    cab.torus.push_back({2, false, fig8});
    cab.curves.push_back({2, {{0, 0}, 1}, {{1, 0}, 0}, false});
    cab.validate();
    CHECK(side_fdtc(cab, {{0, 0}, 0}) == Rat(1, 2));  // root boundary
    CHECK(side_fdtc(cab, {{0, 0}, 1}) == Rat(-2));    // inner orbit, return map
    CHECK(side_fdtc(cab, {{1, 0}, 0}) == Rat(0));     // genus-one boundary
    CHECK(curve_fdtc_sum(cab, cab.curves[0]) == Rat(-2));
}

TEST_CASE("homogeneity under powers") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 120; ++trial) {
        S11Class w = S11Class::identity();
        int len = 1 + static_cast<int>(rng() % 5);
        for (int i = 0; i < len; ++i) {
            long n = static_cast<long>(rng() % 5) - 2;
            switch (rng() % 3) {
                case 0: w = w.compose(S11Class::twist_a(n)); break;
                case 1: w = w.compose(S11Class::twist_b(n)); break;
                default: w = w.compose(S11Class::boundary_twist(n)); break;
            }
        }
        long k = 1 + static_cast<long>(rng() % 5);
        REQUIRE(fdtc(w.pow(k)) == Rat(k) * fdtc(w));
    }
}
