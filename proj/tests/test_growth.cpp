#include "monodromy/growth.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace monodromy;

namespace {
double to_double(const Rat& r) { return r.convert_to<double>(); }
const double kLogFig8 = std::log((3.0 + std::sqrt(5.0)) / 2.0);  // ~0.9624
}  // namespace

TEST_CASE("identity endomorphism has growth zero") {
    GrowthInterval g = growth_estimate(FreeGroupEndo::identity(2), 40);
    CHECK(to_double(g.lo) <= 0.0);
    CHECK(to_double(g.hi) >= 0.0);
    CHECK(to_double(g.width()) < 1e-6);
}

TEST_CASE("twist-word endomorphisms") {
    FreeGroupEndo e = endo_of_twist_word("Ta Tb^-1");
    CHECK((e.images[0] == WordVec{1, 2, 1}));
    CHECK((e.images[1] == WordVec{2, 1}));
    GrowthInterval g = growth_estimate(e, 40);
    CHECK(to_double(g.lo) <= kLogFig8);
    CHECK(kLogFig8 <= to_double(g.hi));
    CHECK(std::abs(to_double(g.midpoint()) - kLogFig8) < 0.05);
}

TEST_CASE("length-doubling endomorphism") {
    FreeGroupEndo e;
    e.rank = 2;
    e.images = {{1, 1}, {2}};
    GrowthInterval g = growth_estimate(e, 30);
    CHECK(to_double(g.lo) <= std::log(2.0) + 1e-9);
    CHECK(std::log(2.0) <= to_double(g.hi) + 1e-9);
}

TEST_CASE("conjugation invariance") {
    FreeGroupEndo e = endo_of_twist_word("Ta Tb^-1");
    FreeGroupEndo ec = e.conjugate({1});
    FreeGroupEndo ec2 = e.conjugate({2, -1});
    for (unsigned n : {4u, 6u, 8u}) {
        GrowthInterval a = growth_estimate(e, n);
        GrowthInterval b = growth_estimate(ec, n);
        GrowthInterval c = growth_estimate(ec2, n);
        CHECK(a.lo == b.lo);
        CHECK(a.hi == b.hi);
        CHECK(a.lo == c.lo);
        CHECK(a.hi == c.hi);
    }
}

TEST_CASE("monotone envelope toward the dilatation") {
    FreeGroupEndo e = endo_of_twist_word("Ta Tb^-1");
    double d10 = std::abs(to_double(growth_estimate(e, 10).midpoint()) - kLogFig8);
    double d20 = std::abs(to_double(growth_estimate(e, 20).midpoint()) - kLogFig8);
    double d40 = std::abs(to_double(growth_estimate(e, 40).midpoint()) - kLogFig8);
    CHECK(d20 <= d10 + 1e-12);
    CHECK(d40 <= d20 + 1e-12);
    CHECK(d40 < 0.05);
}

TEST_CASE("submultiplicativity of reduced lengths") {
    FreeGroupEndo e = endo_of_twist_word("Ta Tb^-1");
    detail::IterateTable t(e);
    for (unsigned n : {3u, 5u, 8u})
        for (unsigned m : {3u, 5u, 8u})
            for (Letter g : {1, 2}) {
                Int lhs = t.get(n + m, g).len;
                Int maxm = 0;
                for (int i = 1; i <= e.rank; ++i) maxm = std::max(maxm, t.get(m, i).len);
                REQUIRE(lhs <= t.get(n, g).len * maxm);
            }
}

TEST_CASE("growth comparison along inclusions") {
    FreeGroupEndo e = endo_of_twist_word("Ta Tb^-1");
    CHECK(monotonicity_check(e, e, Inclusion::identity(2)));

    FreeGroupEndo amb;
    amb.rank = 3;
    amb.images = {{1, 2, 1}, {2, 1}, {3}};
    CHECK(monotonicity_check(e, amb, Inclusion::extension(2, 1)));

    // trivial interior endomorphism included along the boundary word
    FreeGroupEndo triv = FreeGroupEndo::identity(1);
    Inclusion binc;
    binc.generator_images = {{1, 2, -1, -2}};
    binc.retract = {{}, {}};
    CHECK(monotonicity_check(triv, e, binc));

    Inclusion bad;
    bad.generator_images = {{1}};
    bad.retract = {{1}, {}};
    CHECK_THROWS_AS(monotonicity_check(triv, e, bad), std::invalid_argument);
}
