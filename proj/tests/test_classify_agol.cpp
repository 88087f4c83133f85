#include "monodromy/agol.hpp"
#include "monodromy/classify.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace monodromy;

TEST_CASE("classification of structured classes") {
    S11Class fig8 = parse_twist_word("Ta Tb^-1");

    for (auto [p, q] : {std::pair<long, long>{2, 3}, {2, 5}, {3, 4}}) {
        MClass mc;
        mc.periodic.push_back(torus_knot_piece(p, q));
        CHECK(classify(mc) == NTType::Periodic);
        CHECK_FALSE(max_dilatation(mc));
    }

    MClass cab;
    cab.periodic.push_back(cable_pattern_piece(2, 1));
    cab.torus.push_back({2, false, fig8});
    cab.curves.push_back({2, {{0, 0}, 1}, {{1, 0}, 0}, false});
    cab.validate();
    CHECK(classify(cab) == NTType::Reducible);
    Surface s = cab.surface();
    REQUIRE(s.components.size() == 1);
    CHECK((s.components[0] == SurfaceComponent{2, 1}));

    // the two permuted tori stretch by the square root of the return
    // dilatation, which is the golden ratio
    auto lam = max_dilatation(cab);
    REQUIRE(lam);
    AlgebraicNumber golden(ZPoly({-1, -1, 1}), Rat(1), Rat(2));
    CHECK(*lam == golden);

    MClass phi2;
    phi2.periodic.push_back(disk_piece());
    phi2.torus.push_back({2, true, {fig8.m, 0}});
    phi2.validate();
    CHECK(classify(phi2) == NTType::PseudoAnosov);

    CHECK(classify(s11_mclass(fig8)) == NTType::PseudoAnosov);
    CHECK(classify(s11_mclass(S11Class::identity())) == NTType::Periodic);
    CHECK(classify(s11_mclass(parse_twist_word("Ta"))) == NTType::Reducible);
}

TEST_CASE("agol cycles") {
    S11Class fig8 = parse_twist_word("Ta Tb^-1");
    AgolCycle ac = agol_cycle(fig8.m);
    CHECK(word_string(ac.cycle) == "RL");
    CHECK(ac.k == 1);
    // the construction self-verifies the period law; these must not throw
    CHECK_NOTHROW(agol_cycle(fig8.m.pow(3)));
    CHECK_NOTHROW(agol_cycle(-fig8.m));
    CHECK_NOTHROW(agol_cycle(parse_twist_word("Ta^3 Tb^-2 Ta Tb^-1").m));
}

TEST_CASE("word decomposition and exponent sums") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        S11Class w = S11Class::identity();
        long e = 0;
        int len = 1 + static_cast<int>(rng() % 6);
        for (int i = 0; i < len; ++i) {
            long n = static_cast<long>(rng() % 7) - 3;
            if (rng() % 2)
                w = w.compose(S11Class::twist_a(n));
            else
                w = w.compose(S11Class::twist_b(n));
            e += n;
        }
        REQUIRE(w.e == e);
        WordDecomp d = word_decomp(w.m);
        REQUIRE(word_decomp_matrix(d) == w.m);
        REQUIRE(detail::mod_positive(e, 12) == esum_mod12(w.m));
    }
}

TEST_CASE("square roots and orientation-reversing roots") {
    S11Class fig8 = parse_twist_word("Ta Tb^-1");
    CHECK(square_roots(fig8).empty());
    S11Class f2 = fig8.pow(2);
    auto roots = square_roots(f2);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].m == fig8.m);
    CHECK(roots[0].e == 0);
    auto wr = square_root_by_word(f2.m);
    REQUIRE(wr);
    CHECK(*wr * *wr == f2.m);

    auto orr = orientation_reversing_root(fig8.m);
    REQUIRE(orr);
    CHECK((*orr == Mat2{1, 1, 1, 0}));
    auto orw = orientation_reversing_root_by_word(fig8.m);
    REQUIRE(orw);
    CHECK(*orw * *orw == fig8.m);
    CHECK(orw->det() == -1);

    // no determinant -1 involution commutes with fig8 (bounded brute force)
    for (long a = -12; a <= 12; ++a)
        for (long b = -12; b <= 12; ++b)
            for (long c = -12; c <= 12; ++c) {
                Mat2 j{a, b, c, -a};
                if (j.det() != -1) continue;
                REQUIRE(!(j * fig8.m == fig8.m * j));
            }
}

TEST_CASE("conjugators and centralizers") {
    S11Class fig8 = parse_twist_word("Ta Tb^-1");
    Mat2 h{3, 2, 1, 1};
    Mat2 g = h * fig8.m * h.inverse();
    auto cj = pa_conjugator(fig8.m, g);
    REQUIRE(cj);
    CHECK_FALSE(cj->orientation_reversing);
    CHECK(cj->h * fig8.m * cj->h.inverse() == g);

    Mat2 grev = Mat2::swap() * fig8.m * Mat2::swap();
    auto cj2 = pa_conjugator(fig8.m, grev, true);
    REQUIRE(cj2);
    CHECK(cj2->h * fig8.m * cj2->h.inverse() == grev);

    Mat2 chir = word_matrix({0, 0, 1});  // R^2 L, genuinely chiral
    Mat2 chir_m = Mat2::swap() * chir * Mat2::swap();
    CHECK_FALSE(pa_conjugator(chir, chir_m, false));
    auto cj4 = pa_conjugator(chir, chir_m, true);
    REQUIRE(cj4);
    CHECK(cj4->orientation_reversing);
    CHECK(cj4->h * chir * cj4->h.inverse() == chir_m);
    CHECK(cj4->h.det() == -1);

    for (const Mat2& z : pa_centralizer_generators(fig8.m))
        CHECK(z * fig8.m == fig8.m * z);
    CHECK(pa_centralizer_generators(fig8.m.pow(5))[0] == fig8.m);
}
