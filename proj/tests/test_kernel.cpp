#include "monodromy/algebraic.hpp"
#include "monodromy/mclass.hpp"
#include "monodromy/s11.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace monodromy;

TEST_CASE("twist words and matrices") {
    S11Class fig8 = parse_twist_word("Ta Tb^-1");
    CHECK(fig8.m == (Mat2{2, 1, 1, 1}));
    CHECK(fig8.e == 0);
    CHECK(s11_type(fig8.m) == S11Type::PseudoAnosov);

    S11Class tref = parse_twist_word("Ta Tb");
    CHECK(s11_type(tref.m) == S11Type::Periodic);
    CHECK(elliptic_order(tref.m) == 6);

    S11Class ta = parse_twist_word("Ta");
    CHECK(s11_type(ta.m) == S11Type::Reducible);
    ParabolicData pd = parabolic_data(ta.m);
    CHECK(pd.n == 1);

    CHECK_THROWS_AS(parse_twist_word("Tx"), std::invalid_argument);
    CHECK_THROWS_AS(parse_twist_word("Ta^x"), std::invalid_argument);
}

TEST_CASE("dilatation as an exact algebraic number") {
    S11Class fig8 = parse_twist_word("Ta Tb^-1");
    AlgebraicNumber lam = s11_dilatation(fig8.m);
    CHECK(lam.minpoly() == (ZPoly{1, -3, 1}));
    CHECK(lam.to_double() > 2.61);
    CHECK(lam.to_double() < 2.62);

    AlgebraicNumber sq = lam.sqrt();
    CHECK(sq.minpoly() == (ZPoly{-1, -1, 1}));  // golden ratio

    AlgebraicNumber lam2 = lam.pow(2);
    CHECK(lam2 == s11_dilatation(fig8.m * fig8.m));
    CHECK(lam < lam2);

    CHECK(s11_dilatation(fig8.m.pow(2)).nth_root(2) == lam);
    CHECK(s11_dilatation(fig8.m.pow(3)).nth_root(3) == lam);
}

TEST_CASE("rademacher function") {
    CHECK(rademacher(parse_twist_word("Ta Tb").m) == 0);
    CHECK(rademacher(parse_twist_word("Ta").m) == 1);
    CHECK(rademacher(parse_twist_word("Ta Tb^-1").m) == 0);
    Mat2 g{3, 2, 1, 1};
    Mat2 f = parse_twist_word("Ta Tb^-1").m;
    CHECK(rademacher(g * f * g.inverse()) == rademacher(f));
}

TEST_CASE("hyperbolic normal form") {
    Mat2 f = parse_twist_word("Ta Tb^-1").m;
    HyperbolicForm h = hyperbolic_form(f);
    CHECK(h.k == 1);
    CHECK((word_string(h.cycle) == "RL" || word_string(h.cycle) == "LR"));

    HyperbolicForm hc = hyperbolic_form(Mat2{3, 2, 1, 1} * f * (Mat2{3, 2, 1, 1}).inverse());
    CHECK(hc.primitive == h.primitive);

    HyperbolicForm hn = hyperbolic_form(-f);
    CHECK(hn.sign == -1);
    CHECK(hn.primitive == h.primitive);

    HyperbolicForm h2 = hyperbolic_form(f * f);
    CHECK(h2.k == 2);
    CHECK(h2.primitive == h.primitive);

    Mat2 w = parse_twist_word("Ta^3 Tb^-2 Ta Tb^-1").m;
    HyperbolicForm hw = hyperbolic_form(w);
    Mat2 rebuilt = hw.conj * word_matrix(hw.cycle) * hw.conj.inverse();
    if (hw.sign < 0) rebuilt = -rebuilt;
    CHECK(rebuilt == w);
}

TEST_CASE("geometric intersection numbers") {
    CHECK(geometric_intersection(S11Curve::curve_a(), S11Curve::curve_b()) == 1);
    S11Curve tb5 = act_on_curve(parse_twist_word("Ta^5"), S11Curve::curve_b());
    CHECK(geometric_intersection(tb5, S11Curve::curve_b()) == 5);
    CHECK(geometric_intersection(S11Curve::curve_a(), S11Curve::curve_a()) == 0);
}

TEST_CASE("mapping class surfaces and canonical strings") {
    S11Class fig8 = parse_twist_word("Ta Tb^-1");

    MClass sum;
    sum.periodic.push_back(keychain_piece(2));
    sum.torus.push_back({1, false, fig8});
    sum.torus.push_back({1, false, fig8});
    sum.curves.push_back({1, {{0, 0}, 1}, {{1, 0}, 0}, false});
    sum.curves.push_back({1, {{0, 0}, 2}, {{1, 1}, 0}, false});
    sum.validate();
    Surface ss = sum.surface();
    REQUIRE(ss.components.size() == 1);
    CHECK((ss.components[0] == SurfaceComponent{2, 1}));
    CHECK(sum.free_slots().size() == 1);

    // invariance under reordering the torus pieces
    MClass m2;
    m2.periodic = sum.periodic;
    m2.torus.push_back(sum.torus[1]);
    m2.torus.push_back(sum.torus[0]);
    m2.curves.push_back({1, {{0, 0}, 1}, {{1, 1}, 0}, false});
    m2.curves.push_back({1, {{0, 0}, 2}, {{1, 0}, 0}, false});
    CHECK(m2.canonical_string() == sum.canonical_string());

    // the trefoil through two constructions
    MClass a, b;
    a.periodic.push_back(s11_periodic_piece(parse_twist_word("Ta Tb")));
    b.periodic.push_back(torus_knot_piece(2, 3));
    CHECK(a.canonical_string() == b.canonical_string());
}

TEST_CASE("torus knot pieces") {
    for (auto [p, q] : {std::pair<long, long>{2, 3}, {2, 5}, {3, 4}, {2, -3}}) {
        PeriodicPiece tk = torus_knot_piece(p, q);
        MClass mc;
        mc.periodic.push_back(tk);
        mc.validate();
        CHECK(tk.period == p * std::abs(q));
        CHECK(tk.genus == (p - 1) * (std::abs(q) - 1) / 2);
        CHECK(tk.boundaries[0].return_rot == make_rat(1, p * q));
    }
}

TEST_CASE("validate rejects malformed classes") {
    MClass bad;
    bad.torus.push_back({1, false, S11Class::identity()});
    bad.curves.push_back({1, {{1, 0}, 0}, {{1, 0}, 0}, false});
    // a non-flip self-gluing of a single one-holed torus is inconsistent
    CHECK_THROWS_AS(bad.validate(), std::exception);

    MClass dangling;
    dangling.curves.push_back({1, {{0, 0}, 0}, {{0, 1}, 0}, false});
    CHECK_THROWS_AS(dangling.validate(), std::exception);
}
