#include "monodromy/compression.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace monodromy;

namespace {

MClass sum_of_two(const MClass& child1, const MClass& child2) {
    // children must each be a single open piece occupying index 0
    MClass m;
    m.periodic.push_back(keychain_piece(2));
    int pi = 1;
    int ti = 0;
    auto attach = [&](const MClass& ch, int keychain_slot) {
        CurveSide side;
        if (!ch.periodic.empty()) {
            m.periodic.push_back(ch.periodic[0]);
            side = {{0, pi++}, 0};
        } else {
            m.torus.push_back(ch.torus[0]);
            side = {{1, ti++}, 0};
        }
        m.curves.push_back({1, {{0, 0}, keychain_slot}, side, false});
    };
    attach(child1, 1);
    attach(child2, 2);
    m.validate();
    return m;
}

}  // namespace

TEST_CASE("extending over invariant slopes") {
    S11Class fig8 = parse_twist_word("Ta Tb^-1");
    S11Curve a;
    a.slopes.emplace_back(std::make_pair(Int(1), Int(0)), 1);
    CHECK(extends_over(S11Class::identity(), a));
    CHECK(extends_over(S11Class::twist_a(3), a));
    CHECK_FALSE(extends_over(S11Class::twist_b(1), a));
    CHECK_FALSE(extends_over(fig8, a));
    CHECK(invariant_slopes(fig8.m).empty());
    auto sl = invariant_slopes(Mat2::R(2));
    REQUIRE(sl.size() == 1);
    CHECK(sl[0] == std::make_pair(Int(1), Int(0)));
}

TEST_CASE("genus-one monodromies compress only along the boundary") {
    S11Class fig8 = parse_twist_word("Ta Tb^-1");
    auto cls = all_compressed_classes(s11_mclass(fig8));
    CHECK(cls.size() == 2);
    auto comps = minimal_compressions(s11_mclass(fig8));
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].form == "1.1");
    Surface s = comps[0].interior.surface();
    CHECK(s.components.size() == 2);  // closed torus + disk
    CHECK_FALSE(is_trivial_class(comps[0].interior));

    MClass tre;
    tre.periodic.push_back(torus_knot_piece(2, 3));
    auto tcls = all_compressed_classes(tre);
    CHECK(tcls.size() == 2);
    for (const auto& c : tcls) CHECK_FALSE(is_trivial_class(c));
    MClass tre2 = s11_mclass(parse_twist_word("Ta Tb"));
    CHECK(all_compressed_classes(tre2).size() == 2);
    CHECK(normalized(tre2).canonical_string() == normalized(tre).canonical_string());
}

TEST_CASE("the cable chain") {
    S11Class fig8 = parse_twist_word("Ta Tb^-1");
    MClass cab;
    cab.periodic.push_back(cable_pattern_piece(2, 1));
    cab.torus.push_back({2, false, fig8});
    cab.curves.push_back({2, {{0, 0}, 1}, {{1, 0}, 0}, false});
    cab.validate();

    auto comps = minimal_compressions(cab);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].form == "1.1");
    const MClass& phi1 = comps[0].interior;
    Surface s1 = phi1.surface();
    REQUIRE(s1.components.size() == 2);
    CHECK((s1.components[0] == SurfaceComponent{0, 1}));
    CHECK((s1.components[1] == SurfaceComponent{2, 0}));
    REQUIRE(phi1.curves.size() == 1);
    CHECK(phi1.curves[0].flip);
    CHECK(curve_fdtc_sum(phi1, phi1.curves[0]) == Rat(-4));

    auto comps1 = minimal_compressions(phi1);
    REQUIRE(comps1.size() == 1);  // the fold is blocked: coefficient sum is nonzero
    CHECK(comps1[0].form == "1.1");
    const MClass& phi2 = comps1[0].interior;
    CHECK(classify(phi2) == NTType::PseudoAnosov);
    CHECK(minimal_compressions(phi2).empty());

    auto cls = all_compressed_classes(cab);
    CHECK(cls.size() == 3);
    for (const auto& c : cls) CHECK_FALSE(is_trivial_class(c));
}

TEST_CASE("torus-orbit fold") {
    S11Class fig8 = parse_twist_word("Ta Tb^-1");
    MClass fold;
    fold.torus.push_back({2, false, fig8});
    fold.curves.push_back({1, {{1, 0}, 0}, {{1, 0}, 0}, true});
    fold.validate();
    bool saw_fold = false;
    for (const auto& c : minimal_compressions(fold)) {
        if (c.form == "2.1.2") {
            saw_fold = true;
            CHECK(c.interior.empty());
        }
    }
    CHECK(saw_fold);
}

TEST_CASE("connected sums and ribbon closures") {
    S11Class fig8 = parse_twist_word("Ta Tb^-1");
    {
        MClass sum = sum_of_two(s11_mclass(fig8), s11_mclass(fig8));
        auto cls = all_compressed_classes(sum);
        CHECK(cls.size() <= 8);
        bool trivial = false;
        for (const auto& c : cls) trivial = trivial || is_trivial_class(c);
        CHECK(trivial);
    }
    {
        MClass t1, t2;
        t1.periodic.push_back(torus_knot_piece(2, 3));
        t2.periodic.push_back(torus_knot_piece(2, -3));
        MClass sum = sum_of_two(t1, t2);
        auto cls = all_compressed_classes(sum);
        CHECK(cls.size() <= 8);
        bool trivial = false, saw_fold = false;
        for (const auto& c : cls) trivial = trivial || is_trivial_class(c);
        CHECK(trivial);
        for (const auto& c0 : minimal_compressions(sum))
            for (const auto& c1 : minimal_compressions(c0.interior))
                if (c1.form == "2.1.1") saw_fold = true;
        CHECK(saw_fold);
    }
    {
        MClass t1, t2;
        t1.periodic.push_back(torus_knot_piece(2, 3));
        t2.periodic.push_back(torus_knot_piece(2, 3));
        MClass sum = sum_of_two(t1, t2);
        auto cls = all_compressed_classes(sum);
        CHECK(cls.size() <= 8);
        for (const auto& c : cls) CHECK_FALSE(is_trivial_class(c));
    }
}

TEST_CASE("separating quotient curves split keychains") {
    S11Class fig8 = parse_twist_word("Ta Tb^-1");
    MClass sum3;
    sum3.periodic.push_back(keychain_piece(3));
    sum3.periodic.push_back(torus_knot_piece(2, 3));
    sum3.periodic.push_back(torus_knot_piece(2, 3));
    sum3.torus.push_back({1, false, fig8});
    sum3.curves.push_back({1, {{0, 0}, 1}, {{0, 1}, 0}, false});
    sum3.curves.push_back({1, {{0, 0}, 2}, {{0, 2}, 0}, false});
    sum3.curves.push_back({1, {{0, 0}, 3}, {{1, 0}, 0}, false});
    sum3.validate();
    bool saw_split = false;
    for (const auto& c : minimal_compressions(sum3))
        if (c.form == "1.2") {
            saw_split = true;
            CHECK(c.interior.component_count() == 2);
        }
    CHECK(saw_split);

    MClass idt = s11_mclass(S11Class::identity());
    bool saw = false;
    for (const auto& c : minimal_compressions(idt))
        if (c.form == "1.2") {
            saw = true;
            CHECK(is_trivial_class(c.interior));
        }
    CHECK(saw);
}
