#include "monodromy/knots.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace monodromy;

TEST_CASE("knot expression parsing") {
    for (const char* s :
         {"unknot", "fig8", "torus(2,3)", "torus(2,-3)", "cable(2,1,fig8)",
          "sum(torus(2,3),mirror(torus(2,3)))", "sum(fig8,fig8,torus(2,5))",
          "mirror(cable(3,2,fig8))", "rev(fig8)"}) {
        KnotExpr k = parse_knot(s);
        CHECK(parse_knot(k.to_string()).to_string() == k.to_string());
    }
    CHECK_THROWS_AS(parse_knot("cable(2,1 fig8)"), ParseError);
    CHECK_THROWS_AS(parse_knot("sum(fig8)"), ParseError);
    CHECK_THROWS_AS(parse_knot("torus(2,)"), ParseError);
    try {
        parse_knot("cable(2,1 fig8)");
    } catch (const ParseError& e) {
        CHECK(e.position > 0);
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}

TEST_CASE("genus agrees with the fiber surface") {
    for (const char* s : {"unknot", "fig8", "torus(2,3)", "torus(3,4)", "torus(2,-5)",
                          "cable(2,1,fig8)", "cable(2,3,fig8)", "sum(fig8,fig8)",
                          "sum(torus(2,3),torus(2,3),fig8)"}) {
        KnotExpr k = parse_knot(s);
        Surface f = knot_monodromy(k).surface();
        REQUIRE(f.components.size() == 1);
        CHECK(f.components[0].boundary == 1);
        CHECK(f.components[0].genus == genus(k));
    }
}

TEST_CASE("Alexander polynomial by two routes") {
    for (const char* s : {"unknot", "fig8", "torus(2,3)", "torus(2,5)", "torus(3,4)",
                          "torus(2,-3)", "cable(2,1,fig8)", "cable(2,3,fig8)",
                          "sum(fig8,fig8)", "sum(torus(2,3),mirror(torus(2,3)))"}) {
        KnotExpr k = parse_knot(s);
        ZPoly a = alexander(k);
        ZPoly b = alexander_via_monodromy(k);
        INFO(s);
        CHECK(a == b);
        Rat at1 = a.eval(Rat(1));
        CHECK((at1 == Rat(1) || at1 == Rat(-1)));
    }
    CHECK(alexander(parse_knot("torus(2,3)")) == ZPoly({1, -1, 1}));
    CHECK(alexander(parse_knot("fig8")) == ZPoly({1, -3, 1}));
    CHECK(alexander(parse_knot("cable(2,1,fig8)")) == ZPoly({1, 0, -3, 0, 1}));
    CHECK(alexander(parse_knot("cable(2,1,fig8)")) ==
          torus_alexander(2, 1) * ZPoly({1, -3, 1}).compose_power(2));
}

TEST_CASE("Alexander divisibility") {
    CHECK(check_divisibility(parse_knot("fig8"), parse_knot("fig8")));
    CHECK(check_divisibility(parse_knot("unknot"), parse_knot("torus(2,3)")));
    CHECK(check_divisibility(parse_knot("fig8"), parse_knot("sum(fig8,torus(2,3))")));
    CHECK_FALSE(check_divisibility(parse_knot("fig8"), parse_knot("cable(2,1,fig8)")));
    CHECK_FALSE(check_divisibility(parse_knot("torus(2,3)"), parse_knot("fig8")));
}

TEST_CASE("monodromy recognition") {
    auto rec = [](const char* s) {
        auto r = recognize_knot(knot_monodromy(parse_knot(s)));
        REQUIRE(r);
        return *r;
    };
    CHECK(rec("fig8") == "fig8");
    CHECK(rec("torus(2,3)") == "torus(2,3)");
    CHECK(rec("torus(2,-3)") == "torus(2,-3)");
    CHECK(rec("cable(2,1,fig8)") == "cable(2,1,fig8)");
    CHECK(rec("unknot") == "unknot");
    CHECK(rec("sum(fig8,torus(2,3))") == "sum(fig8,torus(2,3))");
}

TEST_CASE("predecessors and the ribbon criterion") {
    {
        auto pr = predecessors(parse_knot("torus(2,3)"));
        REQUIRE(pr.size() == 1);
        REQUIRE(pr[0].certificate);
        CHECK(*pr[0].certificate == "torus(2,3)");
    }
    {
        auto pr = predecessors(parse_knot("cable(2,1,fig8)"));
        for (const auto& p : pr)
            CHECK((!p.certificate || *p.certificate != "unknot"));
        CHECK_FALSE(is_homotopy_ribbon(parse_knot("cable(2,1,fig8)")));
    }
    {
        auto pr = predecessors(parse_knot("sum(fig8,fig8)"));
        bool unknot = false;
        for (const auto& p : pr)
            if (p.certificate && *p.certificate == "unknot") unknot = true;
        CHECK(unknot);
        CHECK(is_homotopy_ribbon(parse_knot("sum(fig8,fig8)")));
    }
    CHECK(is_homotopy_ribbon(parse_knot("sum(torus(2,3),mirror(torus(2,3)))")));
    CHECK_FALSE(is_homotopy_ribbon(parse_knot("sum(torus(2,3),torus(2,3))")));
    CHECK(is_homotopy_ribbon(parse_knot("unknot")));
}
