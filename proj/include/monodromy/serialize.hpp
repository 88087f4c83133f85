/**
 * JSON encoding of mapping classes and exact numbers.
 *
 * Rationals are encoded as "num/den" strings and big integers as decimal
 * strings, so round trips are exact.  Algebraic numbers are encoded by their
 * minimal polynomial plus an isolating interval, with an optional float for
 * display only.
 */
#pragma once

#include "monodromy/algebraic.hpp"
#include "monodromy/mclass.hpp"

#include <json.hpp>

#include <string>

namespace monodromy {

using json = nlohmann::ordered_json;

inline std::string rat_to_string(const Rat& r) {
    return rat_num(r).str() + "/" + rat_den(r).str();
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

inline json algebraic_to_json(const AlgebraicNumber& a) {
    json j;
    json coeffs = json::array();
    for (const Int& c : a.minpoly().coeffs()) coeffs.push_back(c.str());
    j["minpoly"] = coeffs;  // low-degree-first
    j["interval"] = {rat_to_string(a.lower()), rat_to_string(a.upper())};
    j["display"] = a.to_double();
    return j;
}

inline json mclass_to_json(const MClass& m) {
    json j;
    json periodic = json::array();
    for (const PeriodicPiece& p : m.periodic) {
        json jp;
        jp["genus"] = p.genus;
        jp["period"] = p.period;
        jp["quotient_genus"] = p.quotient_genus;
        json bs = json::array();
        for (const BoundaryOrbit& b : p.boundaries)
            bs.push_back({{"circles", b.circles},
                          {"return_rot", rat_to_string(b.return_rot)},
                          {"h", b.h}});
        jp["boundaries"] = bs;
        json cs = json::array();
        for (const ConePoint& c : p.cones) cs.push_back({{"order", c.order}, {"h", c.h}});
        jp["cones"] = cs;
        jp["tag"] = p.tag;
        periodic.push_back(jp);
    }
    j["periodic"] = periodic;
    json torus = json::array();
    for (const TorusPiece& t : m.torus) {
        json jt;
        jt["copies"] = t.copies;
        jt["closed"] = t.closed;
        jt["return_matrix"] = {t.ret.m.a.str(), t.ret.m.b.str(), t.ret.m.c.str(),
                               t.ret.m.d.str()};
        jt["return_e"] = t.ret.e;
        torus.push_back(jt);
    }
    j["torus"] = torus;
    json curves = json::array();
    for (const CurveOrbit& c : m.curves) {
        auto side = [](const CurveSide& s) {
            return json{{"kind", s.piece.kind}, {"idx", s.piece.idx}, {"slot", s.slot}};
        };
        curves.push_back(
            {{"count", c.count}, {"a", side(c.a)}, {"b", side(c.b)}, {"flip", c.flip}});
    }
    j["curves"] = curves;
    return j;
}

inline MClass mclass_from_json(const json& j) {
    MClass m;
    for (const json& jp : j.at("periodic")) {
        PeriodicPiece p;
        p.genus = jp.at("genus").get<long>();
        p.period = jp.at("period").get<long>();
        p.quotient_genus = jp.at("quotient_genus").get<long>();
        for (const json& jb : jp.at("boundaries")) {
            BoundaryOrbit b;
            b.circles = jb.at("circles").get<long>();
            b.return_rot = rat_from_string(jb.at("return_rot").get<std::string>());
            b.h = jb.at("h").get<long>();
            p.boundaries.push_back(b);
        }
        for (const json& jc : jp.at("cones"))
            p.cones.push_back({jc.at("order").get<long>(), jc.at("h").get<long>()});
        p.tag = jp.at("tag").get<std::string>();
        m.periodic.push_back(std::move(p));
    }
    for (const json& jt : j.at("torus")) {
        TorusPiece t;
        t.copies = jt.at("copies").get<long>();
        t.closed = jt.at("closed").get<bool>();
        const json& mm = jt.at("return_matrix");
        t.ret.m = {Int(mm.at(0).get<std::string>()), Int(mm.at(1).get<std::string>()),
                   Int(mm.at(2).get<std::string>()), Int(mm.at(3).get<std::string>())};
        t.ret.e = jt.at("return_e").get<long>();
        m.torus.push_back(t);
    }
    for (const json& jc : j.at("curves")) {
        auto side = [](const json& js) {
            CurveSide s;
            s.piece.kind = js.at("kind").get<int>();
            s.piece.idx = js.at("idx").get<int>();
            s.slot = js.at("slot").get<int>();
            return s;
        };
        CurveOrbit c;
        c.count = jc.at("count").get<long>();
        c.a = side(jc.at("a"));
        c.b = side(jc.at("b"));
        c.flip = jc.at("flip").get<bool>();
        m.curves.push_back(c);
    }
    m.validate();
    return m;
}

}  // namespace monodromy
