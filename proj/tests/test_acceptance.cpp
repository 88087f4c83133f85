/**
 * Acceptance gate: one pass/fail line per criterion, nonzero exit if any
 * criterion fails.
 */
#include "monodromy/growth.hpp"
#include "monodromy/knots.hpp"
#include "property_checks.hpp"

#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

using namespace monodromy;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, const std::function<void()>& body) {
    try {
        body();
        std::cout << "PASS  criterion " << number << ": " << title << "\n";
    } catch (const std::exception& e) {
        ++failures;
        std::cout << "FAIL  criterion " << number << ": " << title << " -- " << e.what() << "\n";
    }
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

const std::vector<std::string> kCorpus = {
    "torus(2,3)", "torus(2,5)",  "torus(3,4)",      "torus(2,-3)", "torus(2,7)",
    "torus(3,5)", "fig8",        "cable(2,1,fig8)", "sum(fig8,fig8)",
    "sum(torus(2,3),mirror(torus(2,3)))"};

Rat euler(const MClass& m) {
    Rat chi = 0;
    for (const SurfaceComponent& c : m.surface().components)
        chi += Rat(2 - 2 * c.genus - c.boundary);
    return chi;
}

void worked_example_chain() {
    KnotExpr k = parse_knot("cable(2,1,fig8)");
    MClass cab = knot_monodromy(k);

    require(side_fdtc(cab, {{0, 0}, 0}) == Rat(1, 2), "outer cable boundary coefficient");
    require(side_fdtc(cab, {{1, 0}, 0}) == Rat(0), "genus-one boundary coefficient");

    auto comps = minimal_compressions(cab);
    require(comps.size() == 1 && comps[0].form == "1.1", "unique first compression");
    const MClass& phi1 = comps[0].interior;
    require(phi1.curves.size() == 1, "intermediate class keeps one curve orbit");
    require(curve_fdtc_sum(phi1, phi1.curves[0]) == Rat(-4),
            "intermediate two-sided coefficient sum");

    auto comps1 = minimal_compressions(phi1);
    require(comps1.size() == 1 && comps1[0].form == "1.1", "unique second compression");
    const MClass& phi2 = comps1[0].interior;
    Surface s2 = phi2.surface().sorted();
    require(s2.components.size() == 3, "terminal class has three components");
    require((s2.components[0] == SurfaceComponent{0, 1}), "terminal disk");
    require((s2.components[1] == SurfaceComponent{1, 0}), "terminal torus");
    require((s2.components[2] == SurfaceComponent{1, 0}), "terminal torus");
    require(minimal_compressions(phi2).empty(), "terminal class admits no compression");

    require(!is_homotopy_ribbon(k), "cable is not strongly homotopy-ribbon");
}

void torus_knot_models() {
    for (auto [p, q] : {std::pair<long, long>{2, 3}, {2, 5}, {3, 4}}) {
        std::ostringstream os;
        os << "torus(" << p << "," << q << ")";
        KnotExpr k = parse_knot(os.str());
        MClass m = knot_monodromy(k);
        require(classify(m) == NTType::Periodic, "periodic type");
        require(m.periodic.size() == 1 && m.periodic[0].period == p * q, "period p*q");
        require(genus(k) == (p - 1) * (q - 1) / 2, "genus formula");
        require(m.surface().components[0].genus == genus(k), "fiber genus");
        require(side_fdtc(m, {{0, 0}, 0}) == make_rat(1, p * q), "root boundary coefficient");

        // (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)), assembled independently
        auto cyc = [](long n) {
            std::vector<Int> c(static_cast<std::size_t>(n) + 1, Int(0));
            c[0] = -1;
            c.back() = 1;
            return ZPoly(std::move(c));
        };
        ZPoly formula = (cyc(p * q) * cyc(1)).divide_exact(cyc(p) * cyc(q));
        require(alexander(k) == formula, "Alexander closed form");
        require(alexander_via_monodromy(k) == formula, "Alexander homological route");
    }
}

void dilatation_and_growth() {
    MClass m = knot_monodromy(parse_knot("fig8"));
    auto lam = max_dilatation(m);
    require(static_cast<bool>(lam), "figure-eight class is pseudo-Anosov");
    require(lam->minpoly() == (ZPoly{1, -3, 1}), "minimal polynomial");
    require(lam->compare(AlgebraicNumber::rational(Rat(261, 100))) > 0, "root above 2.61");
    require(lam->compare(AlgebraicNumber::rational(Rat(262, 100))) < 0, "root below 2.62");

    GrowthInterval g = growth_estimate(endo_of_twist_word("Ta Tb^-1"), 40);
    double target = std::log(lam->to_double());
    double lo = g.lo.convert_to<double>(), hi = g.hi.convert_to<double>();
    require(lo - 0.05 <= target && target <= hi + 0.05, "growth interval near log dilatation");
    require(std::abs((lo + hi) / 2 - target) < 0.05, "growth midpoint within 0.05");
}

void monotonicity_suite() {
    int checked = 0;
    for (const std::string& s : kCorpus) {
        MClass m = knot_monodromy(parse_knot(s));
        for (const MClass& cls : all_compressed_classes(m)) {
            auto lam_out = max_dilatation(cls);
            for (const Compression& c : minimal_compressions(cls)) {
                auto lam_in = max_dilatation(c.interior);
                if (lam_in) {
                    require(static_cast<bool>(lam_out), "interior stretch without exterior");
                    require(*lam_in <= *lam_out, "dilatation monotonicity");
                }
                require(Rat(1) - euler(c.interior) < Rat(1) - euler(cls),
                        "complexity strictly drops");
                ++checked;
            }
        }
    }
    require(checked > 0, "no compressions enumerated");
}

void termination_suite() {
    for (const std::string& s : kCorpus) {
        MClass m = knot_monodromy(parse_knot(s));
        auto closure = all_compressed_classes(m);
        require(closure.size() <= 8, "closure size bound for " + s);
        std::set<std::string> keys;
        for (const MClass& cls : closure) keys.insert(normalized(cls).canonical_string());
        for (const MClass& cls : closure)
            for (const Compression& c : minimal_compressions(cls))
                require(keys.count(normalized(c.interior).canonical_string()) > 0,
                        "closure not closed under compression for " + s);
    }
}

void ribbon_suite() {
    for (const char* s : {"sum(fig8,fig8)", "sum(torus(2,3),mirror(torus(2,3)))"}) {
        KnotExpr k = parse_knot(s);
        require(is_homotopy_ribbon(k), std::string(s) + " should be ribbon");
        bool fold = false;
        for (const MClass& cls : all_compressed_classes(knot_monodromy(k)))
            for (const Compression& c : minimal_compressions(cls))
                if (c.form == "2.1.1") fold = true;
        require(fold, std::string(s) + " ribbon verdict should use a form-2.1.1 fold");
    }
    require(!is_homotopy_ribbon(parse_knot("sum(torus(2,3),torus(2,3))")),
            "granny-type sum is not ribbon");

    for (const std::string& s : kCorpus) {
        KnotExpr k = parse_knot(s);
        for (const Predecessor& p : predecessors(k))
            if (p.certificate)
                require(check_divisibility(parse_knot(*p.certificate), k),
                        "Alexander divisibility for predecessor " + *p.certificate + " of " + s);
    }
}

void property_suites() {
    require(properties::check_group_laws() >= 100, "group laws");
    require(properties::check_action_functoriality() >= 100, "action functoriality");
    require(properties::check_intersection() >= 100, "intersection symmetry/invariance");
    require(properties::check_riemann_hurwitz() >= 100, "Riemann-Hurwitz");
    require(properties::check_fdtc_homogeneity() >= 100, "coefficient homogeneity");
    require(properties::check_agol_identity() >= 100, "splitting-cycle identity");
}

}  // namespace

int main() {
    criterion(1, "worked-example chain end-to-end", worked_example_chain);
    criterion(2, "torus-knot monodromy models", torus_knot_models);
    criterion(3, "exact dilatation with growth cross-check", dilatation_and_growth);
    criterion(4, "dilatation monotonicity and complexity drop", monotonicity_suite);
    criterion(5, "finiteness and closure of enumeration", termination_suite);
    criterion(6, "ribbon verdicts and Alexander divisibility", ribbon_suite);
    criterion(7, "generated property suites", property_suites);
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
