/**
 * Command-line front end.
 *
 * Subcommands: classify | dilatation | compressions | predecessors |
 * ribbon-check | growth.  Input is either a knot expression (--knot) or a
 * surface with a twist word (--surface "S{(1,1)}" --map "Ta Tb^-1").
 *
 * Exit codes: 0 success, 2 parse error, 3 enumeration budget exhausted
 * (partial output carries "completeness": "bounded").
 */
#include "monodromy/classify.hpp"
#include "monodromy/fdtc.hpp"
#include "monodromy/growth.hpp"
#include "monodromy/knots.hpp"
#include "monodromy/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace monodromy;

struct Options {
    std::string knot;
    std::string surface;
    std::string map_word;
    bool have_map = false;
    long length_bound = 32;
    unsigned iterations = 40;
    std::string json_path;
};

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--knot", opt.knot, "knot expression, e.g. cable(2,1,fig8)");
    cmd->add_option("--surface", opt.surface, "surface, only S{(1,1)} is supported");
    cmd->add_option("--map", opt.map_word, "twist word in Ta, Tb, Td, e.g. \"Ta Tb^-1\"");
    cmd->add_option("--length-bound", opt.length_bound, "enumeration budget")
        ->default_val(32);
    cmd->add_option("--iterations", opt.iterations, "growth-estimate iterations")
        ->default_val(40);
    cmd->add_option("--json", opt.json_path, "write the JSON report to this path");
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/** Resolve the input mapping class from exactly one of the two input forms. */
MClass input_class(const Options& opt) {
    bool knot = !opt.knot.empty();
    bool surf = !opt.surface.empty();
    if (knot == surf)
        throw UsageError("exactly one of --knot or --surface/--map is required");
    if (knot) return knot_monodromy(parse_knot(opt.knot));
    if (opt.surface != "S{(1,1)}")
        throw UsageError("unsupported surface '" + opt.surface + "': only S{(1,1)}");
    return s11_mclass(parse_twist_word(opt.map_word));
}

/** Period of a periodic class: least common multiple over the pieces. */
long class_period(const MClass& m) {
    long p = 1;
    for (const auto& pc : m.periodic) p = std::lcm(p, pc.period);
    for (const auto& t : m.torus) p = std::lcm(p, t.copies * elliptic_order(t.ret.m));
    return p;
}

json base_report(const std::string& command, const Options& opt) {
    json j;
    j["schema"] = 1;
    j["command"] = command;
    if (!opt.knot.empty())
        j["input"] = {{"knot", opt.knot}};
    else
        j["input"] = {{"surface", opt.surface}, {"map", opt.map_word}};
    return j;
}

json run_classify(const Options& opt) {
    MClass m = input_class(opt);
    json j = base_report("classify", opt);
    NTType t = classify(m);
    j["type"] = nt_type_name(t);
    if (t == NTType::Periodic) j["period"] = class_period(m);
    if (auto d = max_dilatation(m)) j["dilatation"] = algebraic_to_json(*d);
    if (t == NTType::Reducible) {
        json red = json::array();
        for (const auto& r : canonical_reduction(m))
            red.push_back({{"count", r.count},
                           {"description", r.description},
                           {"fdtc_sum", rat_to_string(r.fdtc_sum)}});
        j["reduction"] = red;
    }
    json pieces = json::array();
    for (const auto& p : decompose(m)) {
        json jp;
        jp["kind"] = p.kind;
        jp["components"] = p.components;
        jp["description"] = p.description;
        if (p.dilatation) jp["dilatation"] = algebraic_to_json(*p.dilatation);
        pieces.push_back(jp);
    }
    j["pieces"] = pieces;
    json fdtcs = json::array();
    Surface s = m.surface();
    for (const CurveSide& side : m.free_slots())
        fdtcs.push_back({{"kind", side.piece.kind},
                         {"piece", side.piece.idx},
                         {"slot", side.slot},
                         {"fdtc", rat_to_string(side_fdtc(m, side))}});
    j["boundary_fdtc"] = fdtcs;
    j["genus"] = s.components.empty() ? 0 : s.components[0].genus;
    j["class"] = mclass_to_json(m);
    return j;
}

json run_dilatation(const Options& opt) {
    MClass m = input_class(opt);
    json j = base_report("dilatation", opt);
    if (auto d = max_dilatation(m))
        j["dilatation"] = algebraic_to_json(*d);
    else
        j["dilatation"] = nullptr;
    return j;
}

json run_compressions(const Options& opt, int& exit_code) {
    MClass m = input_class(opt);
    json j = base_report("compressions", opt);
    json comps = json::array();
    for (const auto& c : minimal_compressions(m)) {
        json jc;
        jc["form"] = c.form;
        jc["description"] = c.description;
        jc["interior"] = mclass_to_json(normalized(c.interior));
        comps.push_back(jc);
    }
    j["minimal_compressions"] = comps;
    try {
        auto closure = all_compressed_classes(m, static_cast<std::size_t>(opt.length_bound));
        j["closure_size"] = closure.size();
        j["completeness"] = "complete";
    } catch (const std::runtime_error&) {
        j["completeness"] = "bounded";
        exit_code = 3;
    }
    return j;
}

json run_predecessors(const Options& opt, int& exit_code) {
    json j = base_report("predecessors", opt);
    if (opt.knot.empty()) throw UsageError("predecessors requires --knot");
    KnotExpr k = parse_knot(opt.knot);
    try {
        json preds = json::array();
        for (const auto& p : predecessors(k, static_cast<std::size_t>(opt.length_bound))) {
            json jp;
            jp["class"] = mclass_to_json(p.cls);
            if (p.certificate)
                jp["knot"] = *p.certificate;
            else
                jp["knot"] = nullptr;
            preds.push_back(jp);
        }
        j["predecessors"] = preds;
        j["completeness"] = "complete";
    } catch (const std::runtime_error&) {
        j["completeness"] = "bounded";
        exit_code = 3;
    }
    return j;
}

json run_ribbon_check(const Options& opt, int& exit_code) {
    json j = base_report("ribbon-check", opt);
    if (opt.knot.empty()) throw UsageError("ribbon-check requires --knot");
    KnotExpr k = parse_knot(opt.knot);
    try {
        auto closure = all_compressed_classes(knot_monodromy(k),
                                              static_cast<std::size_t>(opt.length_bound));
        bool ribbon = false;
        std::set<std::string> forms;
        for (const auto& c : closure) {
            ribbon = ribbon || is_trivial_class(c);
            for (const auto& mc : minimal_compressions(c)) forms.insert(mc.form);
        }
        j["strongly_homotopy_ribbon"] = ribbon;
        j["closure_size"] = closure.size();
        j["forms_seen"] = forms;
        j["completeness"] = "complete";
    } catch (const std::runtime_error&) {
        j["completeness"] = "bounded";
        exit_code = 3;
    }
    return j;
}

json run_growth(const Options& opt) {
    json j = base_report("growth", opt);
    FreeGroupEndo e;
    if (!opt.surface.empty() || opt.have_map) {
        e = endo_of_twist_word(opt.map_word);
    } else if (!opt.knot.empty()) {
        MClass m = knot_monodromy(parse_knot(opt.knot));
        if (m.torus.size() != 1 || m.torus[0].copies != 1 || m.torus[0].closed ||
            !m.periodic.empty() || !m.curves.empty())
            throw UsageError("growth --knot requires a genus-one fibered knot");
        WordDecomp d = word_decomp(m.torus[0].ret.m);
        std::string word;
        if (d.negated) word = "Ta Tb Ta Tb Ta Tb ";  // (Ta Tb)^3 realizes -I
        for (auto [c, n] : d.factors)
            word += (c == 'R' ? "Ta^" + std::to_string(n) : "Tb^" + std::to_string(-n)) + " ";
        e = endo_of_twist_word(word);
    } else {
        throw UsageError("growth requires --knot or --map");
    }
    GrowthInterval g = growth_estimate(e, opt.iterations);
    j["iterations"] = opt.iterations;
    j["interval"] = {rat_to_string(g.lo), rat_to_string(g.hi)};
    j["midpoint_display"] = g.midpoint().convert_to<double>();
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"structured mapping classes of fibered knots"};
    app.require_subcommand(1);
    Options opt;
    std::string command;
    std::vector<CLI::App*> subs;
    for (const char* name : {"classify", "dilatation", "compressions", "predecessors",
                             "ribbon-check", "growth"}) {
        CLI::App* sub = app.add_subcommand(name);
        add_common(sub, opt);
        sub->callback([&command, name] { command = name; });
        subs.push_back(sub);
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    for (CLI::App* sub : subs)
        if (sub->parsed()) opt.have_map = sub->count("--map") > 0;

    int exit_code = 0;
    monodromy::json report;
    try {
        if (command == "classify") report = run_classify(opt);
        else if (command == "dilatation") report = run_dilatation(opt);
        else if (command == "compressions") report = run_compressions(opt, exit_code);
        else if (command == "predecessors") report = run_predecessors(opt, exit_code);
        else if (command == "ribbon-check") report = run_ribbon_check(opt, exit_code);
        else if (command == "growth") report = run_growth(opt);
    } catch (const monodromy::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    std::string text = report.dump(2) + "\n";
    if (!opt.json_path.empty()) {
        std::ofstream out(opt.json_path);
        out << text;
    }
    std::cout << text;
    return exit_code;
}
