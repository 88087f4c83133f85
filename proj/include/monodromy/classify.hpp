/**
 * Nielsen-Thurston classification over structured mapping classes.
 */
#pragma once

#include "monodromy/fdtc.hpp"
#include "monodromy/mclass.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace monodromy {

enum class NTType { Periodic, Reducible, PseudoAnosov };

inline std::string nt_type_name(NTType t) {
    switch (t) {
        case NTType::Periodic: return "periodic";
        case NTType::Reducible: return "reducible";
        case NTType::PseudoAnosov: return "pseudo-Anosov";
    }
    return "?";
}

/** True if the canonical reduction system of the class is nonempty. */
inline bool has_reduction(const MClass& mc) {
    if (!mc.curves.empty()) return true;
    for (const auto& t : mc.torus)
        if (s11_type(t.ret.m) == S11Type::Reducible) return true;
    return false;
}

/**
 * Nielsen-Thurston type.  A class with nonempty canonical reduction system is
 * reducible; otherwise it is pseudo-Anosov when some piece is, and periodic
 * when every piece is periodic (trivial pieces such as disks count as
 * periodic and do not obstruct either answer).
 */
inline NTType classify(const MClass& mc) {
    if (has_reduction(mc)) return NTType::Reducible;
    for (const auto& t : mc.torus)
        if (s11_type(t.ret.m) == S11Type::PseudoAnosov) return NTType::PseudoAnosov;
    return NTType::Periodic;
}

/** One entry of the canonical reduction system. */
struct ReductionCurveDescription {
    long count = 1;           // number of curves in the orbit
    std::string description;  // human-readable position
    Rat fdtc_sum = 0;         // two-sided coefficient sum (when defined)
};

/**
 * The canonical reduction system: the stored curve orbits, plus the invariant
 * slope of any torus piece whose return map is parabolic.
 */
inline std::vector<ReductionCurveDescription> canonical_reduction(const MClass& mc) {
    std::vector<ReductionCurveDescription> out;
    for (const auto& c : mc.curves) {
        ReductionCurveDescription d;
        d.count = c.count;
        std::ostringstream os;
        auto name = [&](const CurveSide& s) {
            std::ostringstream ss;
            ss << (s.piece.kind == 0 ? "periodic[" : "torus[") << s.piece.idx << "].b" << s.slot;
            return ss.str();
        };
        os << name(c.a) << " ~ " << name(c.b);
        d.description = os.str();
        d.fdtc_sum = curve_fdtc_sum(mc, c);
        out.push_back(d);
    }
    for (std::size_t i = 0; i < mc.torus.size(); ++i) {
        const auto& t = mc.torus[i];
        if (s11_type(t.ret.m) != S11Type::Reducible) continue;
        ParabolicData p = parabolic_data(t.ret.m);
        ReductionCurveDescription d;
        d.count = t.copies;
        std::ostringstream os;
        os << "slope (" << p.slope.first.str() << ":" << p.slope.second.str() << ") on torus["
           << i << "]";
        d.description = os.str();
        out.push_back(d);
    }
    return out;
}

/** Summary of one piece of the decomposition. */
struct PieceSummary {
    std::string kind;  // "periodic" | "pseudo-Anosov" | "parabolic-torus"
    long components = 1;
    std::string description;
    std::optional<AlgebraicNumber> return_dilatation;  // stretch of the first return
    std::optional<AlgebraicNumber> dilatation;         // per-iterate stretch
};

inline std::vector<PieceSummary> decompose(const MClass& mc) {
    std::vector<PieceSummary> out;
    for (const auto& p : mc.periodic) {
        PieceSummary s;
        s.kind = "periodic";
        s.components = 1;
        std::ostringstream os;
        os << "S_{" << p.genus << "," << p.boundary_circles() << "} period " << p.period;
        if (!p.tag.empty()) os << " [" << p.tag << "]";
        s.description = os.str();
        out.push_back(std::move(s));
    }
    for (const auto& t : mc.torus) {
        PieceSummary s;
        s.components = t.copies;
        std::ostringstream os;
        os << t.copies << " x " << (t.closed ? "T^2" : "S_{1,1}");
        switch (s11_type(t.ret.m)) {
            case S11Type::PseudoAnosov: {
                s.kind = "pseudo-Anosov";
                s.return_dilatation = s11_dilatation(t.ret.m);
                s.dilatation = s.return_dilatation->nth_root(static_cast<unsigned>(t.copies));
                os << ", return " << hyperbolic_form(t.ret.m).sign
                   << word_string(hyperbolic_form(t.ret.m).cycle);
                break;
            }
            case S11Type::Reducible:
                s.kind = "parabolic-torus";
                os << ", parabolic return";
                break;
            case S11Type::Periodic:
                s.kind = "periodic";
                os << ", return of order " << elliptic_order(t.ret.m);
                break;
        }
        s.description = os.str();
        out.push_back(std::move(s));
    }
    return out;
}

/**
 * Largest per-iterate stretch factor over the pseudo-Anosov pieces, or empty
 * when there are none.  A piece whose `copies` components are permuted
 * cyclically stretches by the copies-th root of its return-map dilatation
 * per iterate.
 */
inline std::optional<AlgebraicNumber> max_dilatation(const MClass& mc) {
    std::optional<AlgebraicNumber> best;
    for (const auto& t : mc.torus) {
        if (s11_type(t.ret.m) != S11Type::PseudoAnosov) continue;
        AlgebraicNumber lam = s11_dilatation(t.ret.m).nth_root(static_cast<unsigned>(t.copies));
        if (!best || lam > *best) best = lam;
    }
    return best;
}

}  // namespace monodromy
