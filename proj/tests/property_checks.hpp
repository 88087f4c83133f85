/**
 * Shared generated-case property suites.  Each check runs at least 100
 * generated cases, throws std::runtime_error on the first violation, and
 * returns the number of cases exercised.
 */
#pragma once

#include "monodromy/agol.hpp"
#include "monodromy/fdtc.hpp"
#include "monodromy/mclass.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace monodromy::properties {

inline void fail(const std::string& what) { throw std::runtime_error("property violated: " + what); }

inline S11Class random_word(std::mt19937& rng, int max_len = 6, bool with_boundary = false) {
    S11Class w = S11Class::identity();
    int len = 1 + static_cast<int>(rng() % max_len);
    for (int i = 0; i < len; ++i) {
        long n = static_cast<long>(rng() % 7) - 3;
        switch (rng() % (with_boundary ? 3 : 2)) {
            case 0: w = w.compose(S11Class::twist_a(n)); break;
            case 1: w = w.compose(S11Class::twist_b(n)); break;
            default: w = w.compose(S11Class::boundary_twist(n)); break;
        }
    }
    return w;
}

inline S11Curve random_curve(std::mt19937& rng) {
    // act on a standard curve by a random word: every essential curve arises
    S11Curve c = rng() % 2 ? S11Curve::curve_a() : S11Curve::curve_b();
    return act_on_curve(random_word(rng), c);
}

/** Group laws: associativity, identity, inverses. */
inline int check_group_laws(unsigned seed = 101) {
    std::mt19937 rng(seed);
    int cases = 0;
    for (int i = 0; i < 120; ++i, ++cases) {
        S11Class f = random_word(rng, 5, true);
        S11Class g = random_word(rng, 5, true);
        S11Class h = random_word(rng, 5, true);
        if (!(f.compose(g).compose(h) == f.compose(g.compose(h)))) fail("associativity");
        if (!(f.compose(S11Class::identity()) == f)) fail("right identity");
        if (!(S11Class::identity().compose(f) == f)) fail("left identity");
        S11Class inv{f.m.inverse(), -f.e};
        if (!(f.compose(inv) == S11Class::identity())) fail("inverse");
    }
    return cases;
}

/** Functoriality of the action on curves. */
inline int check_action_functoriality(unsigned seed = 102) {
    std::mt19937 rng(seed);
    int cases = 0;
    for (int i = 0; i < 120; ++i, ++cases) {
        S11Class f = random_word(rng);
        S11Class g = random_word(rng);
        S11Curve c = random_curve(rng);
        S11Curve lhs = act_on_curve(f.compose(g), c);
        S11Curve rhs = act_on_curve(f, act_on_curve(g, c));
        if (!(lhs == rhs)) fail("action functoriality");
        if (!(act_on_curve(S11Class::identity(), c) == c)) fail("identity action");
    }
    return cases;
}

/** Intersection-number symmetry and invariance under the action. */
inline int check_intersection(unsigned seed = 103) {
    std::mt19937 rng(seed);
    int cases = 0;
    for (int i = 0; i < 120; ++i, ++cases) {
        S11Curve c1 = random_curve(rng);
        S11Curve c2 = random_curve(rng);
        Int sym1 = geometric_intersection(c1, c2);
        Int sym2 = geometric_intersection(c2, c1);
        if (sym1 != sym2) fail("intersection symmetry");
        S11Class f = random_word(rng);
        Int inv = geometric_intersection(act_on_curve(f, c1), act_on_curve(f, c2));
        if (inv != sym1) fail("intersection invariance");
    }
    return cases;
}

/** Riemann-Hurwitz: chi(component) = period * chi_orb(quotient). */
inline int check_riemann_hurwitz() {
    std::vector<PeriodicPiece> pieces;
    for (long p = 2; p <= 5; ++p)
        for (long q = -12; q <= 12; ++q) {
            if (q == 0 || std::abs(q) == 1 || detail::gcd_long(p, std::abs(q)) != 1) continue;
            pieces.push_back(torus_knot_piece(p, q));
            pieces.push_back(cable_pattern_piece(p, q));
        }
    for (long n = 2; n <= 12; ++n) pieces.push_back(keychain_piece(n));
    for (const char* w : {"", "Ta Tb", "Ta Tb Ta", "Ta Tb Ta Tb", "Ta Tb^-1 Ta Tb"}) {
        S11Class f = parse_twist_word(w);
        if (s11_type(f.m) == S11Type::Periodic) pieces.push_back(s11_periodic_piece(f));
    }
    int cases = 0;
    for (const PeriodicPiece& p : pieces) {
        MClass m;
        m.periodic.push_back(p);
        m.validate();  // includes the holonomy laws
        Rat chi_top = Rat(2 - 2 * p.genus - p.boundary_circles());
        if (chi_top != Rat(p.period) * p.quotient_euler()) fail("Riemann-Hurwitz");
        ++cases;
    }
    if (cases < 100) fail("Riemann-Hurwitz: not enough generated cases");
    return cases;
}

/** FDTC homogeneity: fdtc(f^n) = n * fdtc(f). */
inline int check_fdtc_homogeneity(unsigned seed = 104) {
    std::mt19937 rng(seed);
    int cases = 0;
    for (int i = 0; i < 120; ++i, ++cases) {
        S11Class f = random_word(rng, 5, true);
        long n = 1 + static_cast<long>(rng() % 6);
        if (fdtc(f.pow(n)) != Rat(n) * fdtc(f)) fail("fdtc homogeneity");
    }
    return cases;
}

/**
 * The defining identity of the splitting cycle: one split per letter carries
 * each measure state to the next, and the full period returns the initial
 * state scaled by lambda^{-1}.  Recomputed here from the public states.
 */
inline int check_agol_identity(unsigned seed = 105) {
    std::mt19937 rng(seed);
    int cases = 0;
    while (cases < 110) {
        S11Class f = random_word(rng, 6);
        if (s11_type(f.m) != S11Type::PseudoAnosov) continue;
        AgolCycle ac = agol_cycle(f.m);
        Int t = word_matrix(ac.cycle).trace();
        std::array<QuadElem, 2> v = ac.states[0];
        for (std::size_t i = 0; i < ac.cycle.size(); ++i) {
            if (ac.cycle[i] == 0)
                v[0] = v[0] - v[1];
            else
                v[1] = v[1] - v[0];
            if (i + 1 < ac.cycle.size() && !(v[0] == ac.states[i + 1][0] && v[1] == ac.states[i + 1][1]))
                fail("splitting step");
        }
        QuadElem inv_lam = QuadElem::of(Rat(t), t) - QuadElem::lambda(t);
        for (int j = 0; j < 2; ++j)
            if (!(v[j] == ac.states[0][j] * inv_lam)) fail("period eigenvalue law");
        for (const auto& st : ac.states)
            for (const auto& c : st)
                if (c.sign(ac.lambda) <= 0) fail("measure positivity");
        ++cases;
    }
    return cases;
}

}  // namespace monodromy::properties
