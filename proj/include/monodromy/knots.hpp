/**
 * Knot-expression layer: fibered knots built from torus knots, cables,
 * connected sums and mirrors; their monodromies as structured mapping
 * classes; genus and Alexander-polynomial bookkeeping (computed two ways);
 * and ribbon-predecessor queries through the compression machinery.
 */
#pragma once

#include "monodromy/compression.hpp"
#include "monodromy/poly.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace monodromy {

// ---------------------------------------------------------------------------
// Expressions
// ---------------------------------------------------------------------------

struct KnotExpr {
    enum Kind { Unknot, Fig8, Torus, Cable, Sum, Mirror, Reverse } kind = Unknot;
    long p = 0, q = 0;  // torus / cable parameters
    std::vector<KnotExpr> children;

    static KnotExpr unknot() { return {}; }
    static KnotExpr fig8() {
        KnotExpr k;
        k.kind = Fig8;
        return k;
    }
    static KnotExpr torus(long p, long q) {
        KnotExpr k;
        k.kind = Torus;
        k.p = p;
        k.q = q;
        return k;
    }
    static KnotExpr cable(long p, long q, KnotExpr companion) {
        KnotExpr k;
        k.kind = Cable;
        k.p = p;
        k.q = q;
        k.children.push_back(std::move(companion));
        return k;
    }
    static KnotExpr sum(std::vector<KnotExpr> parts) {
        KnotExpr k;
        k.kind = Sum;
        k.children = std::move(parts);
        return k;
    }
    static KnotExpr mirror(KnotExpr inner) {
        KnotExpr k;
        k.kind = Mirror;
        k.children.push_back(std::move(inner));
        return k;
    }

    std::string to_string() const {
        switch (kind) {
            case Unknot: return "unknot";
            case Fig8: return "fig8";
            case Torus:
                return "torus(" + std::to_string(p) + "," + std::to_string(q) + ")";
            case Cable:
                return "cable(" + std::to_string(p) + "," + std::to_string(q) + "," +
                       children[0].to_string() + ")";
            case Sum: {
                std::string s = "sum(";
                for (std::size_t i = 0; i < children.size(); ++i)
                    s += (i ? "," : "") + children[i].to_string();
                return s + ")";
            }
            case Mirror: return "mirror(" + children[0].to_string() + ")";
            case Reverse: return "rev(" + children[0].to_string() + ")";
        }
        return "?";
    }
};

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
};

namespace detail {

struct KnotParser {
    const std::string& s;
    std::size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", i);
    }
    long integer() {
        skip();
        std::size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            throw ParseError("expected integer", start);
        return std::stol(s.substr(start, i - start));
    }
    std::string ident() {
        skip();
        std::size_t start = i;
        while (i < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
            ++i;
        if (i == start) throw ParseError("expected name", start);
        return s.substr(start, i - start);
    }
    KnotExpr expr() {
        std::size_t start = i;
        std::string name = ident();
        if (name == "unknot") return KnotExpr::unknot();
        if (name == "fig8") return KnotExpr::fig8();
        if (name == "torus") {
            expect('(');
            long p = integer();
            expect(',');
            long q = integer();
            expect(')');
            return KnotExpr::torus(p, q);
        }
        if (name == "cable") {
            expect('(');
            long p = integer();
            expect(',');
            long q = integer();
            expect(',');
            KnotExpr c = expr();
            expect(')');
            return KnotExpr::cable(p, q, std::move(c));
        }
        if (name == "sum") {
            expect('(');
            std::vector<KnotExpr> parts{expr()};
            while (eat(',')) parts.push_back(expr());
            expect(')');
            if (parts.size() < 2) throw ParseError("sum needs at least two summands", start);
            return KnotExpr::sum(std::move(parts));
        }
        if (name == "mirror" || name == "rev") {
            expect('(');
            KnotExpr c = expr();
            expect(')');
            KnotExpr k;
            k.kind = name == "mirror" ? KnotExpr::Mirror : KnotExpr::Reverse;
            k.children.push_back(std::move(c));
            return k;
        }
        throw ParseError("unknown constructor '" + name + "'", start);
    }
};

}  // namespace detail

inline KnotExpr parse_knot(const std::string& text) {
    detail::KnotParser p{text};
    KnotExpr k = p.expr();
    p.skip();
    if (p.i != text.size()) throw ParseError("trailing input", p.i);
    return k;
}

// ---------------------------------------------------------------------------
// Monodromy
// ---------------------------------------------------------------------------

namespace detail {

/** Append `src` into `dst`, returning the remapped root (free) side. */
inline CurveSide append_class(MClass& dst, const MClass& src, const CurveSide& root) {
    int pbase = static_cast<int>(dst.periodic.size());
    int tbase = static_cast<int>(dst.torus.size());
    dst.periodic.insert(dst.periodic.end(), src.periodic.begin(), src.periodic.end());
    dst.torus.insert(dst.torus.end(), src.torus.begin(), src.torus.end());
    for (CurveOrbit c : src.curves) {
        for (CurveSide* s : {&c.a, &c.b}) s->piece.idx += s->piece.kind == 0 ? pbase : tbase;
        dst.curves.push_back(c);
    }
    CurveSide r = root;
    r.piece.idx += r.piece.kind == 0 ? pbase : tbase;
    return r;
}

struct RootedClass {
    MClass cls;
    CurveSide root;  // the free boundary slot corresponding to the knot
};

inline RootedClass build_monodromy(const KnotExpr& k) {
    switch (k.kind) {
        case KnotExpr::Unknot: {
            MClass m;
            m.periodic.push_back(disk_piece());
            return {m, {{0, 0}, 0}};
        }
        case KnotExpr::Fig8: {
            return {s11_mclass(parse_twist_word("Ta Tb^-1")), {{1, 0}, 0}};
        }
        case KnotExpr::Torus: {
            if (std::abs(k.q) == 1 || k.p == 1) {
                return build_monodromy(KnotExpr::unknot());
            }
            MClass m;
            m.periodic.push_back(torus_knot_piece(k.p, k.q));
            return {m, {{0, 0}, 0}};
        }
        case KnotExpr::Mirror: {
            RootedClass r = build_monodromy(k.children[0]);
            r.cls = mirror_class(r.cls);
            return r;
        }
        case KnotExpr::Reverse: {
            // Reversal preserves the monodromy class in this model.
            return build_monodromy(k.children[0]);
        }
        case KnotExpr::Sum: {
            std::vector<RootedClass> parts;
            for (const auto& c : k.children) {
                RootedClass r = build_monodromy(c);
                if (r.cls.periodic.size() == 1 && is_plain_disk(r.cls.periodic[0]) &&
                    r.cls.torus.empty())
                    continue;  // summing with the unknot is the identity
                parts.push_back(std::move(r));
            }
            if (parts.empty()) return build_monodromy(KnotExpr::unknot());
            if (parts.size() == 1) return parts[0];
            MClass m;
            m.periodic.push_back(keychain_piece(static_cast<long>(parts.size())));
            for (std::size_t i = 0; i < parts.size(); ++i) {
                CurveSide child = append_class(m, parts[i].cls, parts[i].root);
                m.curves.push_back({1, {{0, 0}, static_cast<int>(i) + 1}, child, false});
            }
            m.validate();
            return {m, {{0, 0}, 0}};
        }
        case KnotExpr::Cable: {
            if (k.p < 2 || k.q == 0 || gcd_long(k.p, k.q) != 1)
                throw std::invalid_argument("cable: need coprime p >= 2, q != 0");
            RootedClass comp = build_monodromy(k.children[0]);
            if (comp.cls.periodic.size() == 1 && is_plain_disk(comp.cls.periodic[0]) &&
                comp.cls.torus.empty()) {
                // Cable of the unknot is the (p,q) torus knot.
                if (std::abs(k.q) < 2) return build_monodromy(KnotExpr::unknot());
                return build_monodromy(KnotExpr::torus(k.p, k.q));
            }
            if (!(comp.cls.periodic.empty() && comp.cls.torus.size() == 1 &&
                  comp.cls.curves.empty() && !comp.cls.torus[0].closed &&
                  comp.cls.torus[0].copies == 1))
                throw std::invalid_argument(
                    "cable: only genus-one companions are supported in this model");
            MClass m;
            m.periodic.push_back(cable_pattern_piece(k.p, k.q));
            m.torus.push_back({k.p, false, comp.cls.torus[0].ret});
            m.curves.push_back({k.p, {{0, 0}, 1}, {{1, 0}, 0}, false});
            m.validate();
            return {m, {{0, 0}, 0}};
        }
    }
    throw std::logic_error("build_monodromy: unreachable");
}

}  // namespace detail

inline MClass knot_monodromy(const KnotExpr& k) {
    detail::RootedClass r = detail::build_monodromy(k);
    r.cls.validate();
    return r.cls;
}

// ---------------------------------------------------------------------------
// Genus
// ---------------------------------------------------------------------------

inline long genus(const KnotExpr& k) {
    switch (k.kind) {
        case KnotExpr::Unknot: return 0;
        case KnotExpr::Fig8: return 1;
        case KnotExpr::Torus:
            if (std::abs(k.q) == 1 || k.p == 1) return 0;
            return (k.p - 1) * (std::abs(k.q) - 1) / 2;
        case KnotExpr::Mirror:
        case KnotExpr::Reverse: return genus(k.children[0]);
        case KnotExpr::Sum: {
            long g = 0;
            for (const auto& c : k.children) g += genus(c);
            return g;
        }
        case KnotExpr::Cable:
            // g(P(C)) = |w| g(C) + pattern genus, with winding number p.
            return k.p * genus(k.children[0]) + (k.p - 1) * (std::abs(k.q) - 1) / 2;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Alexander polynomials (two independent routes)
// ---------------------------------------------------------------------------

/** Normalized Alexander polynomial of the (p,q) torus knot. */
inline ZPoly torus_alexander(long p, long q) {
    long aq = std::abs(q);
    if (p < 2 || aq < 2) return ZPoly::one();
    auto cyc = [](long n) {  // t^n - 1
        ZPoly c = ZPoly::monomial(1, static_cast<std::size_t>(n));
        return c - ZPoly::one();
    };
    return (cyc(p * aq) * cyc(1)).divide_exact(cyc(p) * cyc(aq));
}

/** Structural (satellite-formula) route. */
inline ZPoly alexander(const KnotExpr& k) {
    switch (k.kind) {
        case KnotExpr::Unknot: return ZPoly::one();
        case KnotExpr::Fig8: return ZPoly({1, -3, 1});
        case KnotExpr::Torus: return torus_alexander(k.p, k.q);
        case KnotExpr::Mirror:
        case KnotExpr::Reverse: return alexander(k.children[0]);
        case KnotExpr::Sum: {
            ZPoly d = ZPoly::one();
            for (const auto& c : k.children) d = d * alexander(c);
            return d;
        }
        case KnotExpr::Cable:
            return torus_alexander(k.p, k.q) *
                   alexander(k.children[0]).compose_power(static_cast<std::size_t>(k.p));
    }
    return ZPoly::one();
}

namespace detail {

/**
 * Characteristic polynomial of the homological action of a periodic piece
 * after capping all its boundary orbits, via Lefschetz numbers: for a
 * finite-order map of a closed surface, the fixed points of a nontrivial
 * power lie over cone points and each has index one, so
 * tr(h^k | H_1) = 2 - L(h^k), and Newton's identities recover the
 * polynomial from these power sums.
 */
inline ZPoly capped_char_poly(const PeriodicPiece& piece) {
    PeriodicPiece p = piece;
    long N = p.period;
    for (const auto& b : p.boundaries) {
        long o = N / b.circles;
        if (o >= 2) p.cones.push_back({o, mod_positive(b.h, N)});
    }
    p.boundaries.clear();
    Rat chi = Rat(N) * p.quotient_euler();
    if (rat_den(chi) != 1) throw std::logic_error("capped_char_poly: bad Euler data");
    long genus2 = 2 - static_cast<long>(rat_num(chi));
    if (genus2 < 0 || genus2 % 2 != 0)
        throw std::logic_error("capped_char_poly: bad capped genus");
    long n = genus2;  // dimension of H_1
    if (n == 0) return ZPoly::one();
    std::vector<Rat> power(n + 1, Rat(0));  // power sums p_k, 1-based
    for (long kk = 1; kk <= n; ++kk) {
        long L;
        if (kk % N == 0) {
            L = 2 - genus2;
        } else {
            L = 0;
            for (const auto& c : p.cones)
                if (kk % (N / c.order) == 0) L += N / c.order;
        }
        power[kk] = Rat(2 - L);
    }
    // Newton: k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i
    std::vector<Rat> e(n + 1, Rat(0));
    e[0] = Rat(1);
    for (long kk = 1; kk <= n; ++kk) {
        Rat s(0);
        for (long i = 1; i <= kk; ++i) {
            Rat term = e[kk - i] * power[i];
            s += (i % 2 == 1) ? term : -term;
        }
        e[kk] = s / Rat(kk);
    }
    // char(t) = sum_k (-1)^k e_k t^(n-k)
    std::vector<Int> coeffs(n + 1, Int(0));
    for (long kk = 0; kk <= n; ++kk) {
        Rat c = (kk % 2 == 0) ? e[kk] : -e[kk];
        if (rat_den(c) != 1) throw std::logic_error("capped_char_poly: non-integral");
        coeffs[n - kk] = rat_num(c);
    }
    return ZPoly(coeffs);
}

}  // namespace detail

/**
 * Characteristic polynomial of the homological action on the fiber of a
 * structured class: reduction-curve classes die in the homology of the
 * fiber (they bound on the far side), so the action is block-diagonal over
 * the capped pieces, with a torus orbit of m copies and return matrix A
 * contributing det(t^m I - A).
 */
inline ZPoly fiber_char_poly(const MClass& m) {
    ZPoly out = ZPoly::one();
    for (const auto& p : m.periodic) out = out * detail::capped_char_poly(p);
    for (const auto& t : m.torus) {
        std::size_t mm = static_cast<std::size_t>(t.copies);
        Int tr = t.ret.m.trace(), dt = t.ret.m.det();
        ZPoly block =
            ZPoly::monomial(1, 2 * mm) - ZPoly::monomial(tr, mm) + ZPoly(std::vector<Int>{dt});
        out = out * block;
    }
    return out;
}

/** Alexander polynomial through the homological action of the monodromy. */
inline ZPoly alexander_via_monodromy(const KnotExpr& k) {
    ZPoly c = fiber_char_poly(knot_monodromy(k));
    // normalize: primitive with positive leading coefficient
    return c.primitive();
}

/** Divisibility in the Laurent ring (both arguments normalized). */
inline bool check_divisibility(const KnotExpr& j, const KnotExpr& k) {
    ZPoly a = alexander(j), b = alexander(k);
    if (a.is_zero()) return b.is_zero();
    return b.divisible_by(a);
}

// ---------------------------------------------------------------------------
// Recognition of compressed classes as knot monodromies
// ---------------------------------------------------------------------------

namespace detail {

inline std::optional<std::string> recognize_normalized(const MClass& m);

inline std::optional<std::string> recognize_s11(const S11Class& ret) {
    MClass f = normalized(s11_mclass(parse_twist_word("Ta Tb^-1")));
    MClass g = normalized(s11_mclass(ret));
    if (f.canonical_string() == g.canonical_string()) return "fig8";
    return recognize_normalized(g);
}

inline std::optional<std::string> recognize_normalized(const MClass& m) {
    if (m.surface().components.size() != 1) return std::nullopt;
    if (m.free_slots().size() != 1) return std::nullopt;
    std::string key = m.canonical_string();
    // unknot
    if (m.torus.empty() && m.curves.empty() && m.periodic.size() == 1 &&
        is_plain_disk(m.periodic[0]))
        return "unknot";
    // figure-eight
    if (m.periodic.empty() && m.curves.empty() && m.torus.size() == 1) {
        MClass f = normalized(s11_mclass(parse_twist_word("Ta Tb^-1")));
        if (key == f.canonical_string()) return "fig8";
        return std::nullopt;
    }
    // torus knots
    if (m.torus.empty() && m.curves.empty() && m.periodic.size() == 1) {
        for (long p = 2; p <= 7; ++p)
            for (long q = -9; q <= 9; ++q) {
                if (std::abs(q) < 2 || gcd_long(p, q) != 1) continue;
                MClass t;
                t.periodic.push_back(torus_knot_piece(p, q));
                if (key == t.canonical_string())
                    return "torus(" + std::to_string(p) + "," + std::to_string(q) + ")";
            }
        return std::nullopt;
    }
    // connected sums: keychain at the root
    CurveSide root = m.free_slots()[0];
    if (root.piece.kind == 0) {
        const PeriodicPiece& rp = m.periodic[root.piece.idx];
        bool keychain = rp.genus == 0 && rp.period == 1 && rp.cones.empty() &&
                        rp.boundaries.size() >= 3 && root.slot == 0;
        if (keychain) {
            std::vector<std::string> parts;
            for (int j = 1; j < static_cast<int>(rp.boundaries.size()); ++j) {
                auto ci = curve_at(m, {{0, root.piece.idx}, j});
                if (!ci) return std::nullopt;
                CurveSide far = far_side(m.curves[*ci], {{0, root.piece.idx}, j});
                std::vector<PieceRef> sub = reachable(m, far.piece, *ci);
                for (const auto& r : sub)
                    if (r.kind == 0 && r.idx == root.piece.idx) return std::nullopt;
                auto name = recognize_normalized(extract(m, sub, *ci));
                if (!name) return std::nullopt;
                parts.push_back(*name);
            }
            std::sort(parts.begin(), parts.end());
            std::string s = "sum(";
            for (std::size_t j = 0; j < parts.size(); ++j) s += (j ? "," : "") + parts[j];
            return s + ")";
        }
        // cables: pattern piece at the root with a genus-one companion orbit
        for (long p = 2; p <= 7; ++p)
            for (long q = -9; q <= 9; ++q) {
                if (q == 0 || gcd_long(p, q) != 1) continue;
                PeriodicPiece pat = cable_pattern_piece(p, q);
                if (!periodic_conjugate(rp, pat) || root.slot != 0) continue;
                auto ci = curve_at(m, {{0, root.piece.idx}, 1});
                if (!ci) continue;
                CurveSide far = far_side(m.curves[*ci], {{0, root.piece.idx}, 1});
                if (far.piece.kind != 1) continue;
                const TorusPiece& t = m.torus[far.piece.idx];
                if (t.copies != p || t.closed) continue;
                auto inner = recognize_s11(t.ret);
                if (!inner) continue;
                return "cable(" + std::to_string(p) + "," + std::to_string(q) + "," + *inner +
                       ")";
            }
    }
    return std::nullopt;
}

}  // namespace detail

/** Attempt to identify a class as the monodromy of a built-in knot shape. */
inline std::optional<std::string> recognize_knot(const MClass& m) {
    return detail::recognize_normalized(normalized(m));
}

// ---------------------------------------------------------------------------
// Predecessor queries
// ---------------------------------------------------------------------------

struct Predecessor {
    MClass cls;
    std::optional<std::string> certificate;
};

/**
 * All connected compressed classes of the monodromy: by the compression
 * correspondence each is the monodromy of a fibered knot below the input.
 */
inline std::vector<Predecessor> predecessors(const KnotExpr& k, std::size_t length_bound = 32) {
    std::vector<Predecessor> out;
    for (const auto& c : all_compressed_classes(knot_monodromy(k), length_bound)) {
        if (c.surface().components.size() != 1) continue;
        out.push_back({c, recognize_knot(c)});
    }
    return out;
}

/** Whether the trivial disk class appears among the compressed classes. */
inline bool is_homotopy_ribbon(const KnotExpr& k, std::size_t length_bound = 32) {
    for (const auto& c : all_compressed_classes(knot_monodromy(k), length_bound))
        if (!c.empty() && c.component_count() == 1 && is_trivial_class(c)) return true;
    return false;
}

}  // namespace monodromy
