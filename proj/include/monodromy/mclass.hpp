/**
 * Structured mapping classes on compact oriented surfaces.
 *
 * A mapping class is stored through its invariant decomposition: a collection
 * of pieces joined along orbits of reduction curves.
 *
 *  - TorusPiece: an orbit of one-holed (or closed) tori permuted cyclically,
 *    carrying the first-return class on one component.  This is the shape of
 *    every pseudo-Anosov or elliptic piece arising from genus-one fibers.
 *  - PeriodicPiece: a single invariant component with a periodic return map,
 *    described by its quotient orbifold: period, cone points, and one entry
 *    per orbit of boundary circles.  Each boundary orbit records the orbit
 *    size, the fractional Dehn twist coefficient of the return map at one
 *    circle of the orbit, and the holonomy value h of the quotient circle
 *    (the power of the return map by which a lift of the circle translates).
 *
 * Reduction-curve orbits glue boundary orbits of pieces to one another; any
 * boundary orbit not consumed by a curve is a free boundary of the surface.
 * All rotation data is exact rational; homology data is exact integer.
 */
#pragma once

#include "monodromy/s11.hpp"
#include "monodromy/surface.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace monodromy {

// ---------------------------------------------------------------------------
// Pieces
// ---------------------------------------------------------------------------

/** An orbit of `copies` tori, cyclically permuted, with first-return `ret`. */
struct TorusPiece {
    long copies = 1;
    bool closed = false;  // closed torus if true, one-holed torus otherwise
    S11Class ret;         // return class to one component (rel boundary if open)
};

struct ConePoint {
    long order = 1;
    long h = 0;  // holonomy in Z/period of a small loop about the cone point
    bool operator<(const ConePoint& o) const {
        if (order != o.order) return order < o.order;
        return h < o.h;
    }
    bool operator==(const ConePoint& o) const { return order == o.order && h == o.h; }
};

/** One orbit of boundary circles of a periodic piece. */
struct BoundaryOrbit {
    long circles = 1;
    Rat return_rot = 0;  // fractional Dehn twist coefficient of the return map
    long h = 0;          // holonomy in Z/period of the quotient circle
};

/**
 * An invariant component with periodic return map, given by quotient data.
 * The component has genus `genus` and one boundary circle per orbit entry
 * per orbit element; the quotient orbifold has genus `quotient_genus`, one
 * boundary circle per orbit, and the listed cone points.
 */
struct PeriodicPiece {
    long genus = 0;
    long period = 1;
    long quotient_genus = 0;
    std::vector<BoundaryOrbit> boundaries;
    std::vector<ConePoint> cones;
    std::string tag;  // construction note, e.g. "torus_knot(2,3)"

    long boundary_circles() const {
        long n = 0;
        for (const auto& b : boundaries) n += b.circles;
        return n;
    }
    SurfaceComponent component() const { return {genus, boundary_circles()}; }
    /** Orbifold Euler characteristic of the quotient. */
    Rat quotient_euler() const {
        Rat chi = Rat(2 - 2 * quotient_genus - static_cast<long>(boundaries.size()));
        for (const auto& c : cones) chi -= Rat(c.order - 1, c.order);
        return chi;
    }
};

// ---------------------------------------------------------------------------
// Mapping classes: pieces glued along reduction-curve orbits
// ---------------------------------------------------------------------------

struct PieceRef {
    int kind = 0;  // 0 = periodic piece, 1 = torus piece
    int idx = 0;
    bool operator==(const PieceRef& o) const { return kind == o.kind && idx == o.idx; }
};

/** One end of a reduction-curve orbit: a boundary-orbit slot of a piece. */
struct CurveSide {
    PieceRef piece;
    int slot = 0;  // boundary-orbit index for periodic pieces; always 0 for tori
    bool operator==(const CurveSide& o) const { return piece == o.piece && slot == o.slot; }
};

/**
 * An orbit of `count` reduction curves.  When both sides reference the same
 * boundary-orbit slot the curves run between successive copies of a single
 * torus orbit; `flip` records whether the first return to a curve in the
 * orbit exchanges its two sides.
 */
struct CurveOrbit {
    long count = 1;
    CurveSide a, b;
    bool flip = false;
};

struct MClass {
    std::vector<PeriodicPiece> periodic;
    std::vector<TorusPiece> torus;
    std::vector<CurveOrbit> curves;

    bool empty() const { return periodic.empty() && torus.empty(); }

    long boundary_circles(const CurveSide& s) const {
        if (s.piece.kind == 1) return torus[s.piece.idx].copies;
        return periodic[s.piece.idx].boundaries[s.slot].circles;
    }

    /** Slots of boundary orbits not consumed by any reduction curve. */
    std::vector<CurveSide> free_slots() const {
        std::vector<CurveSide> out;
        auto used = [&](const CurveSide& s) {
            for (const auto& c : curves)
                if (c.a == s || c.b == s) return true;
            return false;
        };
        for (int i = 0; i < static_cast<int>(periodic.size()); ++i)
            for (int j = 0; j < static_cast<int>(periodic[i].boundaries.size()); ++j) {
                CurveSide s{{0, i}, j};
                if (!used(s)) out.push_back(s);
            }
        for (int i = 0; i < static_cast<int>(torus.size()); ++i) {
            if (torus[i].closed) continue;
            CurveSide s{{1, i}, 0};
            if (!used(s)) out.push_back(s);
        }
        return out;
    }

    /** Total number of free boundary circles of the underlying surface. */
    long free_boundary_circles() const {
        long n = 0;
        for (const auto& s : free_slots()) n += boundary_circles(s);
        return n;
    }

    /** The underlying surface (pieces only; reduction annuli are absorbed). */
    Surface surface() const {
        Surface s;
        for (const auto& p : periodic) {
            SurfaceComponent c = p.component();
            // Glued boundary circles disappear into the neighbors.
            s.components.push_back(c);
        }
        for (const auto& t : torus)
            for (long i = 0; i < t.copies; ++i)
                s.components.push_back({1, t.closed ? 0 : 1});
        // Components joined by curves merge; compute merged components.
        return merge_components(s);
    }

    /** Number of connected components of the underlying surface. */
    std::size_t component_count() const { return surface().components.size(); }

    void validate() const;

    std::string canonical_string() const;

private:
    Surface merge_components(const Surface&) const;
};

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

namespace detail {

inline long mod_positive(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

inline long gcd_long(long a, long b) { return std::gcd(std::abs(a), std::abs(b)); }

}  // namespace detail

inline void MClass::validate() const {
    // Every curve side must reference an existing piece and slot.
    for (const auto& c : curves)
        for (const CurveSide* s : {&c.a, &c.b}) {
            if (s->piece.kind == 0) {
                if (s->piece.idx < 0 || s->piece.idx >= static_cast<int>(periodic.size()) ||
                    s->slot < 0 ||
                    s->slot >= static_cast<int>(periodic[s->piece.idx].boundaries.size()))
                    throw std::logic_error("MClass: curve references a missing boundary orbit");
            } else {
                if (s->piece.idx < 0 || s->piece.idx >= static_cast<int>(torus.size()) ||
                    s->slot != 0)
                    throw std::logic_error("MClass: curve references a missing torus piece");
            }
        }
    // Slot usage: each boundary-orbit slot is consumed by at most one curve
    // orbit, and the circle counts on the two sides of a curve orbit match.
    // Number of distinct curve orbits touching a slot (a self-glued orbit
    // referencing the slot on both sides counts once).
    auto slot_count = [&](const CurveSide& s) {
        int uses = 0;
        for (const auto& c : curves)
            if (c.a == s || c.b == s) ++uses;
        return uses;
    };
    for (const auto& c : curves) {
        if (c.a == c.b) {
            // Curves running between successive copies of one torus orbit.
            if (boundary_circles(c.a) != 2 * c.count)
                throw std::logic_error("MClass: self-glued curve orbit size mismatch");
        } else {
            if (boundary_circles(c.a) != c.count || boundary_circles(c.b) != c.count)
                throw std::logic_error("MClass: curve orbit size mismatch");
        }
    }
    for (int i = 0; i < static_cast<int>(periodic.size()); ++i)
        for (int j = 0; j < static_cast<int>(periodic[i].boundaries.size()); ++j)
            if (slot_count({{0, i}, j}) > 1)
                throw std::logic_error("MClass: boundary orbit used twice");
    for (int i = 0; i < static_cast<int>(torus.size()); ++i) {
        int uses = slot_count({{1, i}, 0});
        if (torus[i].closed && uses > 0)
            throw std::logic_error("MClass: closed torus cannot be glued");
        if (uses > 1) throw std::logic_error("MClass: torus boundary used twice");
    }

    // Periodic pieces: Riemann-Hurwitz and holonomy consistency.
    for (const auto& p : periodic) {
        long N = p.period;
        if (N < 1) throw std::logic_error("MClass: nonpositive period");
        Rat chi_surface = Rat(2 - 2 * p.genus - p.boundary_circles());
        if (chi_surface != Rat(N) * p.quotient_euler())
            throw std::logic_error("MClass: Riemann-Hurwitz violation in piece " + p.tag);
        if (N == 1) continue;
        long hsum = 0;
        for (const auto& b : p.boundaries) {
            // An orbit of j circles covers its quotient circle with total
            // degree N, so the holonomy subgroup has order N/j.
            if (N % b.circles != 0)
                throw std::logic_error("MClass: orbit size does not divide period");
            if (detail::gcd_long(b.h, N) != b.circles)
                throw std::logic_error("MClass: boundary holonomy order mismatch");
            // The return map covers the quotient circle N/j times, so its
            // rotation number is a multiple of j/N.
            Rat scaled = b.return_rot * Rat(N, b.circles);
            if (rat_den(scaled) != 1)
                throw std::logic_error("MClass: boundary rotation incompatible with period");
            hsum = detail::mod_positive(hsum + b.h, N);
        }
        for (const auto& c : p.cones) {
            if (c.order < 2 || N % c.order != 0)
                throw std::logic_error("MClass: cone order does not divide period");
            if (detail::gcd_long(c.h, N) != N / c.order)
                throw std::logic_error("MClass: cone holonomy order mismatch");
            hsum = detail::mod_positive(hsum + c.h, N);
        }
        // Total holonomy of the boundary of the (planar-quotient) orbifold
        // vanishes; for positive quotient genus the relation is vacuous.
        if (p.quotient_genus == 0 && hsum != 0)
            throw std::logic_error("MClass: holonomy sum nonzero in piece " + p.tag);
    }
    for (const auto& t : torus) {
        if (t.copies < 1) throw std::logic_error("MClass: nonpositive torus orbit");
        if (!t.ret.orientation_preserving())
            throw std::logic_error("MClass: orientation-reversing return map");
    }
}

// ---------------------------------------------------------------------------
// Underlying surface with merged components
// ---------------------------------------------------------------------------

inline Surface MClass::merge_components(const Surface& pieces) const {
    // Union-find over piece components; curves glue along annuli.
    // Component ids: periodic pieces first (one id each), then torus copies.
    std::vector<int> base_of_torus(torus.size(), 0);
    int n = static_cast<int>(periodic.size());
    for (std::size_t i = 0; i < torus.size(); ++i) {
        base_of_torus[i] = n;
        n += static_cast<int>(torus[i].copies);
    }
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int x, int y) { parent[find(x)] = find(y); };

    // Ids of the circles at a slot, one per circle, in orbit order.
    auto circle_owners = [&](const CurveSide& s) {
        std::vector<int> out;
        if (s.piece.kind == 1) {
            for (long i = 0; i < torus[s.piece.idx].copies; ++i)
                out.push_back(base_of_torus[s.piece.idx] + static_cast<int>(i));
        } else {
            out.assign(periodic[s.piece.idx].boundaries[s.slot].circles, s.piece.idx);
        }
        return out;
    };
    for (const auto& c : curves) {
        if (c.a == c.b) {
            // Successive copies of one torus orbit are joined in a cycle.
            auto owners = circle_owners(c.a);
            for (std::size_t i = 0; i + 1 < owners.size(); ++i) unite(owners[i], owners[i + 1]);
        } else {
            auto oa = circle_owners(c.a), ob = circle_owners(c.b);
            for (long i = 0; i < c.count; ++i)
                unite(oa[i % oa.size()], ob[i % ob.size()]);
        }
    }

    // Aggregate genus/boundary via Euler characteristic.  Each curve kills
    // two boundary circles; each gluing of distinct components reduces the
    // component count; genus absorbs the rest.
    struct Agg {
        long euler = 0;
        long boundary = 0;
        bool present = false;
    };
    std::vector<Agg> agg(n);
    auto add_component = [&](int id, const SurfaceComponent& c) {
        int r = find(id);
        agg[r].euler += c.euler();
        agg[r].boundary += c.boundary;
        agg[r].present = true;
    };
    for (std::size_t i = 0; i < periodic.size(); ++i)
        add_component(static_cast<int>(i), periodic[i].component());
    for (std::size_t i = 0; i < torus.size(); ++i)
        for (long j = 0; j < torus[i].copies; ++j)
            add_component(base_of_torus[i] + static_cast<int>(j), {1, torus[i].closed ? 0L : 1L});
    // Remove glued boundary circles (annuli have Euler characteristic 0).
    for (const auto& c : curves) {
        auto drop = [&](const CurveSide& s, long circ) {
            int r = find(circle_owners(s)[0]);
            agg[r].boundary -= circ;
        };
        if (c.a == c.b) {
            drop(c.a, 2 * c.count);
        } else {
            drop(c.a, c.count);
            drop(c.b, c.count);
        }
    }
    Surface out;
    for (int i = 0; i < n; ++i) {
        if (find(i) != i || !agg[i].present) continue;
        long genus2 = 2 - agg[i].euler - agg[i].boundary;  // 2g = 2 - chi - b
        if (genus2 < 0 || genus2 % 2 != 0)
            throw std::logic_error("MClass: inconsistent merged component");
        out.components.push_back({genus2 / 2, agg[i].boundary});
    }
    std::sort(out.components.begin(), out.components.end());
    return out;
}

// ---------------------------------------------------------------------------
// Canonical encodings (conjugacy/homeomorphism-invariant comparison keys)
// ---------------------------------------------------------------------------

namespace detail {

/**
 * Reduce an elliptic or central element of SL(2,Z) to a canonical conjugacy
 * representative by greedy norm reduction over generator conjugations,
 * breaking ties lexicographically over the bounded equal-norm orbit.
 */
inline Mat2 elliptic_canonical(const Mat2& m_in) {
    auto norm = [](const Mat2& m) {
        return iabs(m.a) + iabs(m.b) + iabs(m.c) + iabs(m.d);
    };
    const Mat2 gens[4] = {Mat2::R(1), Mat2::R(-1), Mat2::L(1), Mat2::L(-1)};
    Mat2 cur = m_in;
    bool improved = true;
    while (improved) {
        improved = false;
        for (const auto& g : gens) {
            Mat2 cand = g * cur * g.inverse();
            if (norm(cand) < norm(cur)) {
                cur = cand;
                improved = true;
            }
        }
    }
    // Explore the norm-preserving conjugacy orbit (finite for elliptics) and
    // take the lexicographic minimum.
    std::vector<Mat2> frontier{cur}, all{cur};
    Int best_norm = norm(cur);
    while (!frontier.empty()) {
        std::vector<Mat2> next;
        for (const auto& m : frontier)
            for (const auto& g : gens) {
                Mat2 cand = g * m * g.inverse();
                if (norm(cand) != best_norm) continue;
                if (std::find(all.begin(), all.end(), cand) == all.end()) {
                    all.push_back(cand);
                    next.push_back(cand);
                    if (all.size() > 4096)
                        throw std::logic_error("elliptic_canonical: orbit overflow");
                }
            }
        frontier = std::move(next);
    }
    return *std::min_element(all.begin(), all.end());
}

/** Conjugacy-invariant key of a rel-boundary (or closed) torus class. */
inline std::string s11_conjugacy_key(const S11Class& f, bool closed) {
    std::ostringstream os;
    switch (s11_type(f.m)) {
        case S11Type::PseudoAnosov: {
            HyperbolicForm h = hyperbolic_form(f.m);
            os << "pA(" << (h.sign > 0 ? '+' : '-') << word_string(h.primitive) << "^" << h.k
               << ")";
            break;
        }
        case S11Type::Reducible: {
            ParabolicData p = parabolic_data(f.m);
            os << "par(" << (p.sign > 0 ? '+' : '-') << p.n.str() << ")";
            break;
        }
        case S11Type::Periodic: {
            os << "per(" << elliptic_canonical(f.m).to_string() << ")";
            break;
        }
    }
    if (!closed) os << "e" << f.e;
    return os.str();
}

}  // namespace detail

inline std::string MClass::canonical_string() const {
    // Encode each piece, then resolve piece-reference labels.  Pieces are
    // few; brute-force the ordering to get a true canonical form.
    auto encode = [&](const std::vector<int>& perm_p, const std::vector<int>& perm_t) {
        // inverse maps: original index -> position
        std::vector<int> pos_p(perm_p.size()), pos_t(perm_t.size());
        for (std::size_t i = 0; i < perm_p.size(); ++i) pos_p[perm_p[i]] = static_cast<int>(i);
        for (std::size_t i = 0; i < perm_t.size(); ++i) pos_t[perm_t[i]] = static_cast<int>(i);
        std::ostringstream os;
        for (int pi : perm_p) {
            const auto& p = periodic[pi];
            os << "P[g" << p.genus << ",N" << p.period << ",qg" << p.quotient_genus << ";b:";
            for (const auto& b : p.boundaries)
                os << "(" << b.circles << "," << b.return_rot << "," << b.h << ")";
            os << ";c:";
            std::vector<ConePoint> cones = p.cones;
            std::sort(cones.begin(), cones.end());
            for (const auto& c : cones) os << "(" << c.order << "," << c.h << ")";
            os << "]";
        }
        for (int ti : perm_t) {
            const auto& t = torus[ti];
            os << "T[" << t.copies << (t.closed ? "c" : "o") << ","
               << detail::s11_conjugacy_key(t.ret, t.closed) << "]";
        }
        std::vector<std::string> curve_keys;
        for (const auto& c : curves) {
            auto side_key = [&](const CurveSide& s) {
                std::ostringstream ss;
                ss << (s.piece.kind == 0 ? "P" : "T")
                   << (s.piece.kind == 0 ? pos_p[s.piece.idx] : pos_t[s.piece.idx]) << "."
                   << s.slot;
                return ss.str();
            };
            std::string ka = side_key(c.a), kb = side_key(c.b);
            if (kb < ka) std::swap(ka, kb);
            std::ostringstream ss;
            ss << "C[" << c.count << "," << ka << "," << kb << (c.flip ? ",f" : "") << "]";
            curve_keys.push_back(ss.str());
        }
        std::sort(curve_keys.begin(), curve_keys.end());
        for (const auto& k : curve_keys) os << k;
        return os.str();
    };
    std::vector<int> perm_p(periodic.size()), perm_t(torus.size());
    std::iota(perm_p.begin(), perm_p.end(), 0);
    std::iota(perm_t.begin(), perm_t.end(), 0);
    std::string best;
    std::vector<int> pp = perm_p;
    std::sort(pp.begin(), pp.end());
    do {
        std::vector<int> tt = perm_t;
        std::sort(tt.begin(), tt.end());
        do {
            std::string cand = encode(pp, tt);
            if (best.empty() || cand < best) best = cand;
        } while (std::next_permutation(tt.begin(), tt.end()));
    } while (std::next_permutation(pp.begin(), pp.end()));
    return best;
}

// ---------------------------------------------------------------------------
// Piece constructors
// ---------------------------------------------------------------------------

namespace detail {

/** Multiplicative inverse mod n (n >= 1, gcd(a, n) = 1). */
inline long inverse_mod(long a, long n) {
    if (n == 1) return 0;
    long r0 = n, r1 = mod_positive(a, n), s0 = 0, s1 = 1;
    while (r1 != 0) {
        long q = r0 / r1;
        long r2 = r0 - q * r1, s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw std::logic_error("inverse_mod: not invertible");
    return mod_positive(s0, n);
}

}  // namespace detail

/** A disk with trivial mapping class. */
inline PeriodicPiece disk_piece() {
    PeriodicPiece p;
    p.boundaries.push_back({1, Rat(0), 0});
    p.tag = "disk";
    return p;
}

/**
 * The planar piece of a connected sum of n fibers: a disk with n holes,
 * trivial mapping class, root boundary first.
 */
inline PeriodicPiece keychain_piece(long n) {
    if (n < 1) throw std::invalid_argument("keychain_piece: need n >= 1");
    PeriodicPiece p;
    p.boundaries.push_back({1, Rat(0), 0});  // root
    for (long i = 0; i < n; ++i) p.boundaries.push_back({1, Rat(0), 0});
    p.tag = "keychain(" + std::to_string(n) + ")";
    return p;
}

/**
 * Fiber of the (p,q) torus knot with its periodic monodromy: genus
 * (p-1)(|q|-1)/2, period p|q|, quotient a disk with cone points of orders
 * p and |q|, and fractional Dehn twist coefficient 1/(pq) at the boundary.
 */
inline PeriodicPiece torus_knot_piece(long p, long q) {
    if (p < 2 || q == 0 || std::abs(q) < 2 || detail::gcd_long(p, q) != 1)
        throw std::invalid_argument("torus_knot_piece: need coprime p >= 2, |q| >= 2");
    long aq = std::abs(q);
    long N = p * aq;
    int sgn = q > 0 ? 1 : -1;
    PeriodicPiece piece;
    piece.genus = (p - 1) * (aq - 1) / 2;
    piece.period = N;
    long h_root = detail::mod_positive(sgn, N);
    piece.boundaries.push_back({1, make_rat(1, p * q), h_root});
    // Holonomies of the cone loops: h_root + h_p + h_q = 0 (mod N), with
    // h_p a multiple of N/p of order p and h_q a multiple of N/q of order q.
    long u = detail::mod_positive(-h_root * detail::inverse_mod(aq, p), p);
    long v = detail::mod_positive(-h_root * detail::inverse_mod(p, aq), aq);
    piece.cones.push_back({p, detail::mod_positive(aq * u, N)});
    piece.cones.push_back({aq, detail::mod_positive(p * v, N)});
    piece.tag = "torus_knot(" + std::to_string(p) + "," + std::to_string(q) + ")";
    return piece;
}

/**
 * Fiber of the (p,q) cable pattern in the solid torus: genus (p-1)(|q|-1)/2
 * with p+1 boundary circles; the root circle is fixed with fractional Dehn
 * twist coefficient 1/(pq), and the p inner circles form one orbit whose
 * return map has coefficient -p/q.  Quotient: an annulus with one cone point
 * of order p.
 */
inline PeriodicPiece cable_pattern_piece(long p, long q) {
    if (p < 2 || q == 0 || detail::gcd_long(p, q) != 1)
        throw std::invalid_argument("cable_pattern_piece: need coprime p >= 2, q != 0");
    long aq = std::abs(q);
    long N = p * aq;
    int sgn = q > 0 ? 1 : -1;
    PeriodicPiece piece;
    piece.genus = (p - 1) * (aq - 1) / 2;
    piece.period = N;
    long h_root = detail::mod_positive(sgn, N);
    piece.boundaries.push_back({1, make_rat(1, p * q), h_root});  // root first
    // h_root + h_inner + h_cone = 0 (mod N); the inner orbit has p circles
    // (holonomy of order |q|) and the cone has order p.
    long v = detail::mod_positive(-h_root * detail::inverse_mod(p, aq), aq);
    long w = detail::mod_positive(-h_root * detail::inverse_mod(aq, p), p);
    long h_inner = detail::mod_positive(p * v, N);
    piece.boundaries.push_back({p, make_rat(-p, q), h_inner});
    if (p >= 2) piece.cones.push_back({p, detail::mod_positive(aq * w, N)});
    piece.tag = "cable_pattern(" + std::to_string(p) + "," + std::to_string(q) + ")";
    return piece;
}

/**
 * Quotient description of a finite-order class on the one-holed torus,
 * derived from its exponent sum (the fractional Dehn twist coefficient is
 * e/12 for trivial homological Rademacher value; see fdtc.hpp).
 */
inline PeriodicPiece s11_periodic_piece(const S11Class& f) {
    if (s11_type(f.m) != S11Type::Periodic)
        throw std::invalid_argument("s11_periodic_piece: class is not periodic");
    long N = elliptic_order(f.m);
    PeriodicPiece p;
    p.genus = 1;
    p.period = N;
    Rat rot = Rat(f.e, 12);
    if (N == 1) {
        p.quotient_genus = 1;
        p.boundaries.push_back({1, rot, 0});
        p.tag = "s11_periodic(1)";
        return p;
    }
    long h_root = 0;
    {
        // rot = k/N with the boundary holonomy h satisfying h * k = 1 (mod N)
        Rat frac = rot - Rat(floor_div(rat_num(rot), rat_den(rot)));
        long k = detail::mod_positive(static_cast<long>(rat_num(frac * N)), N);
        if (k == 0 || detail::gcd_long(k, N) != 1)
            throw std::logic_error("s11_periodic_piece: rotation incompatible with order");
        h_root = detail::inverse_mod(k, N);
    }
    p.boundaries.push_back({1, rot, h_root});
    // Cone data of the quotient disk, fixed by Riemann-Hurwitz.
    std::vector<long> orders;
    switch (N) {
        case 2: orders = {2, 2, 2}; break;
        case 3: orders = {3, 3}; break;
        case 4: orders = {2, 4}; break;
        case 6: orders = {2, 3}; break;
        default: throw std::logic_error("s11_periodic_piece: impossible order");
    }
    // Choose cone holonomies of the required orders summing to -h_root.
    // With two cones the pair is determined mod N by CRT or direct search;
    // with three order-2 cones (N = 2) each h is 1.
    std::vector<long> hs(orders.size(), 0);
    {
        bool found = false;
        std::function<void(std::size_t, long)> rec = [&](std::size_t i, long sum) {
            if (found) return;
            if (i == orders.size()) {
                if (detail::mod_positive(sum + h_root, N) == 0) found = true;
                return;
            }
            long step = N / orders[i];
            for (long m = 1; m < orders[i] && !found; ++m) {
                if (detail::gcd_long(m, orders[i]) != 1) continue;
                hs[i] = detail::mod_positive(step * m, N);
                rec(i + 1, sum + hs[i]);
                if (!found) hs[i] = 0;
            }
        };
        rec(0, 0);
        if (!found) throw std::logic_error("s11_periodic_piece: no holonomy assignment");
    }
    for (std::size_t i = 0; i < orders.size(); ++i) p.cones.push_back({orders[i], hs[i]});
    p.tag = "s11_periodic(" + std::to_string(N) + ")";
    return p;
}

/** The mapping class of a single one-holed torus. */
inline MClass s11_mclass(const S11Class& f) {
    MClass m;
    m.torus.push_back({1, false, f});
    return m;
}

}  // namespace monodromy
