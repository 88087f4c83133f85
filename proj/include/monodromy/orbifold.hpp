/**
 * Essential curves in quotient orbifolds of periodic pieces, their lifting
 * data, and the minimality filter for fold-type compressions.
 *
 * A periodic piece has a quotient orbifold of genus 0 or 1 whose marked
 * objects are its boundary-orbit circles and cone points.  On a genus-zero
 * quotient an isotopy class of essential simple closed curves is exactly a
 * bipartition of the objects with at least two objects on each side; the
 * holonomy of the curve is the sum of the holonomies on one side, and the
 * number of connected preimages upstairs is gcd(holonomy, period).
 */
#pragma once

#include "monodromy/mclass.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace monodromy {

/** One marked object of a quotient orbifold. */
struct OrbifoldObject {
    bool is_boundary = false;
    int index = 0;       // boundary-orbit slot or cone index
    long cone_order = 0; // 0 for boundaries
    long h = 0;
    std::string color;   // symmetry class: objects of equal color are interchangeable
};

/** An essential curve in the quotient, up to isotopy. */
struct QuotientCurve {
    bool nonseparating = false;  // only on genus-one quotients
    std::vector<int> side;       // object indices on the distinguished side
    long h = 0;                  // holonomy of the curve in Z/period
    long lifts = 1;              // number of connected preimages upstairs
};

/** The marked objects of the quotient of a periodic piece. `slot_colors`
 *  gives the symmetry class of each boundary orbit (equal colors mark
 *  boundaries exchangeable by a symmetry of the whole class). */
inline std::vector<OrbifoldObject> quotient_objects(const PeriodicPiece& p,
                                                    const std::vector<std::string>& slot_colors) {
    std::vector<OrbifoldObject> out;
    for (int i = 0; i < static_cast<int>(p.boundaries.size()); ++i) {
        OrbifoldObject o;
        o.is_boundary = true;
        o.index = i;
        o.h = p.boundaries[i].h;
        o.color = "b:" + slot_colors[i];
        out.push_back(o);
    }
    for (int i = 0; i < static_cast<int>(p.cones.size()); ++i) {
        OrbifoldObject o;
        o.index = i;
        o.cone_order = p.cones[i].order;
        o.h = p.cones[i].h;
        o.color = "c:" + std::to_string(o.cone_order) + "," + std::to_string(o.h);
        out.push_back(o);
    }
    return out;
}

/**
 * Essential curves of the quotient up to symmetries that lift: for a
 * genus-zero quotient every bipartition with two objects per side, deduped
 * by the color multiset of the distinguished side (symmetries permute
 * equal-colored objects and any such permutation is realized by an orbifold
 * homeomorphism that lifts, since it preserves all holonomy data).
 */
inline std::vector<QuotientCurve> quotient_curves_up_to_symmetry(
    const PeriodicPiece& p, const std::vector<std::string>& slot_colors) {
    std::vector<QuotientCurve> out;
    std::vector<OrbifoldObject> objs = quotient_objects(p, slot_colors);
    long N = p.period;
    if (p.quotient_genus == 1) {
        if (!objs.empty() && objs.size() > 1)
            throw std::logic_error("quotient_curves: unsupported genus-one quotient");
        // Identity-type piece on a one-holed or closed torus: all
        // nonseparating slopes form one orbit under the symmetry group.
        QuotientCurve c;
        c.nonseparating = true;
        c.h = 0;
        c.lifts = N;  // h = 0: one lift per sheet
        out.push_back(c);
        return out;
    }
    if (p.quotient_genus != 0)
        throw std::logic_error("quotient_curves: unsupported quotient genus");
    int n = static_cast<int>(objs.size());
    if (n < 4 && !(n >= 4)) {
        // fall through: subsets below handle every n
    }
    std::set<std::vector<std::string>> seen;
    // Enumerate subsets as the distinguished side.  To count each curve
    // once, require the side not to contain object 0.
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (mask & 1u) continue;
        std::vector<int> side;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) side.push_back(i);
        if (side.size() < 2 || n - static_cast<int>(side.size()) < 2) continue;
        std::vector<std::string> key;
        for (int i : side) key.push_back(objs[i].color);
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) continue;
        QuotientCurve c;
        c.side = side;
        long h = 0;
        for (int i : side) h = detail::mod_positive(h + objs[i].h, N);
        c.h = h;
        c.lifts = detail::gcd_long(h == 0 ? N : h, N);
        if (h == 0) c.lifts = N;
        out.push_back(c);
    }
    return out;
}

/**
 * Minimality filter for fold-type compressions along the preimage of a
 * quotient curve: minimal iff the holonomy is nonzero, or it vanishes and
 * every cone point lies on a side of the curve that is a disk containing
 * exactly two cone points and no boundary circles.
 */
inline bool quotient_curve_minimal(const PeriodicPiece& p,
                                   const std::vector<std::string>& slot_colors,
                                   const QuotientCurve& c) {
    if (c.h % std::max<long>(p.period, 1) != 0) return true;
    if (c.nonseparating) return p.cones.empty();
    std::vector<OrbifoldObject> objs = quotient_objects(p, slot_colors);
    auto side_ok = [&](const std::vector<int>& side) {
        int cones = 0, bnds = 0;
        for (int i : side)
            if (objs[i].is_boundary) ++bnds;
            else ++cones;
        if (cones == 0) return true;      // no singularity on this side
        return bnds == 0 && cones == 2;   // two-singularity disk
    };
    std::vector<int> other;
    {
        std::set<int> in(c.side.begin(), c.side.end());
        for (int i = 0; i < static_cast<int>(objs.size()); ++i)
            if (!in.count(i)) other.push_back(i);
    }
    return side_ok(c.side) && side_ok(other);
}

/** Mirror image of a periodic piece: rotations and holonomies negate. */
inline PeriodicPiece mirror_piece(const PeriodicPiece& p) {
    PeriodicPiece m = p;
    for (auto& b : m.boundaries) {
        b.return_rot = -b.return_rot;
        b.h = detail::mod_positive(-b.h, p.period);
    }
    for (auto& c : m.cones) c.h = detail::mod_positive(-c.h, p.period);
    m.tag = p.tag.empty() ? "" : "mirror(" + p.tag + ")";
    return m;
}

/**
 * Conjugacy test for periodic pieces: two pieces are conjugate (by an
 * orientation-preserving homeomorphism commuting with the covering data)
 * iff their numerical data agree up to reordering boundary orbits and
 * cone points.
 */
inline bool periodic_conjugate(const PeriodicPiece& a, const PeriodicPiece& b) {
    if (a.genus != b.genus || a.period != b.period || a.quotient_genus != b.quotient_genus)
        return false;
    auto bkey = [](const PeriodicPiece& p) {
        std::vector<std::tuple<long, Rat, long>> bs;
        for (const auto& x : p.boundaries) bs.emplace_back(x.circles, x.return_rot, x.h);
        std::sort(bs.begin(), bs.end());
        std::vector<ConePoint> cs = p.cones;
        std::sort(cs.begin(), cs.end());
        return std::make_pair(bs, cs);
    };
    return bkey(a) == bkey(b);
}

}  // namespace monodromy
