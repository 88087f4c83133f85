/**
 * Fractional Dehn twist coefficients.
 *
 * On the one-holed torus the coefficient of a rel-boundary class is
 * (e - Phi(M)) / 12, where e is the exponent sum of any defining twist word
 * and Phi is the homogenized Rademacher function of the homological action.
 * This is the unique homogeneous function vanishing on freely-periodic
 * representatives and increasing by k under k boundary twists.
 *
 * For periodic pieces the coefficient at a boundary orbit is stored directly
 * as the rotation number of the return map.
 */
#pragma once

#include "monodromy/mclass.hpp"

#include <stdexcept>

namespace monodromy {

/** Fractional Dehn twist coefficient of a rel-boundary torus class. */
inline Rat fdtc(const S11Class& f) {
    if (!f.orientation_preserving())
        throw std::invalid_argument("fdtc: orientation-reversing class");
    return Rat(Int(f.e) - rademacher(f.m), 12);
}

/**
 * Fractional Dehn twist coefficient of the first-return map at one circle of
 * the boundary orbit designated by `side`.
 */
inline Rat side_fdtc(const MClass& mc, const CurveSide& side) {
    if (side.piece.kind == 1) {
        const TorusPiece& t = mc.torus[side.piece.idx];
        if (t.closed) throw std::invalid_argument("side_fdtc: closed torus has no boundary");
        return fdtc(t.ret);
    }
    return mc.periodic[side.piece.idx].boundaries[side.slot].return_rot;
}

/**
 * The two-sided coefficient sum about a reduction-curve orbit: the sum of the
 * fractional Dehn twist coefficients of the return map on the two boundary
 * circles of the complement adjacent to one curve of the orbit.  An interval
 * bundle gluing across the orbit can exist only when this vanishes.
 */
inline Rat curve_fdtc_sum(const MClass& mc, const CurveOrbit& c) {
    return side_fdtc(mc, c.a) + side_fdtc(mc, c.b);
}

}  // namespace monodromy
