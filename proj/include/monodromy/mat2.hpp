/**
 * Exact 2x2 integer matrices of determinant +/-1, the homological engine
 * for mapping classes of the one-holed torus.
 */
#pragma once

#include "monodromy/poly.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace monodromy {

struct Mat2 {
    Int a{1}, b{0}, c{0}, d{1};

    static Mat2 identity() { return {}; }
    /** Right twist generator R = [[1,1],[0,1]]. */
    static Mat2 R(long n = 1) { return {1, n, 0, 1}; }
    /** Left generator L = [[1,0],[1,1]]. */
    static Mat2 L(long n = 1) { return {1, 0, n, 1}; }
    /** The swap [[0,1],[1,0]] (determinant -1). */
    static Mat2 swap() { return {0, 1, 1, 0}; }

    Int det() const { return a * d - b * c; }
    Int trace() const { return a + d; }

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2 operator-() const { return {-a, -b, -c, -d}; }
    bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
    bool operator!=(const Mat2& o) const { return !(*this == o); }

    /** Inverse, valid since det = +/-1. */
    Mat2 inverse() const {
        Int dt = det();
        if (dt == 1) return {d, -b, -c, a};
        if (dt == -1) return {-d, b, c, -a};
        throw std::logic_error("Mat2: inverse requires det +/-1");
    }

    Mat2 pow(long n) const {
        if (n < 0) return inverse().pow(-n);
        Mat2 acc = identity(), base = *this;
        while (n > 0) {
            if (n & 1) acc = acc * base;
            base = base * base;
            n >>= 1;
        }
        return acc;
    }

    bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }

    /** Characteristic polynomial x^2 - tr x + det. */
    ZPoly char_poly() const { return ZPoly(std::vector<Int>{det(), -trace(), Int(1)}); }

    std::string to_string() const {
        return "[[" + a.str() + "," + b.str() + "],[" + c.str() + "," + d.str() + "]]";
    }

    /** Lexicographic order, used only for canonical encodings. */
    bool operator<(const Mat2& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        if (c != o.c) return c < o.c;
        return d < o.d;
    }
};

/** Apply matrix to a column vector (p, q). */
inline std::pair<Int, Int> apply(const Mat2& m, const Int& p, const Int& q) {
    return {m.a * p + m.b * q, m.c * p + m.d * q};
}

}  // namespace monodromy
