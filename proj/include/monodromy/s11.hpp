/**
 * Mapping classes and curves on the one-holed torus.
 *
 * The mapping class group of the one-holed torus rel boundary is generated
 * by the Dehn twists Ta, Tb about the standard dual curves a and b, with
 * i(a,b)=1.  The pair (homological action, twist-word exponent sum) is a
 * complete invariant of a rel-boundary class: the kernel of the homology
 * action is the central cyclic group generated by the boundary twist, which
 * has exponent sum 12.  All computations here are exact over the integers.
 *
 * The conjugacy engine: a hyperbolic class is reduced (via the continued
 * fraction of the attracting fixed point of its action) to a cyclic positive
 * word in R = [[1,1],[0,1]] and L = [[1,0],[1,1]], together with an explicit
 * conjugator.  The cyclic word doubles as the combinatorial model of the
 * periodic splitting sequence of the stable lamination: one letter = one
 * maximal split, and rotating the word steps the sequence.
 */
#pragma once

#include "monodromy/algebraic.hpp"
#include "monodromy/mat2.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace monodromy {

/** Floor division with arbitrary-sign numerator, positive denominator. */
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

// ---------------------------------------------------------------------------
// Rel-boundary mapping classes
// ---------------------------------------------------------------------------

/**
 * A mapping class of the one-holed torus rel boundary: homological action
 * plus the exponent sum of any defining twist word in Ta, Tb.
 * Orientation-reversing classes have determinant -1 (and no well-defined
 * exponent sum ambiguity: we keep e of the orientation-preserving part
 * composed with a fixed reflection, which has e = 0 by convention).
 */
struct S11Class {
    Mat2 m;
    long e = 0;  // exponent sum in Ta, Tb (boundary twist has e = 12)

    static S11Class identity() { return {Mat2::identity(), 0}; }
    static S11Class twist_a(long n = 1) { return {Mat2::R(n), n}; }
    static S11Class twist_b(long n = 1) { return {Mat2::L(-n), n}; }
    /** Boundary Dehn twist: trivial action, exponent sum 12. */
    static S11Class boundary_twist(long n = 1) { return {Mat2::identity(), 12 * n}; }

    bool orientation_preserving() const { return m.det() == 1; }

    S11Class compose(const S11Class& o) const { return {m * o.m, e + o.e}; }
    S11Class inverse() const { return {m.inverse(), -e}; }
    S11Class pow(long n) const {
        if (n < 0) return inverse().pow(-n);
        S11Class acc = identity(), base = *this;
        while (n > 0) {
            if (n & 1) acc = acc.compose(base);
            base = base.compose(base);
            n >>= 1;
        }
        return acc;
    }

    bool is_identity_rel_boundary() const { return m.is_identity() && e == 0; }
    /** Free isotopy: boundary twists become trivial. */
    bool is_identity_free() const { return m.is_identity(); }

    bool operator==(const S11Class& o) const { return m == o.m && e == o.e; }
    bool operator!=(const S11Class& o) const { return !(*this == o); }
};

/** Parse a twist word such as "Ta Tb^-1 Ta^3"; empty string = identity. */
inline S11Class parse_twist_word(const std::string& text) {
    S11Class acc = S11Class::identity();
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        long exp = 1;
        auto caret = tok.find('^');
        std::string base = tok.substr(0, caret);
        if (caret != std::string::npos) {
            try {
                exp = std::stol(tok.substr(caret + 1));
            } catch (const std::exception&) {
                throw std::invalid_argument("bad exponent in twist token: " + tok);
            }
        }
        if (base == "Ta")
            acc = acc.compose(S11Class::twist_a(exp));
        else if (base == "Tb")
            acc = acc.compose(S11Class::twist_b(exp));
        else if (base == "Td")
            acc = acc.compose(S11Class::boundary_twist(exp));
        else
            throw std::invalid_argument("unknown twist token: " + tok);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Curves
// ---------------------------------------------------------------------------

/**
 * A multicurve on the one-holed torus: essential components are primitive
 * slopes (p,q) with multiplicities, plus boundary-parallel components.
 * Slopes are normalized with q > 0, or (1,0).
 */
struct S11Curve {
    std::vector<std::pair<std::pair<Int, Int>, unsigned>> slopes;
    unsigned boundary_parallel = 0;

    static std::pair<Int, Int> normalize_slope(Int p, Int q) {
        Int g = boost::multiprecision::gcd(iabs(p),
                                           iabs(q));
        if (g == 0) throw std::invalid_argument("slope (0,0)");
        p /= g;
        q /= g;
        if (q < 0 || (q == 0 && p < 0)) {
            p = -p;
            q = -q;
        }
        return {p, q};
    }

    static S11Curve slope(Int p, Int q, unsigned mult = 1) {
        S11Curve c;
        c.slopes.emplace_back(normalize_slope(std::move(p), std::move(q)), mult);
        return c;
    }
    static S11Curve curve_a() { return slope(1, 0); }
    static S11Curve curve_b() { return slope(0, 1); }

    void canonicalize() {
        std::map<std::pair<Int, Int>, unsigned> acc;
        for (auto& [s, m] : slopes) acc[s] += m;
        slopes.assign(acc.begin(), acc.end());
    }

    bool operator==(const S11Curve& o) const {
        S11Curve x = *this, y = o;
        x.canonicalize();
        y.canonicalize();
        return x.slopes == y.slopes && x.boundary_parallel == y.boundary_parallel;
    }
};

/** Image of a multicurve under a mapping class (homological slope action). */
inline S11Curve act_on_curve(const S11Class& f, const S11Curve& c) {
    S11Curve out;
    out.boundary_parallel = c.boundary_parallel;
    for (const auto& [s, mult] : c.slopes) {
        auto [p, q] = apply(f.m, s.first, s.second);
        out.slopes.emplace_back(S11Curve::normalize_slope(p, q), mult);
    }
    out.canonicalize();
    return out;
}

/** Minimal geometric intersection number of two multicurves. */
inline Int geometric_intersection(const S11Curve& c1, const S11Curve& c2) {
    Int total = 0;
    for (const auto& [s, m] : c1.slopes)
        for (const auto& [t, n] : c2.slopes) {
            Int cross = iabs(s.first * t.second - s.second * t.first);
            total += cross * Int(m) * Int(n);
        }
    // Boundary-parallel components are isotopic into a collar and meet nothing.
    return total;
}

// ---------------------------------------------------------------------------
// Cyclic R/L words and the conjugacy normal form of hyperbolic classes
// ---------------------------------------------------------------------------

using RLWord = std::vector<std::uint8_t>;  // 0 = R, 1 = L, one letter per split

inline Mat2 word_matrix(const RLWord& w) {
    Mat2 m = Mat2::identity();
    for (auto l : w) m = m * (l == 0 ? Mat2::R() : Mat2::L());
    return m;
}

inline RLWord rotate_word(const RLWord& w, std::size_t k) {
    RLWord out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[(i + k) % w.size()];
    return out;
}

/** Exchange R and L letters (conjugation by the swap matrix). */
inline RLWord swap_letters(const RLWord& w) {
    RLWord out(w);
    for (auto& l : out) l ^= 1;
    return out;
}

inline std::string word_string(const RLWord& w) {
    std::string s;
    for (auto l : w) s += (l == 0 ? 'R' : 'L');
    return s;
}

/** Minimal cyclic period of a word (divides its length). */
inline std::size_t cyclic_period(const RLWord& w) {
    for (std::size_t p = 1; p <= w.size(); ++p) {
        if (w.size() % p != 0) continue;
        bool ok = true;
        for (std::size_t i = 0; ok && i < w.size(); ++i) ok = w[i] == w[i % p];
        if (ok) return p;
    }
    return w.size();
}

/**
 * Normal form of a hyperbolic (|trace| > 2) element of SL(2,Z):
 *     matrix = sign * conj * word_matrix(cycle) * conj^{-1}
 * where cycle is a positive cyclic word in R, L equal to the primitive word
 * repeated k times, and conj has determinant +1.
 */
struct HyperbolicForm {
    int sign = 1;       // +1 if trace > 2, -1 if trace < -2
    RLWord cycle;       // R/L word of the positive-trace representative
    RLWord primitive;   // minimal cyclic period of `cycle`
    long k = 1;         // cycle = primitive^k
    Mat2 conj;          // determinant +1 conjugator
};

namespace detail {

/** One state of the continued fraction of (P + sqrt(D)) / Q. */
struct CFState {
    Int P, Q;
    bool operator<(const CFState& o) const {
        if (P != o.P) return P < o.P;
        return Q < o.Q;
    }
};

/** floor((P + sqrt(D))/Q) for non-square D > 0, Q != 0. */
inline Int cf_floor(const Int& P, const Int& D, const Int& Q) {
    Int s = isqrt(D);  // floor(sqrt(D)); D is not a square
    if (Q > 0) return floor_div(P + s, Q);
    // (P + sqrt(D))/Q = (-P - sqrt(D))/(-Q), and floor(-P - sqrt(D)) = -P - s - 1.
    return floor_div(-P - s - 1, -Q);
}

}  // namespace detail

inline HyperbolicForm hyperbolic_form(const Mat2& m_in) {
    Mat2 m = m_in;
    HyperbolicForm out;
    if (m.det() != 1) throw std::invalid_argument("hyperbolic_form: determinant must be 1");
    if (m.trace() < 0) {
        out.sign = -1;
        m = -m;
    }
    Int t = m.trace();
    if (t <= 2) throw std::invalid_argument("hyperbolic_form: not hyperbolic");
    // Attracting fixed point (a - d + sqrt(D)) / (2c) of the Moebius action.
    // A hyperbolic integer matrix always has c != 0.
    Int D = t * t - 4;
    Int P = m.a - m.d, Q = 2 * m.c;

    // Continued fraction digits with convergent matrices; detect the cycle of
    // (P, Q) states, which is exactly the periodic tail of the expansion.
    std::map<detail::CFState, std::size_t> seen;
    std::vector<Int> digits;
    std::vector<Mat2> convergents;  // convergents[i] = C_{i-1}, so convergents[0] = I
    convergents.push_back(Mat2::identity());
    std::size_t start = 0, period = 0;
    for (std::size_t step = 0;; ++step) {
        detail::CFState st{P, Q};
        auto it = seen.find(st);
        if (it != seen.end()) {
            start = it->second;
            period = step - start;
            break;
        }
        seen.emplace(st, step);
        Int a = detail::cf_floor(P, D, Q);
        digits.push_back(a);
        Mat2 digit{a, 1, 1, 0};
        convergents.push_back(convergents.back() * digit);
        P = a * Q - P;
        Q = (D - P * P) / Q;
        if (Q == 0) throw std::logic_error("hyperbolic_form: rational fixed point");
    }
    // The conjugator must have determinant +1: shift the period start by one
    // if needed (any index in the periodic zone is a valid start).
    std::size_t start0 = start;
    if (start % 2 != 0) ++start;
    // Assemble the primitive automorph word from one period of digits
    // (doubled when the period length is odd, since R/L letters come in
    // alternating runs of two digits).
    std::size_t reps = (period % 2 == 0) ? 1 : 2;
    RLWord prim;
    for (std::size_t r = 0; r < reps; ++r)
        for (std::size_t i = 0; i < period; ++i) {
            Int a = digits[start0 + ((start - start0 + i) % period)];
            // safety: periodic-zone digits of a reduced quadratic irrational are >= 1
            if (a < 1) throw std::logic_error("hyperbolic_form: nonpositive cycle digit");
            std::uint8_t letter = ((r * period + i) % 2 == 0) ? 0 : 1;
            for (Int j = 0; j < a; ++j) prim.push_back(letter);
        }
    Mat2 G = convergents[start];
    Mat2 B = G.inverse() * m * G;
    Mat2 A0 = word_matrix(prim);
    // B is a positive power of the primitive automorph A0.
    Mat2 p = A0;
    long k = 1;
    while (p != B) {
        p = p * A0;
        ++k;
        if (k > 4096) throw std::logic_error("hyperbolic_form: power search failed");
    }
    out.k = k;
    out.conj = G;
    // The cycle might itself start mid-run; normalize primitive to its
    // lexicographically least rotation for a canonical encoding.
    std::size_t best = 0;
    for (std::size_t r = 1; r < prim.size(); ++r) {
        RLWord cand = rotate_word(prim, r);
        if (cand < rotate_word(prim, best)) best = r;
    }
    if (best != 0) {
        // Rotating the word conjugates the matrix by its letter prefix.
        Mat2 pre = word_matrix(RLWord(prim.begin(), prim.begin() + best));
        out.conj = out.conj * pre;
        prim = rotate_word(prim, best);
    }
    out.primitive = prim;
    out.cycle.clear();
    for (long r = 0; r < k; ++r) out.cycle.insert(out.cycle.end(), prim.begin(), prim.end());
    // Defensive verification of the defining identity.
    Mat2 rebuilt = out.conj * word_matrix(out.cycle) * out.conj.inverse();
    if (out.sign < 0) rebuilt = -rebuilt;
    if (rebuilt != m_in) throw std::logic_error("hyperbolic_form: reconstruction failed");
    return out;
}

// ---------------------------------------------------------------------------
// Classification data on the one-holed torus
// ---------------------------------------------------------------------------

enum class S11Type { Periodic, Reducible, PseudoAnosov };

/** Free-isotopy order of a finite-order element of SL(2,Z). */
inline long elliptic_order(const Mat2& m) {
    if (m.is_identity()) return 1;
    if ((-m).is_identity()) return 2;
    Int t = m.trace();
    if (t == 0) return 4;
    if (t == 1) return 6;
    if (t == -1) return 3;
    throw std::invalid_argument("elliptic_order: not finite order");
}

inline S11Type s11_type(const Mat2& m) {
    Int t = m.trace();
    if (t > 2 || t < -2) return S11Type::PseudoAnosov;
    if ((t == 2 && !m.is_identity()) || (t == -2 && !(-m).is_identity()))
        return S11Type::Reducible;
    return S11Type::Periodic;
}

/** Dilatation of a hyperbolic class: largest root of x^2 - |tr| x + 1. */
inline AlgebraicNumber s11_dilatation(const Mat2& m) {
    Int t = iabs(m.trace());
    if (t <= 2) throw std::invalid_argument("s11_dilatation: not pseudo-Anosov");
    ZPoly p(std::vector<Int>{Int(1), -t, Int(1)});
    return AlgebraicNumber(p, Rat(t) - 1, Rat(t));
}

/**
 * Invariant of a parabolic element: the fixed slope and the shear amount n,
 * i.e. the class is conjugate in SL(2,Z) to +/- [[1,n],[0,1]].
 */
struct ParabolicData {
    std::pair<Int, Int> slope;
    Int n;
    int sign;  // +1 for trace 2, -1 for trace -2
};

inline ParabolicData parabolic_data(const Mat2& m_in) {
    Mat2 m = m_in;
    ParabolicData out;
    out.sign = 1;
    if (m.trace() == -2) {
        out.sign = -1;
        m = -m;
    }
    if (m.trace() != 2 || m.is_identity())
        throw std::invalid_argument("parabolic_data: not parabolic");
    // Primitive fixed vector v of m (kernel of m - I).
    Int p, q;
    if (m.b != 0 || m.a != 1) {
        p = m.b;
        q = 1 - m.a;
    } else {
        p = 1 - m.d;
        q = m.c;
    }
    if (p == 0 && q == 0) {  // m - I has zero first row; use the second
        p = 1 - m.d;
        q = m.c;
    }
    Int g = boost::multiprecision::gcd(iabs(p),
                                       iabs(q));
    p /= g;
    q /= g;
    out.slope = S11Curve::normalize_slope(p, q);
    // Complete (p,q) to a determinant-1 basis B; then B^{-1} m B = [[1,n],[0,1]].
    Int x, y;  // p*y - q*x = 1
    {
        // extended gcd for p*y - q*x = 1
        Int a = p, b = -q;  // solve a*y + b*x' ... do a simple loop via gcdext
        Int s0 = 1, s1 = 0, t0 = 0, t1 = 1, r0 = a, r1 = b;
        while (r1 != 0) {
            Int qq = r0 / r1;
            Int r2 = r0 - qq * r1;
            Int s2 = s0 - qq * s1, t2 = t0 - qq * t1;
            r0 = r1; r1 = r2;
            s0 = s1; s1 = s2;
            t0 = t1; t1 = t2;
        }
        // r0 = gcd = a*s0 + b*t0 = +/-1
        if (r0 == 1) {
            y = s0;
            x = t0;
        } else {
            y = -s0;
            x = -t0;
        }
        // now p*y - q*x = 1
    }
    Mat2 B{p, x, q, y};
    Mat2 n = B.inverse() * m * B;
    out.n = n.b;
    return out;
}

/**
 * Homogenized Rademacher function on PSL(2,Z):
 *   hyperbolic: (#R - #L) letters of the cyclic word;
 *   parabolic class of +/- [[1,n],[0,1]]: n;
 *   elliptic and central: 0.
 * This is the unique homogeneous quasimorphism agreeing with the exponent
 * sum on twist words modulo 12 (see fdtc.hpp).
 */
inline Int rademacher(const Mat2& m) {
    S11Type t = s11_type(m);
    if (t == S11Type::Periodic) return 0;
    if (t == S11Type::Reducible) return parabolic_data(m).n;
    HyperbolicForm h = hyperbolic_form(m);
    Int r = 0;
    for (auto l : h.cycle) r += (l == 0 ? 1 : -1);
    return r;
}

}  // namespace monodromy
