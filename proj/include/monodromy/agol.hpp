/**
 * Periodic splitting cycles of pseudo-Anosov classes on the one-holed torus,
 * with exact eigenmeasures, square roots, involutions, conjugators and
 * centralizers.
 *
 * The combinatorial model: the conjugacy normal form of a hyperbolic matrix
 * is a positive cyclic word in R and L (see s11.hpp).  One letter is one
 * maximal split of the invariant train track; rotating the word steps the
 * splitting sequence, and the transverse measures are the entries of the
 * attracting eigenvector, which live in the real quadratic field Q(lambda).
 */
#pragma once

#include "monodromy/fdtc.hpp"
#include "monodromy/s11.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace monodromy {

// ---------------------------------------------------------------------------
// Arithmetic in Q(lambda), lambda^2 = t*lambda - 1
// ---------------------------------------------------------------------------

/** Element x + y*lambda of the quadratic field of a dilatation. */
struct QuadElem {
    Rat x, y;
    Int t;  // trace: lambda^2 = t*lambda - 1

    static QuadElem of(Rat v, const Int& t) { return {std::move(v), Rat(0), t}; }
    static QuadElem lambda(const Int& t) { return {Rat(0), Rat(1), t}; }

    QuadElem operator+(const QuadElem& o) const { return {x + o.x, y + o.y, t}; }
    QuadElem operator-(const QuadElem& o) const { return {x - o.x, y - o.y, t}; }
    QuadElem operator*(const QuadElem& o) const {
        // (x + y L)(x' + y' L) = xx' + (xy' + yx') L + yy' (tL - 1)
        return {x * o.x - y * o.y, x * o.y + y * o.x + Rat(t) * y * o.y, t};
    }
    QuadElem scale(const Rat& s) const { return {x * s, y * s, t}; }
    bool operator==(const QuadElem& o) const { return x == o.x && y == o.y; }

    /** Exact sign, deciding rational comparisons against lambda when needed. */
    int sign(const AlgebraicNumber& lam) const {
        if (y == 0) return x == 0 ? 0 : (x > 0 ? 1 : -1);
        // sign(x + y*lam) = sign(y) * sign(lam - (-x/y))
        AlgebraicNumber thresh = AlgebraicNumber::rational(-x / y);
        int cmp = lam.compare(thresh);
        int sy = y > 0 ? 1 : -1;
        return sy * cmp;
    }
};

// ---------------------------------------------------------------------------
// Stable splitting cycle with exact measures
// ---------------------------------------------------------------------------

/**
 * The periodic splitting cycle of a pseudo-Anosov torus class.  states[m] is
 * the measure pair after m splits: the attracting eigenvector of the m-th
 * rotation of the cycle word, with entries in Q(lambda).  The defining
 * identities, verified on construction:
 *   states[m+1] = letter(m)^{-1} * states[m],
 *   after a full period the vector returns scaled by lambda^{-1}.
 */
struct AgolCycle {
    int sign = 1;
    RLWord cycle;      // one period (primitive^k)
    RLWord primitive;
    long k = 1;
    Mat2 conj;
    AlgebraicNumber lambda;
    std::vector<std::array<QuadElem, 2>> states;  // size cycle.size()
};

inline AgolCycle agol_cycle(const Mat2& m) {
    HyperbolicForm f = hyperbolic_form(m);
    AgolCycle out{f.sign, f.cycle, f.primitive, f.k, f.conj, s11_dilatation(m), {}};
    Mat2 w = word_matrix(f.cycle);
    Int t = w.trace();
    // Attracting eigenvector (b, lambda - a) of the positive-trace word.
    QuadElem lam = QuadElem::lambda(t);
    std::array<QuadElem, 2> v{QuadElem::of(Rat(w.b), t),
                              lam - QuadElem::of(Rat(w.a), t)};
    out.states.push_back(v);
    for (std::size_t i = 0; i < f.cycle.size(); ++i) {
        // Apply the inverse of the leading letter: R^{-1} (x,y) = (x - y, y),
        // L^{-1} (x,y) = (x, y - x).
        auto cur = out.states.back();
        std::array<QuadElem, 2> nxt = cur;
        if (f.cycle[i] == 0) nxt[0] = cur[0] - cur[1];
        else nxt[1] = cur[1] - cur[0];
        out.states.push_back(nxt);
    }
    // Verify positivity of every measure and the full-period eigenvalue law.
    for (std::size_t i = 0; i < f.cycle.size(); ++i)
        for (const auto& c : out.states[i])
            if (c.sign(out.lambda) <= 0)
                throw std::logic_error("agol_cycle: non-positive measure");
    QuadElem inv_lam = QuadElem::of(Rat(t), t) - lam;  // lambda^{-1} = t - lambda
    for (int j = 0; j < 2; ++j)
        if (!(out.states.back()[j] == out.states.front()[j] * inv_lam))
            throw std::logic_error("agol_cycle: period law failed");
    out.states.pop_back();  // keep one period
    return out;
}

// ---------------------------------------------------------------------------
// Writing a matrix as a twist word (exponent-sum bookkeeping)
// ---------------------------------------------------------------------------

/**
 * A decomposition of a determinant-one matrix as a product of powers of
 * R = Ta and L = Tb^{-1}, possibly times -I (which carries exponent sum 6,
 * being the cube of the matrix of Ta Tb).  `esum` is the exponent sum of the
 * corresponding twist word, well defined mod 12 for the matrix alone.
 */
struct WordDecomp {
    std::vector<std::pair<char, long>> factors;  // ('R', n) or ('L', n)
    bool negated = false;
    long esum = 0;
};

inline WordDecomp word_decomp(const Mat2& m_in) {
    if (m_in.det() != 1) throw std::invalid_argument("word_decomp: determinant must be 1");
    WordDecomp out;
    Mat2 m = m_in;
    auto emit_r = [&](const Int& q) {
        out.factors.emplace_back('R', static_cast<long>(q));
        out.esum += static_cast<long>(q);
        m = Mat2::R(-static_cast<long>(q)) * m;
    };
    auto emit_l = [&](const Int& q) {
        out.factors.emplace_back('L', static_cast<long>(q));
        out.esum -= static_cast<long>(q);
        m = Mat2::L(-static_cast<long>(q)) * m;
    };
    // Euclid on the first column: peel R^q / L^q from the left until the
    // lower-left entry vanishes.
    for (int guard = 0; m.c != 0; ++guard) {
        if (guard > 4096) throw std::logic_error("word_decomp: reduction failed");
        if (m.a == 0) {
            // det forces c = +/-1; one R-step makes a = 1.
            emit_r(-m.c);
        } else if (m.c % m.a == 0) {
            // (det forces |a| = 1 here) one L-step finishes the column.
            emit_l(floor_div(m.c, m.a));
        } else if (iabs(m.a) >= iabs(m.c)) {
            emit_r(floor_div(m.a, m.c));  // new a = a mod c in [0, |c|)
        } else {
            emit_l(floor_div(m.c, m.a));  // new c = c mod a in [0, |a|)
        }
    }
    // Now m is upper triangular with diagonal (1,1) or (-1,-1).
    if (m.a == -1) {
        out.negated = true;
        out.esum += 6;
        m = -m;
    }
    if (m.b != 0) {
        out.factors.emplace_back('R', static_cast<long>(m.b));
        out.esum += static_cast<long>(m.b);
    }
    return out;
}

/** Rebuild the matrix of a decomposition (consistency check helper). */
inline Mat2 word_decomp_matrix(const WordDecomp& d) {
    Mat2 m = Mat2::identity();
    for (auto [g, n] : d.factors) m = m * (g == 'R' ? Mat2::R(n) : Mat2::L(n));
    if (d.negated) m = -m;
    return m;
}

/** Exponent sum mod 12 of any twist word representing the matrix. */
inline long esum_mod12(const Mat2& m) {
    WordDecomp d = word_decomp(m);
    if (word_decomp_matrix(d) != m) throw std::logic_error("esum_mod12: decomposition failed");
    return detail::mod_positive(d.esum, 12);
}

// ---------------------------------------------------------------------------
// Square roots
// ---------------------------------------------------------------------------

/**
 * All orientation-preserving rel-boundary square roots of a class.  A matrix
 * root of M with det 1 lies in Q[M], forcing X = +/-(M + I)/s with
 * s^2 = tr M + 2; the exponent sum of a root must be e/2 and must be
 * realizable for its matrix (exponent sums of words with a fixed matrix are
 * determined mod 12).
 */
inline std::vector<S11Class> square_roots(const S11Class& f) {
    std::vector<S11Class> out;
    if (f.e % 2 != 0) return out;
    long ex = f.e / 2;
    Int t2 = f.m.trace() + 2;
    if (t2 < 0) return out;
    Int s = isqrt(t2);
    if (s * s != t2 || s == 0) return out;
    if ((f.m.a + 1) % s != 0 || f.m.b % s != 0 || f.m.c % s != 0 || (f.m.d + 1) % s != 0)
        return out;
    Mat2 base{(f.m.a + 1) / s, f.m.b / s, f.m.c / s, (f.m.d + 1) / s};
    for (const Mat2& x : {base, -base}) {
        if (x * x != f.m) continue;
        if (detail::mod_positive(ex, 12) != esum_mod12(x)) continue;
        out.push_back({x, ex});
    }
    return out;
}

/**
 * Word-route square root of a hyperbolic positive-trace matrix: a root
 * exists iff the cyclic R/L word is a doubled word (some rotation equals
 * u*u), and then the root is the conjugated matrix of u.  Used as an
 * independent cross-check of `square_roots`.
 */
inline std::optional<Mat2> square_root_by_word(const Mat2& m) {
    if (m.trace() <= 2) return std::nullopt;
    HyperbolicForm f = hyperbolic_form(m);
    std::size_t n = f.cycle.size();
    if (n % 2 != 0) return std::nullopt;
    for (std::size_t r = 0; r < n; ++r) {
        RLWord w = rotate_word(f.cycle, r);
        bool ok = true;
        for (std::size_t i = 0; ok && i < n / 2; ++i) ok = w[i] == w[i + n / 2];
        if (!ok) continue;
        Mat2 pre = word_matrix(RLWord(f.cycle.begin(), f.cycle.begin() + r));
        Mat2 u = word_matrix(RLWord(w.begin(), w.begin() + n / 2));
        Mat2 g = f.conj * pre;
        return g * u * g.inverse();
    }
    return std::nullopt;
}

/**
 * Free orientation-reversing square root: a determinant -1 matrix Y with
 * Y^2 = M.  Matrix route: Y in Q[M] forces Y = +/-(M - I)/u, u^2 = tr M - 2.
 * Word route (cross-check): Y exists iff some rotation of the cycle word is
 * u * sigma(u) with sigma exchanging R and L.
 */
inline std::optional<Mat2> orientation_reversing_root(const Mat2& m) {
    Int u2 = m.trace() - 2;
    if (u2 <= 0) return std::nullopt;
    Int u = isqrt(u2);
    if (u * u != u2) return std::nullopt;
    if (m.b % u != 0 || m.c % u != 0 || (m.a - 1) % u != 0 || (m.d - 1) % u != 0)
        return std::nullopt;
    Mat2 y{(m.a - 1) / u, m.b / u, m.c / u, (m.d - 1) / u};
    if (y * y != m || y.det() != -1) return std::nullopt;
    return y;
}

/** Word route for the orientation-reversing root (verification twin). */
inline std::optional<Mat2> orientation_reversing_root_by_word(const Mat2& m) {
    if (m.trace() <= 2) return std::nullopt;
    HyperbolicForm f = hyperbolic_form(m);
    if (f.sign < 0) return std::nullopt;
    std::size_t n = f.cycle.size();
    if (n % 2 != 0) return std::nullopt;
    for (std::size_t r = 0; r < n; ++r) {
        RLWord w = rotate_word(f.cycle, r);
        RLWord head(w.begin(), w.begin() + n / 2);
        RLWord tail(w.begin() + n / 2, w.end());
        if (swap_letters(head) != tail) continue;
        Mat2 pre = word_matrix(RLWord(f.cycle.begin(), f.cycle.begin() + r));
        Mat2 g = f.conj * pre;
        // Y = g * (U * sigma) * g^{-1}, sigma the swap; then
        // Y^2 = g * U * sigma(U) * g^{-1} = m.
        Mat2 y = g * (word_matrix(head) * Mat2::swap()) * g.inverse();
        if (y * y == m && y.det() == -1) return y;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Involutions, conjugators, centralizers
// ---------------------------------------------------------------------------

/**
 * Free mapping classes of order <= 2 commuting with a pseudo-Anosov class.
 * Orientation-preserving: only +/-I (the hyperelliptic involution commutes
 * with everything).  Orientation-reversing: none -- such an involution lies
 * in Q[M], and det(aI + bM) = -1 forces b^2 (tr^2 - 4) = 4, impossible for
 * |tr| > 2.  A bounded brute-force check of this argument lives in the tests.
 */
inline std::vector<Mat2> commuting_involutions(const Mat2& m) {
    if (s11_type(m) != S11Type::PseudoAnosov)
        throw std::invalid_argument("commuting_involutions: expects pseudo-Anosov");
    return {Mat2::identity(), -Mat2::identity()};
}

/** A conjugator found between two classes. */
struct Conjugator {
    Mat2 h;
    bool orientation_reversing = false;
};

/**
 * Find h with h f h^{-1} = g among free torus classes, optionally allowing
 * orientation-reversing h.  For rel-boundary classes conjugation preserves
 * the exponent sum, so callers should require equal e separately.
 */
inline std::optional<Conjugator> pa_conjugator(const Mat2& f, const Mat2& g,
                                               bool allow_reversing = true) {
    if (s11_type(f) != S11Type::PseudoAnosov || s11_type(g) != S11Type::PseudoAnosov)
        throw std::invalid_argument("pa_conjugator: expects pseudo-Anosov classes");
    HyperbolicForm ff = hyperbolic_form(f);
    HyperbolicForm fg = hyperbolic_form(g);
    auto match = [&](const HyperbolicForm& a, const HyperbolicForm& b)
        -> std::optional<Mat2> {
        if (a.sign != b.sign || a.k != b.k || a.primitive.size() != b.primitive.size())
            return std::nullopt;
        for (std::size_t r = 0; r < a.primitive.size(); ++r) {
            if (rotate_word(a.primitive, r) != b.primitive) continue;
            Mat2 pre = word_matrix(RLWord(a.primitive.begin(), a.primitive.begin() + r));
            // b.conj * W_b * b.conj^{-1} = g and W_b = pre^{-1} W_a pre
            return b.conj * pre.inverse() * a.conj.inverse();
        }
        return std::nullopt;
    };
    if (auto h = match(ff, fg)) {
        Mat2 hh = *h;
        if (hh * f * hh.inverse() != g) throw std::logic_error("pa_conjugator: bad conjugator");
        return Conjugator{hh, false};
    }
    if (allow_reversing) {
        // Conjugating by the swap exchanges R and L letters; compare the
        // normal form of sigma f sigma^{-1} against g.
        Mat2 fc = Mat2::swap() * f * Mat2::swap();
        HyperbolicForm ff2 = hyperbolic_form(fc);
        if (auto h = match(ff2, fg)) {
            Mat2 hh = *h * Mat2::swap();
            if (hh * f * hh.inverse() != g || hh.det() != -1)
                throw std::logic_error("pa_conjugator: bad reversing conjugator");
            return Conjugator{hh, true};
        }
    }
    return std::nullopt;
}

/**
 * Generators of the centralizer of a pseudo-Anosov free class: the primitive
 * automorph conj * W(primitive) * conj^{-1} and the hyperelliptic -I.
 */
inline std::vector<Mat2> pa_centralizer_generators(const Mat2& m) {
    HyperbolicForm f = hyperbolic_form(m);
    Mat2 prim = f.conj * word_matrix(f.primitive) * f.conj.inverse();
    return {prim, -Mat2::identity()};
}

}  // namespace monodromy
