/**
 * Exact real algebraic numbers.
 *
 * A real algebraic number is stored as a primitive squarefree integer
 * polynomial together with a rational isolating interval (lo, hi] that
 * contains exactly one real root of the polynomial.  All comparisons are
 * exact: intervals are refined by bisection (guided by Sturm counts) until
 * a decision can be made, and equality falls back to a gcd computation.
 */
#pragma once

#include "monodromy/poly.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace monodromy {

/** Sturm chain of a squarefree polynomial. */
class SturmChain {
public:
    explicit SturmChain(const ZPoly& p) {
        QPoly a(p), b(p.derivative());
        seq_.push_back(a);
        while (!b.is_zero()) {
            QPoly r = a.rem(b) * Rat(-1);
            seq_.push_back(b);
            a = b;
            b = r;
        }
    }

    /** Number of sign changes of the chain evaluated at x. */
    int variations(const Rat& x) const {
        int count = 0, prev = 0;
        for (const auto& p : seq_) {
            Rat v = p.eval(x);
            int s = v == 0 ? 0 : (v > 0 ? 1 : -1);
            if (s != 0) {
                if (prev != 0 && s != prev) ++count;
                prev = s;
            }
        }
        return count;
    }

    /** Number of distinct real roots in (lo, hi]. */
    int count_roots(const Rat& lo, const Rat& hi) const {
        return variations(lo) - variations(hi);
    }

private:
    std::vector<QPoly> seq_;
};

/** Cauchy bound: all real roots of p lie in (-B, B). */
inline Rat root_bound(const ZPoly& p) {
    Int lead = iabs(p.leading());
    Int maxc = 0;
    for (const auto& c : p.coeffs()) maxc = std::max(maxc, iabs(c));
    return Rat(1) + Rat(maxc, lead);
}

/** Isolating intervals (lo, hi] for all real roots of a squarefree polynomial, ascending. */
inline std::vector<std::pair<Rat, Rat>> isolate_real_roots(const ZPoly& p) {
    std::vector<std::pair<Rat, Rat>> out;
    if (p.degree() <= 0) return out;
    SturmChain chain(p);
    Rat bound = root_bound(p);
    std::vector<std::pair<Rat, Rat>> stack{{-bound, bound}};
    std::vector<std::pair<Rat, Rat>> found;
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        int n = chain.count_roots(lo, hi);
        if (n == 0) continue;
        if (n == 1) {
            found.emplace_back(lo, hi);
            continue;
        }
        Rat mid = (lo + hi) / 2;
        stack.emplace_back(lo, mid);
        stack.emplace_back(mid, hi);
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.second <= b.first || a.first < b.first; });
    return found;
}

class AlgebraicNumber {
public:
    /** The rational number q. */
    static AlgebraicNumber rational(const Rat& q) {
        ZPoly p({0, 1});
        p = ZPoly(std::vector<Int>{-rat_num(q), rat_den(q)}).primitive();
        return AlgebraicNumber(p, q - 1, q, true);
    }
    static AlgebraicNumber integer(long n) { return rational(Rat(n)); }

    /**
     * The unique root of p in (lo, hi].  p need not be squarefree or
     * irreducible; it is reduced to the irreducible factor vanishing here.
     */
    AlgebraicNumber(const ZPoly& p, const Rat& lo, const Rat& hi, bool trusted_isolating = false) {
        ZPoly sf = squarefree_part(p);
        ZPoly mp = irreducible_factor_at(sf, lo, hi);
        poly_ = mp;
        lo_ = lo;
        hi_ = hi;
        SturmChain chain(poly_);
        int n = chain.count_roots(lo_, hi_);
        if (n != 1) {
            if (trusted_isolating && n >= 1) {
                // narrow below
            }
            if (n == 0) throw std::invalid_argument("AlgebraicNumber: no root in interval");
            // Narrow until the interval isolates a single root of the factor.
            while (chain.count_roots(lo_, hi_) > 1) {
                Rat mid = (lo_ + hi_) / 2;
                if (chain.count_roots(lo_, mid) >= 1) hi_ = mid;
                else lo_ = mid;
            }
        }
        normalize_rational();
    }

    const ZPoly& minpoly() const { return poly_; }
    Rat lower() const { return lo_; }
    Rat upper() const { return hi_; }
    int degree() const { return poly_.degree(); }
    bool is_rational() const { return poly_.degree() == 1; }

    /** Exact rational value (only valid when degree 1). */
    Rat rational_value() const {
        if (!is_rational()) throw std::logic_error("AlgebraicNumber: not rational");
        return Rat(-poly_.coeff(0), poly_.coeff(1));
    }

    /** Shrink the isolating interval until hi - lo <= eps. */
    void refine(const Rat& eps) const {
        SturmChain chain(poly_);
        while (hi_ - lo_ > eps) {
            Rat mid = (lo_ + hi_) / 2;
            if (chain.count_roots(lo_, mid) == 1) hi_ = mid;
            else lo_ = mid;
        }
    }

    double to_double() const {
        refine(Rat(1, Int(1) << 60));
        Rat mid = (lo_ + hi_) / 2;
        return static_cast<double>(rat_num(mid)) / static_cast<double>(rat_den(mid));
    }

    int sign() const {
        if (is_rational()) {
            Rat v = rational_value();
            return v == 0 ? 0 : (v > 0 ? 1 : -1);
        }
        refine_away_from_zero();
        return lo_ >= 0 ? 1 : -1;
    }

    /** Exact three-way comparison. */
    int compare(const AlgebraicNumber& other) const {
        if (is_rational() && other.is_rational()) {
            Rat a = rational_value(), b = other.rational_value();
            return a == b ? 0 : (a < b ? -1 : 1);
        }
        // Equality test: same minimal polynomial and overlapping isolating intervals.
        if (poly_ == other.poly_) {
            SturmChain chain(poly_);
            Rat lo = std::max(lo_, other.lo_), hi = std::min(hi_, other.hi_);
            if (lo < hi && chain.count_roots(lo, hi) == 1 &&
                chain.count_roots(lo_, hi_) == 1 && chain.count_roots(other.lo_, other.hi_) == 1) {
                // Both intervals isolate a root of the same polynomial; equal iff
                // they isolate the same root, which bisection below decides.
            }
        }
        for (;;) {
            if (hi_ <= other.lo_) {
                if (poly_ == other.poly_ && hi_ == other.lo_) {
                    // touching intervals: distinct roots since each interval is isolating
                }
                return -1;
            }
            if (other.hi_ <= lo_) return 1;
            // Overlapping: check equality via common factor.
            ZPoly g = poly_gcd(poly_, other.poly_);
            if (g.degree() >= 1) {
                SturmChain gc(g);
                Rat lo = std::max(lo_, other.lo_), hi = std::min(hi_, other.hi_);
                if (lo < hi && gc.count_roots(lo, hi) >= 1 &&
                    gc.count_roots(lo_, hi_) == 1 && gc.count_roots(other.lo_, other.hi_) == 1)
                    return 0;
            }
            refine(width() / 4);
            other.refine(other.width() / 4);
            if (poly_ == other.poly_ && lo_ == other.lo_ && hi_ == other.hi_) return 0;
        }
    }

    bool operator==(const AlgebraicNumber& o) const { return compare(o) == 0; }
    bool operator!=(const AlgebraicNumber& o) const { return compare(o) != 0; }
    bool operator<(const AlgebraicNumber& o) const { return compare(o) < 0; }
    bool operator<=(const AlgebraicNumber& o) const { return compare(o) <= 0; }
    bool operator>(const AlgebraicNumber& o) const { return compare(o) > 0; }
    bool operator>=(const AlgebraicNumber& o) const { return compare(o) >= 0; }

    /** k-th power, k >= 1, via resultant elimination. */
    AlgebraicNumber pow(unsigned k) const {
        if (k == 0) return integer(1);
        if (k == 1) return *this;
        if (is_rational()) {
            Rat v = rational_value(), acc = 1;
            for (unsigned i = 0; i < k; ++i) acc *= v;
            return rational(acc);
        }
        // alpha^k is a root of Res_y(p(y), x - y^k); equivalently of the
        // polynomial whose roots are k-th powers.  Compute via the resultant
        // of p(y) and y^k - x over y, using a Sylvester-style determinant is
        // heavy; instead use: q(x) = prod over roots of (x - r^k) has integer
        // coefficients obtainable from Newton identities.  For our small
        // degrees it is simpler and still exact to compute the minimal
        // polynomial by linear algebra in Q[alpha], done below.
        return from_power_basis(k);
    }

    /**
     * Square root of a positive algebraic number: the unique positive root of
     * p(x^2) in the square-rooted interval.
     */
    AlgebraicNumber sqrt() const {
        if (sign() < 0) throw std::domain_error("AlgebraicNumber: sqrt of negative");
        ZPoly q = poly_.compose_power(2);
        refine_away_from_zero();
        Rat lo = lo_ < 0 ? Rat(0) : lo_;
        // Rational bracket for sqrt: grow a dyadic interval around sqrt numerically,
        // then verify by sign/Sturm count.
        Rat slo = rational_sqrt_floor(lo);
        Rat shi = rational_sqrt_ceil(hi_);
        return AlgebraicNumber(q, slo, shi);
    }

    /**
     * m-th root of a positive algebraic number: the unique positive root of
     * p(x^m) in the m-th-rooted interval.
     */
    AlgebraicNumber nth_root(unsigned m) const {
        if (m == 0) throw std::domain_error("AlgebraicNumber: 0th root");
        if (m == 1) return *this;
        if (m == 2) return sqrt();
        if (sign() <= 0) throw std::domain_error("AlgebraicNumber: root of non-positive");
        refine_away_from_zero();
        ZPoly q = poly_.compose_power(m);
        Rat lo = lo_ < 0 ? Rat(0) : lo_;
        return AlgebraicNumber(q, rational_nth_root_floor(lo, m), rational_nth_root_ceil(hi_, m));
    }

    std::string to_string() const {
        return "root of " + poly_.to_string("x") + " in (" + rat_str(lo_) + ", " + rat_str(hi_) + "]";
    }

    static std::string rat_str(const Rat& r) {
        std::ostringstream os;
        os << rat_num(r).str();
        if (rat_den(r) != 1) os << "/" << rat_den(r).str();
        return os.str();
    }

private:
    AlgebraicNumber() = default;

    Rat width() const { return hi_ - lo_; }

    void refine_away_from_zero() const {
        if (poly_.coeff(0) == 0) return;  // zero is a root of minpoly only if x | p
        while (lo_ < 0 && hi_ > 0) refine(width() / 4);
    }

    void normalize_rational() {
        if (poly_.degree() == 1) {
            Rat v = Rat(-poly_.coeff(0), poly_.coeff(1));
            lo_ = v - 1;
            hi_ = v;
        }
    }

    /**
     * Best-effort irreducible factor of sf (squarefree, primitive) having a
     * root in (lo, hi]: strips linear factors via rational root search and
     * quadratic factors via bounded coefficient search (degrees here stay small).
     */
    static ZPoly irreducible_factor_at(const ZPoly& sf, const Rat& lo, const Rat& hi) {
        ZPoly p = sf.primitive();
        for (;;) {
            if (p.degree() <= 2) {
                if (p.degree() == 2) {
                    // Factor over Q iff discriminant is a perfect square.
                    ZPoly lin = quadratic_rational_root_factor(p);
                    if (!lin.is_zero()) {
                        ZPoly other = divide_q(p, lin);
                        return pick_factor_at({lin, other}, lo, hi);
                    }
                }
                return p;
            }
            bool split = false;
            // Linear factors a*x - b with a | lead, b | const term.
            ZPoly lin = find_linear_factor(p);
            if (!lin.is_zero()) {
                ZPoly rest = divide_q(p, lin);
                if (has_root_in(lin, lo, hi)) return lin;
                p = rest;
                split = true;
            }
            if (!split) {
                ZPoly quad = find_quadratic_factor(p);
                if (!quad.is_zero()) {
                    ZPoly rest = divide_q(p, quad);
                    if (has_root_in(quad, lo, hi)) return irreducible_factor_at(quad, lo, hi);
                    p = rest;
                    split = true;
                }
            }
            if (!split) return p;  // give up: treat as irreducible
        }
    }

    static bool has_root_in(const ZPoly& p, const Rat& lo, const Rat& hi) {
        SturmChain c(p);
        return c.count_roots(lo, hi) >= 1;
    }

    static ZPoly pick_factor_at(std::vector<ZPoly> fs, const Rat& lo, const Rat& hi) {
        for (const auto& f : fs)
            if (!f.is_zero() && has_root_in(f, lo, hi)) return f;
        return fs.front();
    }

    /** Quotient in Q[t] rescaled to a primitive polynomial in Z[t]. */
    static ZPoly divide_q(const ZPoly& p, const ZPoly& d) {
        QPoly r(p);
        QPoly dd(d);
        std::vector<Rat> quot(p.degree() - d.degree() + 1, Rat(0));
        while (!r.is_zero() && r.degree() >= dd.degree()) {
            Rat f = r.leading() / dd.leading();
            std::size_t shift = r.degree() - dd.degree();
            quot[shift] = f;
            std::vector<Rat> sub(shift + dd.coeffs().size(), Rat(0));
            for (std::size_t i = 0; i < dd.coeffs().size(); ++i) sub[i + shift] = dd.coeffs()[i] * f;
            r = r - QPoly(std::move(sub));
        }
        return QPoly(std::move(quot)).to_primitive_z();
    }

    /** A linear factor of p over Q (as primitive a*x - b), or zero if none found. */
    static ZPoly find_linear_factor(const ZPoly& p) {
        Int a0 = iabs(p.coeff(0));
        Int an = iabs(p.leading());
        if (a0 == 0) return ZPoly({0, 1});
        for (const Int& b : small_divisors(a0))
            for (const Int& a : small_divisors(an))
                for (int s : {1, -1}) {
                    Rat root(b * s, a);
                    if (p.eval(root) == 0)
                        return ZPoly(std::vector<Int>{-b * s, a}).primitive();
                }
        return ZPoly();
    }

    static ZPoly quadratic_rational_root_factor(const ZPoly& p) {
        // p = a x^2 + b x + c; rational root iff b^2 - 4ac is a perfect square.
        Int a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
        Int disc = b * b - 4 * a * c;
        if (disc < 0) return ZPoly();
        Int s = isqrt(disc);
        if (s * s != disc) return ZPoly();
        return ZPoly(std::vector<Int>{-(-b + s), 2 * a}).primitive();
    }

    /** A monic-over-Q quadratic factor found by bounded search, or zero. */
    static ZPoly find_quadratic_factor(const ZPoly& p) {
        // Only attempt when the polynomial is monic up to sign; our use cases
        // (characteristic and trace polynomials) always are.
        if (iabs(p.leading()) != 1) return ZPoly();
        long bound = 1;
        Int maxc = 0;
        for (const auto& v : p.coeffs()) maxc = std::max(maxc, iabs(v));
        // Landau-Mignotte style cushion, generous for the small degrees used here.
        while (Int(bound) < 2 * maxc + 2 && bound < 4096) bound *= 2;
        for (long b = -bound; b <= bound; ++b)
            for (long c = -bound; c <= bound; ++c) {
                if (c == 0) continue;
                ZPoly q({c, b, 1});
                if (p.divisible_by(q)) return q;
            }
        return ZPoly();
    }

    static std::vector<Int> small_divisors(const Int& n) {
        std::vector<Int> out;
        for (Int d = 1; d * d <= n; ++d) {
            if (n % d == 0) {
                out.push_back(d);
                out.push_back(n / d);
            }
        }
        return out;
    }

    /** Rational lower bound for sqrt(x), x >= 0. */
    static Rat rational_sqrt_floor(const Rat& x) {
        if (x <= 0) return 0;
        Int n = rat_num(x), d = rat_den(x);
        // floor(sqrt(n*d)) / d <= sqrt(n/d)
        Int s = isqrt(Int(n * d));
        return Rat(s, d);
    }
    /** Rational upper bound for sqrt(x). */
    static Rat rational_sqrt_ceil(const Rat& x) {
        if (x <= 0) return 0;
        Int n = rat_num(x), d = rat_den(x);
        Int s = isqrt(Int(n * d)) + 1;
        return Rat(s, d);
    }

    /** Integer m-th root: floor(x^(1/m)) for x >= 0. */
    static Int integer_nth_root(const Int& x, unsigned m) {
        if (x <= 1) return x;
        Int lo = 0, hi = x;
        while (lo < hi) {
            Int mid = (lo + hi + 1) / 2;
            Int p = 1;
            bool over = false;
            for (unsigned i = 0; i < m; ++i) {
                p *= mid;
                if (p > x) { over = true; break; }
            }
            if (over) hi = mid - 1;
            else lo = mid;
        }
        return lo;
    }

    /** Rational lower bound for x^(1/m), x >= 0. */
    static Rat rational_nth_root_floor(const Rat& x, unsigned m) {
        if (x <= 0) return 0;
        Int n = rat_num(x), d = rat_den(x);
        // floor((n * d^(m-1))^(1/m)) / d <= (n/d)^(1/m)
        Int scaled = n;
        for (unsigned i = 1; i < m; ++i) scaled *= d;
        return Rat(integer_nth_root(scaled, m), d);
    }
    /** Rational upper bound for x^(1/m). */
    static Rat rational_nth_root_ceil(const Rat& x, unsigned m) {
        if (x <= 0) return 0;
        Int n = rat_num(x), d = rat_den(x);
        Int scaled = n;
        for (unsigned i = 1; i < m; ++i) scaled *= d;
        return Rat(integer_nth_root(scaled, m) + 1, d);
    }

    /** Minimal polynomial of alpha^k by linear algebra over Q in the power basis. */
    AlgebraicNumber from_power_basis(unsigned k) const;

    ZPoly poly_;
    mutable Rat lo_, hi_;
};

namespace detail {
/** Reduce t^n modulo p (monic up to sign over Q) as a vector in the power basis. */
inline std::vector<Rat> power_mod(const ZPoly& p, const std::vector<Rat>& v) {
    // multiply v by t, then reduce by p
    int d = p.degree();
    std::vector<Rat> w(d, Rat(0));
    for (int i = 0; i < d - 1; ++i) w[i + 1] = v[i];
    Rat top = v[d - 1];
    if (top != 0) {
        Rat lead(p.leading());
        for (int i = 0; i < d; ++i) w[i] -= top * Rat(p.coeff(i)) / lead;
    }
    return w;
}
}  // namespace detail

inline AlgebraicNumber AlgebraicNumber::from_power_basis(unsigned k) const {
    int d = poly_.degree();
    // beta = alpha^k as a vector; compute 1, beta, beta^2, ..., beta^d and
    // find a linear dependency -> polynomial annihilating beta.
    std::vector<Rat> alpha_k(d, Rat(0));
    {
        std::vector<Rat> cur(d, Rat(0));
        cur[0] = 1;
        for (unsigned i = 0; i < k; ++i) cur = detail::power_mod(poly_, cur);
        alpha_k = cur;
    }
    // Multiplication by beta matrix: columns beta * alpha^j
    // Build powers of beta directly: beta^0 .. beta^d
    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> cur(d, Rat(0));
    cur[0] = 1;
    rows.push_back(cur);
    auto mul_elem = [&](const std::vector<Rat>& a, const std::vector<Rat>& b) {
        // multiply two elements of Q[alpha]
        std::vector<Rat> prod(2 * d - 1, Rat(0));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) prod[i + j] += a[i] * b[j];
        // reduce degree down to < d
        for (int i = 2 * d - 2; i >= d; --i) {
            Rat top = prod[i];
            if (top == 0) continue;
            Rat lead(poly_.leading());
            for (int j = 0; j < d; ++j) prod[i - d + j] -= top * Rat(poly_.coeff(j)) / lead;
            prod[i] = 0;
        }
        prod.resize(d);
        return prod;
    };
    for (int i = 1; i <= d; ++i) rows.push_back(mul_elem(rows.back(), alpha_k));
    // Solve for dependency: find minimal m with beta^m in span of lower powers.
    // Gaussian elimination, tracking combination coefficients.
    std::vector<std::vector<Rat>> basis;           // reduced vectors
    std::vector<std::vector<Rat>> combo;           // expression of each reduced vector in rows
    for (std::size_t m = 0; m < rows.size(); ++m) {
        std::vector<Rat> v = rows[m];
        std::vector<Rat> c(rows.size(), Rat(0));
        c[m] = 1;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            // eliminate using pivot of basis[b]
            int piv = -1;
            for (int i = 0; i < d; ++i)
                if (basis[b][i] != 0) { piv = i; break; }
            if (piv < 0) continue;
            if (v[piv] == 0) continue;
            Rat f = v[piv] / basis[b][piv];
            for (int i = 0; i < d; ++i) v[i] -= f * basis[b][i];
            for (std::size_t i = 0; i < c.size(); ++i) c[i] -= f * combo[b][i];
        }
        bool zero = true;
        for (int i = 0; i < d; ++i)
            if (v[i] != 0) { zero = false; break; }
        if (zero) {
            // dependency: sum c[j] * beta^j = 0 -> annihilating polynomial
            std::vector<Rat> pc(m + 1);
            for (std::size_t j = 0; j <= m; ++j) pc[j] = c[j];
            ZPoly ann = QPoly(std::move(pc)).to_primitive_z();
            // isolate correct root: bracket beta numerically via interval powers
            refine(Rat(1, Int(1) << 40));
            Rat blo = 1, bhi = 1;
            Rat alo = lo_ < 0 && hi_ > 0 ? Rat(0) : lo_;
            for (unsigned i = 0; i < k; ++i) {
                Rat nl = std::min(std::min(blo * lo_, blo * hi_), std::min(bhi * lo_, bhi * hi_));
                Rat nh = std::max(std::max(blo * lo_, blo * hi_), std::max(bhi * lo_, bhi * hi_));
                blo = nl;
                bhi = nh;
            }
            return AlgebraicNumber(ann, blo - Rat(1, 1000000), bhi + Rat(1, 1000000));
        }
        basis.push_back(v);
        combo.push_back(c);
    }
    throw std::logic_error("AlgebraicNumber::pow: no dependency found");
}

}  // namespace monodromy
