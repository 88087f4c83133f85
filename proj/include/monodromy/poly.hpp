/**
 * Dense univariate polynomials with exact integer / rational coefficients.
 *
 * Coefficients use boost::multiprecision so that no intermediate result can
 * overflow.  Polynomials are stored low-degree first; the invariant is that
 * the leading coefficient (last entry) is nonzero, with the zero polynomial
 * represented by an empty coefficient vector.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace monodromy {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }
/** n/d with sign normalized into the numerator (boost rejects d < 0). */
inline Rat make_rat(Int n, Int d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Rat(n, d);
}
/** abs returning a plain Int (avoids expression-template pitfalls). */
inline Int iabs(const Int& x) { return x < 0 ? Int(-x) : x; }
/** floor(sqrt(x)) for x >= 0. */
inline Int isqrt(const Int& x) { return boost::multiprecision::sqrt(x); }

/** Polynomial in Z[t], low-degree-first coefficients. */
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    ZPoly(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static ZPoly zero() { return ZPoly(); }
    static ZPoly one() { return ZPoly({1}); }
    /** The monomial a * t^k. */
    static ZPoly monomial(Int a, std::size_t k) {
        std::vector<Int> c(k + 1, Int(0));
        c[k] = std::move(a);
        return ZPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    /** Degree; -1 for the zero polynomial. */
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
    const Int& leading() const { return c_.back(); }

    bool operator==(const ZPoly& o) const { return c_ == o.c_; }
    bool operator!=(const ZPoly& o) const { return c_ != o.c_; }

    ZPoly operator-() const {
        std::vector<Int> c(c_);
        for (auto& v : c) v = -v;
        return ZPoly(std::move(c));
    }

    ZPoly operator+(const ZPoly& o) const {
        std::vector<Int> c(std::max(c_.size(), o.c_.size()), Int(0));
        for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
        return ZPoly(std::move(c));
    }
    ZPoly operator-(const ZPoly& o) const { return *this + (-o); }

    ZPoly operator*(const ZPoly& o) const {
        if (is_zero() || o.is_zero()) return ZPoly();
        std::vector<Int> c(c_.size() + o.c_.size() - 1, Int(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                c[i + j] += c_[i] * o.c_[j];
        return ZPoly(std::move(c));
    }

    ZPoly operator*(const Int& s) const {
        if (s == 0) return ZPoly();
        std::vector<Int> c(c_);
        for (auto& v : c) v *= s;
        return ZPoly(std::move(c));
    }

    /** Exact evaluation at a rational point (Horner). */
    Rat eval(const Rat& x) const {
        Rat acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it);
        return acc;
    }

    /** Sign of the value at a rational point: -1, 0, or +1. */
    int sign_at(const Rat& x) const {
        Rat v = eval(x);
        if (v == 0) return 0;
        return v > 0 ? 1 : -1;
    }

    ZPoly derivative() const {
        if (c_.size() <= 1) return ZPoly();
        std::vector<Int> c(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Int(i);
        return ZPoly(std::move(c));
    }

    /** Substitute t -> t^k. */
    ZPoly compose_power(std::size_t k) const {
        if (is_zero()) return ZPoly();
        std::vector<Int> c(static_cast<std::size_t>(degree()) * k + 1, Int(0));
        for (std::size_t i = 0; i < c_.size(); ++i) c[i * k] = c_[i];
        return ZPoly(std::move(c));
    }

    /** Substitute t -> -t. */
    ZPoly compose_neg() const {
        std::vector<Int> c(c_);
        for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
        return ZPoly(std::move(c));
    }

    /** Reverse the coefficient list: t^deg * p(1/t). */
    ZPoly reversed() const {
        std::vector<Int> c(c_.rbegin(), c_.rend());
        return ZPoly(std::move(c));
    }

    /** GCD of the coefficients (0 for the zero polynomial). */
    Int content() const {
        Int g = 0;
        for (const auto& v : c_) g = boost::multiprecision::gcd(g, v);
        return g;
    }

    /** Divide out the content and normalize the leading coefficient to be positive. */
    ZPoly primitive() const {
        if (is_zero()) return ZPoly();
        Int g = content();
        if (leading() < 0) g = -g;
        std::vector<Int> c(c_);
        for (auto& v : c) v /= g;
        return ZPoly(std::move(c));
    }

    /**
     * Exact division; throws if the division is not exact.
     * Used when splitting off known factors.
     */
    ZPoly divide_exact(const ZPoly& d) const {
        if (d.is_zero()) throw std::invalid_argument("ZPoly: division by zero");
        ZPoly rem = *this;
        std::vector<Int> q(degree() >= d.degree() ? degree() - d.degree() + 1 : 0, Int(0));
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            if (rem.leading() % d.leading() != 0)
                throw std::invalid_argument("ZPoly: division not exact");
            Int f = rem.leading() / d.leading();
            std::size_t shift = rem.degree() - d.degree();
            q[shift] = f;
            rem = rem - d * ZPoly::monomial(f, shift);
        }
        if (!rem.is_zero()) throw std::invalid_argument("ZPoly: division not exact");
        return ZPoly(std::move(q));
    }

    /** True if d divides this polynomial exactly over Q (tested over Z after scaling). */
    bool divisible_by(const ZPoly& d) const;

    std::string to_string(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const Int& a = c_[i];
            if (a == 0) continue;
            if (!first) os << (a > 0 ? " + " : " - ");
            else if (a < 0) os << "-";
            Int mag = iabs(a);
            if (mag != 1 || i == 0) os << mag.str();
            if (i > 0) {
                if (mag != 1) os << "*";
                os << var;
                if (i > 1) os << "^" << i;
            }
            first = false;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_;
};

/** Polynomial in Q[t]; thin layer used for remainder sequences. */
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rat> c) : c_(std::move(c)) { trim(); }
    explicit QPoly(const ZPoly& p) {
        for (const auto& a : p.coeffs()) c_.emplace_back(a);
        trim();
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& leading() const { return c_.back(); }

    QPoly operator-(const QPoly& o) const {
        std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
        for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
        return QPoly(std::move(c));
    }

    QPoly operator*(const Rat& s) const {
        std::vector<Rat> c(c_);
        for (auto& v : c) v *= s;
        return QPoly(std::move(c));
    }

    /** Polynomial remainder of *this by d. */
    QPoly rem(const QPoly& d) const {
        QPoly r = *this;
        while (!r.is_zero() && r.degree() >= d.degree()) {
            Rat f = r.leading() / d.leading();
            std::size_t shift = r.degree() - d.degree();
            std::vector<Rat> sub(shift + d.c_.size(), Rat(0));
            for (std::size_t i = 0; i < d.c_.size(); ++i) sub[i + shift] = d.c_[i] * f;
            r = r - QPoly(std::move(sub));
        }
        return r;
    }

    Rat eval(const Rat& x) const {
        Rat acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /** Clear denominators and return a primitive integer polynomial. */
    ZPoly to_primitive_z() const {
        Int lcm = 1;
        for (const auto& r : c_) {
            Int d = rat_den(r);
            lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
        }
        std::vector<Int> c;
        c.reserve(c_.size());
        for (const auto& r : c_) c.push_back(rat_num(r) * (lcm / rat_den(r)));
        return ZPoly(std::move(c)).primitive();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

inline bool ZPoly::divisible_by(const ZPoly& d) const {
    if (d.is_zero()) return is_zero();
    QPoly r = QPoly(*this).rem(QPoly(d));
    return r.is_zero();
}

/** GCD in Q[t], returned as a primitive polynomial in Z[t]. */
inline ZPoly poly_gcd(const ZPoly& a, const ZPoly& b) {
    QPoly x(a), y(b);
    while (!y.is_zero()) {
        QPoly r = x.rem(y);
        x = y;
        y = r;
    }
    if (x.is_zero()) return ZPoly();
    return x.to_primitive_z();
}

/** Squarefree part: p / gcd(p, p'). */
inline ZPoly squarefree_part(const ZPoly& p) {
    if (p.degree() <= 0) return p.primitive();
    ZPoly g = poly_gcd(p, p.derivative());
    if (g.degree() <= 0) return p.primitive();
    // Divide over Q, then renormalize.
    QPoly q(p), d(g);
    std::vector<Rat> quot(p.degree() - g.degree() + 1, Rat(0));
    QPoly r = q;
    while (!r.is_zero() && r.degree() >= d.degree()) {
        Rat f = r.leading() / d.leading();
        std::size_t shift = r.degree() - d.degree();
        quot[shift] = f;
        std::vector<Rat> sub(shift + d.coeffs().size(), Rat(0));
        for (std::size_t i = 0; i < d.coeffs().size(); ++i) sub[i + shift] = d.coeffs()[i] * f;
        r = r - QPoly(std::move(sub));
    }
    return QPoly(std::move(quot)).to_primitive_z();
}

}  // namespace monodromy
