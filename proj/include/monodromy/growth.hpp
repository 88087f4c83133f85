/**
 * Empirical growth-rate estimation for free-group endomorphisms.
 *
 * The growth rate of an endomorphism A is sup_g limsup (1/n) log l(A^n(g)),
 * where l is cyclically-reduced word length.  Iterated images grow
 * exponentially, so words are kept in a compressed form that stores the exact
 * reduced length together with bounded prefix/suffix letter buffers; these
 * buffers suffice to perform free and cyclic reduction exactly as long as no
 * single concatenation cancels more letters than the buffer holds.
 */
#pragma once

#include "monodromy/poly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace monodromy {

/** Letters are nonzero integers: +k is the k-th generator, -k its inverse. */
using Letter = int;
using WordVec = std::vector<Letter>;

/** Freely reduce an explicit word. */
inline WordVec reduce_word(const WordVec& w) {
    WordVec out;
    for (Letter x : w) {
        if (x == 0) throw std::invalid_argument("reduce_word: zero letter");
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

inline WordVec inverse_word(const WordVec& w) {
    WordVec out(w.rbegin(), w.rend());
    for (Letter& x : out) x = -x;
    return out;
}

/** Cyclically reduce an explicit reduced word. */
inline WordVec cyclic_reduce_word(WordVec w) {
    w = reduce_word(w);
    while (w.size() >= 2 && w.front() == -w.back()) {
        w.erase(w.begin());
        w.pop_back();
    }
    return w;
}

struct FreeGroupEndo {
    int rank = 0;
    std::vector<WordVec> images;  // images[i] is the image of generator i+1

    void validate() const {
        if (rank < 1) throw std::invalid_argument("FreeGroupEndo: rank must be positive");
        if (static_cast<int>(images.size()) != rank)
            throw std::invalid_argument("FreeGroupEndo: one image per generator required");
        for (const WordVec& w : images) {
            if (reduce_word(w) != w)
                throw std::invalid_argument("FreeGroupEndo: images must be freely reduced");
            for (Letter x : w)
                if (x == 0 || std::abs(x) > rank)
                    throw std::invalid_argument("FreeGroupEndo: letter out of range");
        }
    }

    static FreeGroupEndo identity(int rank) {
        FreeGroupEndo e;
        e.rank = rank;
        for (int i = 1; i <= rank; ++i) e.images.push_back({i});
        return e;
    }

    /** Image of an explicit word (freely reduced). */
    WordVec apply(const WordVec& w) const {
        WordVec out;
        for (Letter x : w) {
            const WordVec& im = images[std::abs(x) - 1];
            if (x > 0)
                out.insert(out.end(), im.begin(), im.end());
            else {
                WordVec inv = inverse_word(im);
                out.insert(out.end(), inv.begin(), inv.end());
            }
        }
        return reduce_word(out);
    }

    FreeGroupEndo compose(const FreeGroupEndo& inner) const {
        if (rank != inner.rank) throw std::invalid_argument("compose: rank mismatch");
        FreeGroupEndo out;
        out.rank = rank;
        for (const WordVec& w : inner.images) out.images.push_back(apply(w));
        return out;
    }

    /** Twisted endomorphism x -> w e(x) w^-1. */
    FreeGroupEndo conjugate(const WordVec& w) const {
        FreeGroupEndo out;
        out.rank = rank;
        WordVec wi = inverse_word(w);
        for (const WordVec& im : images) {
            WordVec t = w;
            t.insert(t.end(), im.begin(), im.end());
            t.insert(t.end(), wi.begin(), wi.end());
            out.images.push_back(reduce_word(t));
        }
        return out;
    }
};

namespace detail {

/** Buffer size for the compressed-word prefix/suffix windows. */
constexpr std::size_t kGrowthBuffer = 8192;

/**
 * A freely reduced word stored as its exact length plus the first and last
 * min(len, kGrowthBuffer) letters.  Words of length at most 2*kGrowthBuffer
 * are fully reconstructible from the two buffers.
 */
struct CompressedWord {
    Int len = 0;
    WordVec pre, suf;

    static CompressedWord from(const WordVec& reduced) {
        CompressedWord w;
        w.len = Int(reduced.size());
        std::size_t k = std::min(reduced.size(), kGrowthBuffer);
        w.pre.assign(reduced.begin(), reduced.begin() + k);
        w.suf.assign(reduced.end() - k, reduced.end());
        return w;
    }

    bool fully_known() const { return len <= Int(2 * kGrowthBuffer); }

    /** Letter at position i; the position must lie in a known region. */
    Letter at(const Int& i) const {
        long idx = static_cast<long>(i);
        if (idx < static_cast<long>(pre.size())) return pre[idx];
        long from_suf = idx - (static_cast<long>(len) - static_cast<long>(suf.size()));
        if (from_suf < 0 || from_suf >= static_cast<long>(suf.size()))
            throw std::runtime_error("compressed word: letter outside the known buffers");
        return suf[from_suf];
    }

    WordVec materialize() const {
        if (!fully_known()) throw std::logic_error("materialize: word too long");
        WordVec out;
        long n = static_cast<long>(len);
        for (long i = 0; i < n; ++i) out.push_back(at(Int(i)));
        return out;
    }
};

inline CompressedWord concat(const CompressedWord& u, const CompressedWord& v) {
    // Cancellation between the end of u and the start of v.
    std::size_t cap = std::min(u.suf.size(), v.pre.size());
    std::size_t c = 0;
    while (c < cap && u.suf[u.suf.size() - 1 - c] == -v.pre[c]) ++c;
    if (c == cap && Int(u.suf.size()) < u.len && Int(v.pre.size()) < v.len)
        throw std::runtime_error("compressed word concatenation: cancellation exceeds buffer");
    Int len = u.len + v.len - Int(2 * c);
    if (len <= Int(2 * kGrowthBuffer)) {
        WordVec w = u.materialize();
        WordVec tail = v.materialize();
        w.insert(w.end(), tail.begin(), tail.end());
        return CompressedWord::from(reduce_word(w));
    }
    CompressedWord out;
    out.len = len;
    Int ulen = u.len - Int(c), vlen = v.len - Int(c);
    // Prefix: u's first letters, topped up from v when u is short.
    if (ulen >= Int(kGrowthBuffer)) {
        out.pre.assign(u.pre.begin(), u.pre.begin() + kGrowthBuffer);
    } else {
        for (Int i = 0; i < ulen; ++i) out.pre.push_back(u.at(i));
        for (Int i = Int(c); out.pre.size() < kGrowthBuffer && i < v.len; ++i)
            out.pre.push_back(v.at(i));
    }
    // Suffix symmetrically.
    if (vlen >= Int(kGrowthBuffer)) {
        out.suf.assign(v.suf.end() - kGrowthBuffer, v.suf.end());
    } else {
        WordVec rev;  // built back to front
        for (Int i = v.len - 1; i >= Int(c); --i) rev.push_back(v.at(i));
        for (Int i = u.len - Int(c) - 1; rev.size() < kGrowthBuffer && i >= 0; --i)
            rev.push_back(u.at(i));
        out.suf.assign(rev.rbegin(), rev.rend());
    }
    return out;
}

inline CompressedWord invert(const CompressedWord& w) {
    CompressedWord out;
    out.len = w.len;
    out.pre = inverse_word(w.suf);
    out.suf = inverse_word(w.pre);
    return out;
}

/** Exact cyclically-reduced length. */
inline Int cyclic_length(const CompressedWord& w) {
    if (w.fully_known()) return Int(cyclic_reduce_word(w.materialize()).size());
    std::size_t s = 0;
    std::size_t cap = std::min(w.pre.size(), w.suf.size());
    while (s < cap && w.pre[s] == -w.suf[w.suf.size() - 1 - s]) ++s;
    if (s == cap)
        throw std::runtime_error("cyclic reduction exceeds compressed-word buffer");
    return w.len - Int(2 * s);
}

/** Memoized images of single letters under iterates of an endomorphism. */
struct IterateTable {
    const FreeGroupEndo& e;
    std::map<std::pair<unsigned, Letter>, CompressedWord> memo;

    explicit IterateTable(const FreeGroupEndo& endo) : e(endo) {}

    const CompressedWord& get(unsigned n, Letter x) {
        auto key = std::make_pair(n, x);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        CompressedWord w;
        if (n == 0) {
            w = CompressedWord::from({x});
        } else if (x < 0) {
            w = invert(get(n, -x));
        } else {
            // e^n(x) = e^(n-1) applied letterwise to e(x).
            const WordVec& im = e.images[x - 1];
            w = CompressedWord::from({});
            for (Letter y : im) w = concat(w, get(n - 1, y));
        }
        return memo.emplace(key, std::move(w)).first->second;
    }
};

inline Rat rat_of_double(double x) {
    const long denom = 1000000000000L;
    return make_rat(Int(static_cast<long long>(std::llround(x * double(denom)))), Int(denom));
}

inline double log_of_int(const Int& n) {
    if (n <= 0) return 0.0;
    return std::log(n.convert_to<double>());
}

}  // namespace detail

struct GrowthInterval {
    Rat lo, hi;
    Rat midpoint() const { return (lo + hi) / 2; }
    Rat width() const { return hi - lo; }
};

/**
 * Bracket the growth rate from the last two iterations.  Per generator the
 * one-step length ratio log(l_n / l_{n-1}) and the normalized value
 * (1/n) log l_n are both taken; the estimate is the max over generators of
 * the per-generator interval, padded slightly for rounding.
 */
inline GrowthInterval growth_estimate(const FreeGroupEndo& e, unsigned iterations) {
    e.validate();
    if (iterations < 2) throw std::invalid_argument("growth_estimate: iterations must be >= 2");
    detail::IterateTable table(e);
    double best_lo = 0.0, best_hi = 0.0;
    bool first = true;
    for (int g = 1; g <= e.rank; ++g) {
        Int ln = detail::cyclic_length(table.get(iterations, g));
        Int lp = detail::cyclic_length(table.get(iterations - 1, g));
        double ratio = (ln > 0 && lp > 0)
                           ? detail::log_of_int(ln) - detail::log_of_int(lp)
                           : 0.0;
        double avg = ln > 0 ? detail::log_of_int(ln) / double(iterations) : 0.0;
        double lo = std::min(ratio, avg), hi = std::max(ratio, avg);
        if (first || lo > best_lo) best_lo = std::max(lo, 0.0);
        if (first || hi > best_hi) best_hi = std::max(hi, 0.0);
        first = false;
    }
    if (best_lo > best_hi) std::swap(best_lo, best_hi);
    const double pad = 1e-9;
    return {detail::rat_of_double(best_lo - pad), detail::rat_of_double(best_hi + pad)};
}

/**
 * Inclusion of one free group into another, with the data needed to compare
 * growth rates: generator images and a retract sending the ambient group
 * back onto the interior one.
 */
struct Inclusion {
    std::vector<WordVec> generator_images;  // one ambient word per interior generator
    std::vector<WordVec> retract;           // one interior word per ambient generator

    WordVec apply(const WordVec& w) const {
        WordVec out;
        for (Letter x : w) {
            const WordVec& im = generator_images[std::abs(x) - 1];
            WordVec part = x > 0 ? im : inverse_word(im);
            out.insert(out.end(), part.begin(), part.end());
        }
        return reduce_word(out);
    }

    static Inclusion identity(int rank) {
        Inclusion inc;
        for (int i = 1; i <= rank; ++i) {
            inc.generator_images.push_back({i});
            inc.retract.push_back({i});
        }
        return inc;
    }

    /** Extend rank `rank` identically into rank `rank + extra`, retracting the
     *  extra letters to the identity word. */
    static Inclusion extension(int rank, int extra) {
        Inclusion inc = identity(rank);
        for (int i = 0; i < extra; ++i) inc.retract.push_back({});
        return inc;
    }
};

namespace detail {

inline bool cyclically_equal(const WordVec& a, const WordVec& b) {
    WordVec x = cyclic_reduce_word(a), y = cyclic_reduce_word(b);
    if (x.size() != y.size()) return false;
    if (x.empty()) return true;
    for (std::size_t r = 0; r < x.size(); ++r) {
        bool ok = true;
        for (std::size_t i = 0; i < x.size() && ok; ++i)
            ok = x[(r + i) % x.size()] == y[i];
        if (ok) return true;
    }
    return false;
}

}  // namespace detail

/**
 * Check the growth comparison for an interior subgroup: verifies that the
 * inclusion intertwines the two endomorphisms up to conjugacy (throwing if
 * not, since the comparison is void otherwise), then reports whether the
 * estimated intervals are consistent with growth(interior) <= growth(ambient).
 */
inline bool monotonicity_check(const FreeGroupEndo& interior, const FreeGroupEndo& ambient,
                               const Inclusion& inclusion, unsigned iterations = 24) {
    interior.validate();
    ambient.validate();
    if (static_cast<int>(inclusion.generator_images.size()) != interior.rank ||
        static_cast<int>(inclusion.retract.size()) != ambient.rank)
        throw std::invalid_argument("monotonicity_check: inclusion shape mismatch");
    for (int g = 1; g <= interior.rank; ++g) {
        WordVec lhs = inclusion.apply(interior.images[g - 1]);
        WordVec rhs = ambient.apply(inclusion.apply({g}));
        if (!detail::cyclically_equal(lhs, rhs))
            throw std::invalid_argument(
                "monotonicity_check: inclusion does not intertwine the endomorphisms");
    }
    GrowthInterval gi = growth_estimate(interior, iterations);
    GrowthInterval ga = growth_estimate(ambient, iterations);
    return gi.lo <= ga.hi;
}

/**
 * Endomorphism of the rank-2 free group induced by a twist word on the
 * one-holed torus (same token syntax as parse_twist_word): Ta fixes a and
 * sends b to ba; Tb fixes b and sends a to ab^-1; Td conjugates by the
 * boundary word.
 */
inline FreeGroupEndo endo_of_twist_word(const std::string& text) {
    FreeGroupEndo acc = FreeGroupEndo::identity(2);
    auto step = [&](const WordVec& ia, const WordVec& ib) {
        FreeGroupEndo t;
        t.rank = 2;
        t.images = {ia, ib};
        acc = acc.compose(t);
    };
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
        for (long i = 0; i < std::abs(exp); ++i) {
            if (base == "Ta")
                step({1}, exp > 0 ? WordVec{2, 1} : WordVec{2, -1});
            else if (base == "Tb")
                step(exp > 0 ? WordVec{1, -2} : WordVec{1, 2}, {2});
            else if (base == "Td")
                step({1, 2, -1, -2, 1, 2, 1, -2, -1},
                     {1, 2, -1, -2, 2, 2, 1, -2, -1});
            else
                throw std::invalid_argument("unknown twist token: " + tok);
        }
    }
    for (WordVec& w : acc.images) w = reduce_word(w);
    return acc;
}

}  // namespace monodromy
