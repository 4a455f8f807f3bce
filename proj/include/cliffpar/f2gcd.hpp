#ifndef CLIFFPAR_F2GCD_HPP
#define CLIFFPAR_F2GCD_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cliffpar/errors.hpp"
#include "cliffpar/f2poly.hpp"

namespace cliffpar {

/// Dense polynomial in t over F2, one bit per coefficient.
class GF2t {
public:
    GF2t() = default;

    static GF2t one() {
        GF2t p;
        p.w_.push_back(1);
        return p;
    }

    bool is_zero() const { return w_.empty(); }
    bool is_one() const { return w_.size() == 1 && w_[0] == 1; }

    int degree() const {
        if (w_.empty()) return -1;
        return static_cast<int>(w_.size() - 1) * 64 + 63 - __builtin_clzll(w_.back());
    }

    bool bit(int n) const {
        const std::size_t word = static_cast<std::size_t>(n) / 64;
        return word < w_.size() && ((w_[word] >> (n % 64)) & 1U);
    }

    void flip(int n) {
        const std::size_t word = static_cast<std::size_t>(n) / 64;
        if (word >= w_.size()) w_.resize(word + 1, 0);
        w_[word] ^= std::uint64_t{1} << (n % 64);
        trim();
    }

    /// this += src * t^shift
    void add_shifted(const GF2t& src, int shift) {
        if (src.is_zero()) return;
        const std::size_t need = src.w_.size() + static_cast<std::size_t>(shift) / 64 + 1;
        if (w_.size() < need) w_.resize(need, 0);
        xor_shifted(w_.data(), src.w_, shift);
        trim();
    }

    friend GF2t operator+(GF2t a, const GF2t& b) {
        a.add_shifted(b, 0);
        return a;
    }

    friend GF2t operator*(const GF2t& a, const GF2t& b) {
        GF2t out;
        if (a.is_zero() || b.is_zero()) return out;
        const GF2t& small = a.w_.size() <= b.w_.size() ? a : b;
        const GF2t& big = &small == &a ? b : a;
        out.w_.assign(small.w_.size() + big.w_.size() + 1, 0);
        for (std::size_t n = 0; n < small.w_.size(); ++n) {
            std::uint64_t word = small.w_[n];
            while (word != 0) {
                const int bit = __builtin_ctzll(word);
                word &= word - 1;
                xor_shifted(out.w_.data(), big.w_, static_cast<int>(n * 64) + bit);
            }
        }
        out.trim();
        return out;
    }

    /// Quotient and remainder; divisor must be nonzero.
    static std::pair<GF2t, GF2t> divmod(GF2t a, const GF2t& b) {
        GF2t q;
        reduce(a, b, &q);
        return {std::move(q), std::move(a)};
    }

    static GF2t mod(GF2t a, const GF2t& b) {
        reduce(a, b, nullptr);
        return a;
    }

    friend bool operator==(const GF2t& a, const GF2t& b) { return a.w_ == b.w_; }

private:
    void trim() {
        while (!w_.empty() && w_.back() == 0) w_.pop_back();
    }

    /// dst[...] ^= src * t^shift; dst must be large enough.
    static void xor_shifted(std::uint64_t* dst, const std::vector<std::uint64_t>& src, int shift) {
        const std::size_t ws = static_cast<std::size_t>(shift) / 64;
        const int bs = shift % 64;
        if (bs == 0) {
            for (std::size_t n = 0; n < src.size(); ++n) dst[n + ws] ^= src[n];
            return;
        }
        for (std::size_t n = 0; n < src.size(); ++n) {
            dst[n + ws] ^= src[n] << bs;
            dst[n + ws + 1] ^= src[n] >> (64 - bs);
        }
    }

    /// a <- a mod b, accumulating the quotient into q when given.
    static void reduce(GF2t& a, const GF2t& b, GF2t* q) {
        if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero polynomial");
        const int db = b.degree();
        const int da = a.degree();
        if (da < db) return;
        if (q) q->w_.assign(static_cast<std::size_t>(da - db) / 64 + 1, 0);
        a.w_.resize(a.w_.size() + 1, 0);
        for (int d = da; d >= db; --d) {
            if (!((a.w_[d / 64] >> (d % 64)) & 1U)) continue;
            xor_shifted(a.w_.data(), b.w_, d - db);
            if (q) q->w_[(d - db) / 64] |= std::uint64_t{1} << ((d - db) % 64);
        }
        a.trim();
        if (q) q->trim();
    }

    std::vector<std::uint64_t> w_;
};

inline GF2t gcd(GF2t a, GF2t b) {
    while (!b.is_zero()) {
        GF2t r = GF2t::mod(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

namespace detail {

/// F2[t][u]: coefficients indexed by u-degree, no trailing zeros.
using BiPoly = std::vector<GF2t>;

inline void trim(BiPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline BiPoly to_bipoly(const F2Poly& p) {
    BiPoly out;
    for (const auto& m : p.monomials()) {
        if (out.size() <= m.u) out.resize(m.u + 1);
        out[m.u].flip(static_cast<int>(m.t));
    }
    trim(out);
    return out;
}

inline F2Poly from_bipoly(const BiPoly& p) {
    std::vector<Monomial> ms;
    for (std::size_t u = 0; u < p.size(); ++u) {
        const int d = p[u].degree();
        for (int t = 0; t <= d; ++t)
            if (p[u].bit(t)) ms.push_back({static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(u)});
    }
    return F2Poly::from_monomials(std::move(ms));
}

inline int degree_u(const BiPoly& p) { return static_cast<int>(p.size()) - 1; }

inline GF2t content(const BiPoly& p) {
    GF2t c;
    for (const auto& x : p) {
        c = gcd(std::move(c), x);
        if (c.is_one()) break;
    }
    return c;
}

inline BiPoly divide_coefficients(const BiPoly& p, const GF2t& c) {
    if (c.is_one()) return p;
    BiPoly out;
    out.reserve(p.size());
    for (const auto& x : p) out.push_back(GF2t::divmod(x, c).first);
    return out;
}

inline BiPoly primitive_part(const BiPoly& p) { return divide_coefficients(p, content(p)); }

/// Pseudo-remainder of a by b, with the leading-coefficient multiplier
/// reduced by the gcd of both leading coefficients at every step.
inline BiPoly pseudo_remainder(BiPoly a, const BiPoly& b) {
    const int db = degree_u(b);
    const GF2t& lb = b.back();
    while (!a.empty() && degree_u(a) >= db) {
        const int shift = degree_u(a) - db;
        const GF2t g = gcd(a.back(), lb);
        const GF2t ma = GF2t::divmod(lb, g).first;
        const GF2t mb = GF2t::divmod(a.back(), g).first;
        for (auto& x : a) x = x * ma;
        for (int n = 0; n <= db; ++n) a[n + shift] = a[n + shift] + b[n] * mb;
        trim(a);
    }
    return a;
}

}  // namespace detail

/// x / y if y divides x.
inline std::optional<F2Poly> try_divide(const F2Poly& x, const F2Poly& y) {
    using namespace detail;
    if (y.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero polynomial");
    if (y.is_one()) return x;
    if (x.degree() < y.degree()) {
        if (x.is_zero()) return x;
        return std::nullopt;
    }
    BiPoly a = to_bipoly(x);
    const BiPoly b = to_bipoly(y);
    const int db = degree_u(b);
    BiPoly q;
    while (!a.empty()) {
        const int shift = degree_u(a) - db;
        if (shift < 0) return std::nullopt;
        auto [lq, rem] = GF2t::divmod(a.back(), b.back());
        if (!rem.is_zero()) return std::nullopt;
        if (q.size() <= static_cast<std::size_t>(shift)) q.resize(shift + 1);
        for (int n = 0; n <= db; ++n) a[n + shift] = a[n + shift] + b[n] * lq;
        q[shift] = std::move(lq);
        trim(a);
    }
    trim(q);
    return from_bipoly(q);
}

/// x / y when y divides x; throws otherwise.
inline F2Poly divide_exact(const F2Poly& x, const F2Poly& y) {
    auto q = try_divide(x, y);
    if (!q) throw Error(ErrorKind::UnsupportedTarget, "inexact polynomial division");
    return std::move(*q);
}

namespace detail {

/// x(t, u0) for u0 in {0, 1}; with `swap`, x(t0, u) as a polynomial in u.
inline GF2t specialize(const F2Poly& x, int value, bool swap) {
    GF2t out;
    for (const auto& m : x.monomials()) {
        const std::uint32_t kept = swap ? m.u : m.t;
        const std::uint32_t gone = swap ? m.t : m.u;
        if (value == 1 || gone == 0) out.flip(static_cast<int>(kept));
    }
    return out;
}

inline int partial_degree(const F2Poly& x, bool swap) {
    int d = -1;
    for (const auto& m : x.monomials()) d = std::max(d, static_cast<int>(swap ? m.u : m.t));
    return d;
}

/// Cheap proof that gcd(x, y) = 1. If x(t, u0) keeps its t-degree, the
/// leading t-coefficient of any common factor g survives as well, so a
/// trivial gcd of the specializations forces deg_t g = 0; the same in u
/// then leaves only constants. False means "unknown", not "not coprime".
inline bool certainly_coprime(const F2Poly& x, const F2Poly& y) {
    for (bool swap : {false, true}) {
        const int dx = partial_degree(x, swap);
        bool done = dx == 0;
        for (int value = 0; value < 2 && !done; ++value) {
            const GF2t a = specialize(x, value, swap);
            if (a.degree() != dx) continue;
            done = gcd(a, specialize(y, value, swap)).is_one();
        }
        if (!done) return false;
    }
    return true;
}

}  // namespace detail

/// gcd in F2[t,u] by the primitive remainder sequence over F2[t][u].
inline F2Poly poly_gcd(const F2Poly& x, const F2Poly& y) {
    using namespace detail;
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.is_one() || y.is_one()) return F2Poly::one();
    if (certainly_coprime(x, y)) return F2Poly::one();
    BiPoly a = to_bipoly(x);
    BiPoly b = to_bipoly(y);
    const GF2t ca = content(a);
    const GF2t cb = content(b);
    const GF2t c = gcd(ca, cb);
    a = divide_coefficients(a, ca);
    b = divide_coefficients(b, cb);
    if (degree_u(a) < degree_u(b)) std::swap(a, b);
    for (;;) {
        if (degree_u(b) == 0) {
            a = BiPoly{GF2t::one()};
            break;
        }
        BiPoly r = pseudo_remainder(a, b);
        if (r.empty()) {
            a = std::move(b);
            break;
        }
        a = std::move(b);
        b = primitive_part(r);
    }
    for (auto& coef : a) coef = coef * c;
    return from_bipoly(a);
}


}  // namespace cliffpar

#endif
