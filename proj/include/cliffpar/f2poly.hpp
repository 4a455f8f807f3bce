#ifndef CLIFFPAR_F2POLY_HPP
#define CLIFFPAR_F2POLY_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cliffpar/errors.hpp"
#include "cliffpar/gf2_linear.hpp"

namespace cliffpar {

/// Exponent pair (t-degree, u-degree) of a monomial t^t u^u.
struct Monomial {
    std::uint32_t t = 0;
    std::uint32_t u = 0;

    std::uint64_t key() const { return (std::uint64_t{t} << 32) | u; }
    static Monomial from_key(std::uint64_t k) {
        return {static_cast<std::uint32_t>(k >> 32), static_cast<std::uint32_t>(k & 0xFFFFFFFFU)};
    }
    std::uint32_t degree() const { return t + u; }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.key() == b.key(); }
    // Lexicographic with t first.
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.key() < b.key(); }
};

/// Polynomial in F2[t,u], stored as its set of monomials in increasing lex order.
class F2Poly {
public:
    F2Poly() = default;

    static F2Poly one() { return monomial(0, 0); }
    static F2Poly monomial(std::uint32_t t, std::uint32_t u) {
        F2Poly p;
        p.keys_.push_back(Monomial{t, u}.key());
        return p;
    }
    /// Builds from an arbitrary list; repeated monomials cancel in pairs.
    static F2Poly from_monomials(std::vector<Monomial> ms) {
        std::vector<std::uint64_t> keys;
        keys.reserve(ms.size());
        for (const auto& m : ms) keys.push_back(m.key());
        return from_keys(std::move(keys));
    }

    bool is_zero() const { return keys_.empty(); }
    bool is_one() const { return keys_.size() == 1 && keys_[0] == 0; }
    std::size_t size() const { return keys_.size(); }
    std::vector<Monomial> monomials() const {
        std::vector<Monomial> out;
        out.reserve(keys_.size());
        for (auto k : keys_) out.push_back(Monomial::from_key(k));
        return out;
    }
    bool contains(const Monomial& m) const { return std::binary_search(keys_.begin(), keys_.end(), m.key()); }

    /// Total degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (auto k : keys_) d = std::max(d, static_cast<int>(Monomial::from_key(k).degree()));
        return d;
    }

    F2Poly& operator+=(const F2Poly& o) {
        std::vector<std::uint64_t> out;
        out.reserve(keys_.size() + o.keys_.size());
        std::set_symmetric_difference(keys_.begin(), keys_.end(), o.keys_.begin(), o.keys_.end(),
                                      std::back_inserter(out));
        keys_ = std::move(out);
        return *this;
    }
    friend F2Poly operator+(F2Poly a, const F2Poly& b) { return a += b; }
    friend F2Poly operator-(F2Poly a, const F2Poly& b) { return a += b; }

    friend F2Poly operator*(const F2Poly& a, const F2Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.is_one()) return b;
        if (b.is_one()) return a;
        std::vector<std::uint64_t> keys;
        keys.reserve(a.keys_.size() * b.keys_.size());
        for (auto x : a.keys_)
            for (auto y : b.keys_) keys.push_back(x + y);  // exponent fields never carry
        return from_keys(std::move(keys));
    }
    F2Poly& operator*=(const F2Poly& o) { return *this = *this * o; }

    /// Frobenius: squares every monomial, no cross terms in characteristic 2.
    F2Poly square() const {
        F2Poly p;
        p.keys_.reserve(keys_.size());
        for (auto k : keys_) {
            auto m = Monomial::from_key(k);
            p.keys_.push_back(Monomial{2 * m.t, 2 * m.u}.key());
        }
        return p;
    }

    /// A polynomial over F2 is a square iff every exponent is even.
    std::optional<F2Poly> sqrt() const {
        F2Poly p;
        for (auto k : keys_) {
            auto m = Monomial::from_key(k);
            if (m.t % 2 != 0 || m.u % 2 != 0) return std::nullopt;
            p.keys_.push_back(Monomial{m.t / 2, m.u / 2}.key());
        }
        return p;
    }

    F2Poly times_monomial(const Monomial& m) const {
        F2Poly p;
        p.keys_.reserve(keys_.size());
        for (auto k : keys_) p.keys_.push_back(k + m.key());
        return p;
    }

    /// Componentwise minimum exponent over all monomials (the largest monomial divisor).
    Monomial monomial_content() const {
        if (keys_.empty()) return {};
        Monomial c = Monomial::from_key(keys_.front());
        for (auto k : keys_) {
            auto m = Monomial::from_key(k);
            c.t = std::min(c.t, m.t);
            c.u = std::min(c.u, m.u);
        }
        return c;
    }

    /// Exact division by a monomial that divides every term.
    F2Poly divide_monomial(const Monomial& m) const {
        F2Poly p;
        p.keys_.reserve(keys_.size());
        for (auto k : keys_) p.keys_.push_back(k - m.key());
        return p;
    }

    /// The field automorphism t <-> u.
    F2Poly swap_tu() const {
        std::vector<std::uint64_t> keys;
        keys.reserve(keys_.size());
        for (auto k : keys_) {
            auto m = Monomial::from_key(k);
            keys.push_back(Monomial{m.u, m.t}.key());
        }
        std::sort(keys.begin(), keys.end());
        F2Poly p;
        p.keys_ = std::move(keys);
        return p;
    }

    /// Splits into the four exponent-parity classes, indexed by (t%2) + 2*(u%2).
    std::array<F2Poly, 4> parity_split() const {
        std::array<F2Poly, 4> parts;
        for (auto k : keys_) {
            auto m = Monomial::from_key(k);
            parts[(m.t % 2) + 2 * (m.u % 2)].keys_.push_back(k);
        }
        return parts;
    }

    /// Lexicographically largest monomial; the keys are kept sorted.
    Monomial lex_leading() const {
        if (keys_.empty()) throw Error(ErrorKind::ZeroPolynomial, "leading monomial of zero");
        return Monomial::from_key(keys_.back());
    }

    std::size_t hash() const {
        std::size_t h = keys_.size();
        for (auto k : keys_) h = h * 1099511628211ULL ^ k;
        return h;
    }

    friend bool operator==(const F2Poly& a, const F2Poly& b) { return a.keys_ == b.keys_; }

    /// Increasing total degree, then decreasing t-exponent: "1+t+u+t^2*u".
    std::string to_string() const {
        if (keys_.empty()) return "0";
        std::vector<Monomial> ms = monomials();
        std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) {
            if (a.degree() != b.degree()) return a.degree() < b.degree();
            return a.t > b.t;
        });
        std::string out;
        for (const auto& m : ms) {
            if (!out.empty()) out += "+";
            out += monomial_string(m);
        }
        return out;
    }

    static std::string monomial_string(const Monomial& m) {
        if (m.t == 0 && m.u == 0) return "1";
        std::string s;
        auto var = [&](const char* v, std::uint32_t e) {
            if (e == 0) return;
            if (!s.empty()) s += "*";
            s += v;
            if (e > 1) s += "^" + std::to_string(e);
        };
        var("t", m.t);
        var("u", m.u);
        return s;
    }

private:
    static F2Poly from_keys(std::vector<std::uint64_t> keys) {
        std::sort(keys.begin(), keys.end());
        F2Poly p;
        p.keys_.reserve(keys.size());
        for (std::size_t i = 0; i < keys.size();) {
            std::size_t j = i;
            while (j < keys.size() && keys[j] == keys[i]) ++j;
            if ((j - i) % 2 == 1) p.keys_.push_back(keys[i]);
            i = j;
        }
        return p;
    }

    std::vector<std::uint64_t> keys_;
};

/// The lexicographically maximal exponent pair (t first) of a nonzero polynomial.
inline std::pair<std::uint32_t, std::uint32_t> t_leading_pair(const F2Poly& p) {
    if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "t-leading pair of the zero polynomial");
    const Monomial m = p.lex_leading();
    return {m.t, m.u};
}

/// All monomials of total degree <= d.
inline std::vector<Monomial> monomials_up_to(int d) {
    std::vector<Monomial> out;
    for (int total = 0; total <= d; ++total)
        for (int a = total; a >= 0; --a)
            out.push_back(Monomial{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(total - a)});
    return out;
}

/// Finds a with a^2 + shift*a = target, deg a <= degree_bound, or nothing.
///
/// a -> a^2 + shift*a is additive in characteristic 2, so this is a linear system
/// over GF(2) in the coefficients of a.
inline std::optional<F2Poly> solve_frobenius_shift(const F2Poly& target, const F2Poly& shift, int degree_bound) {
    if (target.is_zero()) return F2Poly{};
    const std::vector<Monomial> unknowns = monomials_up_to(degree_bound);
    std::unordered_map<std::uint64_t, std::size_t> row_of;
    auto row = [&](const Monomial& m) {
        auto [it, inserted] = row_of.try_emplace(m.key(), row_of.size());
        return it->second;
    };
    std::vector<std::vector<std::size_t>> columns;
    columns.reserve(unknowns.size());
    for (const auto& mu : unknowns) {
        const F2Poly image = F2Poly::monomial(2 * mu.t, 2 * mu.u) + shift.times_monomial(mu);
        std::vector<std::size_t> rows;
        for (const auto& m : image.monomials()) rows.push_back(row(m));
        columns.push_back(std::move(rows));
    }
    std::vector<std::size_t> rhs;
    for (const auto& m : target.monomials()) rhs.push_back(row(m));
    auto sol = solve_gf2(row_of.size(), columns, rhs);
    if (!sol) return std::nullopt;
    std::vector<Monomial> picked;
    for (std::size_t c = 0; c < unknowns.size(); ++c)
        if ((*sol)[c]) picked.push_back(unknowns[c]);
    return F2Poly::from_monomials(std::move(picked));
}

/// Solves d^2 + d = p in F2[t,u].
///
/// A solution has 2*deg d = deg p, so the unknowns range over monomials of
/// total degree <= ceil(deg p / 2).
inline std::optional<F2Poly> artin_schreier_solve(const F2Poly& p) {
    if (p.is_zero()) return F2Poly{};
    const int bound = (p.degree() + 1) / 2;
    auto d = solve_frobenius_shift(p, F2Poly::one(), bound);
    if (d && d->square() + *d == p) return d;
    return std::nullopt;
}

}  // namespace cliffpar

#endif
