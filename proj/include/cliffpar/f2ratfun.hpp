#ifndef CLIFFPAR_F2RATFUN_HPP
#define CLIFFPAR_F2RATFUN_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "cliffpar/errors.hpp"
#include "cliffpar/f2gcd.hpp"
#include "cliffpar/f2poly.hpp"
#include "cliffpar/random.hpp"

namespace cliffpar {

/// Element num/den of F2(t,u).
///
/// Kept in lowest terms: the common monomial factor is stripped first, then
/// the remaining gcd is cancelled. Equality is still decided by
/// cross-multiplication.
class F2RatFun {
public:
    F2RatFun() : den_(F2Poly::one()) {}
    F2RatFun(F2Poly num) : num_(std::move(num)), den_(F2Poly::one()) {}  // NOLINT(google-explicit-constructor)
    F2RatFun(F2Poly num, F2Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
        normalize();
    }

    static F2RatFun one() { return F2RatFun(F2Poly::one()); }

    const F2Poly& num() const { return num_; }
    const F2Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    F2RatFun operator-() const { return *this; }

    /// With g = gcd(b, d): a/b + c/d = (a d' + c b') / (b' d), b = g b',
    /// d = g d'; only a factor of g can cancel.
    friend F2RatFun operator+(const F2RatFun& a, const F2RatFun& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return F2RatFun(a.num_ + b.num_, a.den_);
        const F2Poly g = poly_gcd(a.den_, b.den_);
        if (g.is_one()) {
            F2Poly num = a.num_ * b.den_ + b.num_ * a.den_;
            if (num.is_zero()) return {};
            return F2RatFun(std::move(num), a.den_ * b.den_, Reduced{});
        }
        const F2Poly a1 = divide_exact(a.den_, g);
        const F2Poly b1 = divide_exact(b.den_, g);
        F2Poly num = a.num_ * b1 + b.num_ * a1;
        F2Poly den = a1 * b.den_;
        if (num.is_zero()) return {};
        const F2Poly h = poly_gcd(num, g);
        if (!h.is_one()) {
            num = divide_exact(num, h);
            den = divide_exact(den, h);
        }
        return F2RatFun(std::move(num), std::move(den), Reduced{});
    }
    friend F2RatFun operator-(const F2RatFun& a, const F2RatFun& b) { return a + b; }
    /// Cross-cancels before multiplying, so reduced inputs give a reduced product.
    friend F2RatFun operator*(const F2RatFun& a, const F2RatFun& b) {
        if (a.is_zero() || b.is_zero()) return {};
        const F2Poly g1 = poly_gcd(a.num_, b.den_);
        const F2Poly g2 = poly_gcd(b.num_, a.den_);
        return F2RatFun(divide_exact(a.num_, g1) * divide_exact(b.num_, g2),
                        divide_exact(a.den_, g2) * divide_exact(b.den_, g1), Reduced{});
    }
    friend F2RatFun operator/(const F2RatFun& a, const F2RatFun& b) { return a * b.inverse(); }
    F2RatFun& operator+=(const F2RatFun& o) { return *this = *this + o; }
    F2RatFun& operator-=(const F2RatFun& o) { return *this = *this + o; }
    F2RatFun& operator*=(const F2RatFun& o) { return *this = *this * o; }
    F2RatFun& operator/=(const F2RatFun& o) { return *this = *this / o; }

    F2RatFun inverse() const {
        if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in F2(t,u)");
        return F2RatFun(den_, num_);
    }

    F2RatFun square() const { return F2RatFun(num_.square(), den_.square()); }
    F2RatFun swap_tu() const { return F2RatFun(num_.swap_tu(), den_.swap_tu()); }

    friend bool operator==(const F2RatFun& a, const F2RatFun& b) {
        if (a.den_ == b.den_) return a.num_ == b.num_;
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        auto wrap = [](const F2Poly& p) {
            std::string s = p.to_string();
            return p.size() > 1 ? "(" + s + ")" : s;
        };
        return wrap(num_) + "/" + wrap(den_);
    }

private:
    struct Reduced {};
    F2RatFun(F2Poly num, F2Poly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (num_.is_zero()) {
            den_ = F2Poly::one();
            return;
        }
        if (num_ == den_) {
            num_ = den_ = F2Poly::one();
            return;
        }
        const Monomial a = num_.monomial_content();
        const Monomial b = den_.monomial_content();
        const Monomial c{std::min(a.t, b.t), std::min(a.u, b.u)};
        if (c.t != 0 || c.u != 0) {
            num_ = num_.divide_monomial(c);
            den_ = den_.divide_monomial(c);
        }
        if (den_.is_one()) return;
        const F2Poly g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = divide_exact(num_, g);
            den_ = divide_exact(den_, g);
        }
    }

    F2Poly num_;
    F2Poly den_;
};

/// n/d is a square in F2(t,u) iff n*d (= (n/d) * d^2) is a square polynomial.
inline std::optional<F2RatFun> f2_sqrt(const F2RatFun& x) {
    if (x.is_zero()) return F2RatFun{};
    if (auto r = x.num().sqrt()) {
        if (auto s = x.den().sqrt()) return F2RatFun(*r, *s);
    }
    auto root = (x.num() * x.den()).sqrt();
    if (!root) return std::nullopt;
    return F2RatFun(*root, x.den());
}

/// Coordinates (s0,s1,s2,s3) with f = s0^2 + s1^2 t + s2^2 u + s3^2 tu.
///
/// F2(t,u) has basis {1, t, u, tu} over its subfield of squares. Writing
/// f = (num*den)/den^2 and sorting the monomials of num*den by exponent parity
/// gives the coordinates directly.
inline std::array<F2RatFun, 4> frobenius_coordinates(const F2RatFun& f) {
    const F2Poly product = f.num() * f.den();
    const auto parts = product.parity_split();
    static constexpr std::array<Monomial, 4> shifts{Monomial{0, 0}, Monomial{1, 0}, Monomial{0, 1}, Monomial{1, 1}};
    std::array<F2RatFun, 4> out;
    for (std::size_t c = 0; c < 4; ++c) {
        const F2Poly even = parts[c].is_zero() ? F2Poly{} : parts[c].divide_monomial(shifts[c]);
        out[c] = F2RatFun(*even.sqrt(), f.den());
    }
    return out;
}

/// Polynomial-only Artin-Schreier solver on field elements.
inline std::optional<F2Poly> artin_schreier_solve(const F2RatFun& f) {
    if (!f.is_polynomial())
        throw Error(ErrorKind::UnsupportedTarget,
                    "artin_schreier_solve takes polynomial targets; got " + f.to_string());
    return artin_schreier_solve(f.num());
}

/// Decides d^2 + d = f for an arbitrary f in F2(t,u), returning d.
///
/// If d = a'/c in lowest terms then f has reduced denominator c^2. Writing
/// f = N / M^2 for any polynomials N, M, c^2 | M^2 gives c | M, so a = d*M is a
/// polynomial with a^2 + M a = N. That equation is additive in a, and
/// deg a <= max(ceil(deg N / 2), deg M) because for deg a > deg M the term a^2
/// dominates. No gcd is needed.
inline std::optional<F2RatFun> artin_schreier_solve_rational(const F2RatFun& f) {
    if (f.is_zero()) return F2RatFun{};
    F2Poly big_n;
    F2Poly big_m;
    if (auto s = f.den().sqrt()) {
        big_n = f.num();
        big_m = *s;
    } else {
        big_n = f.num() * f.den();
        big_m = f.den();
    }
    const int bound = std::max((big_n.degree() + 1) / 2, big_m.degree());
    auto a = solve_frobenius_shift(big_n, big_m, bound);
    if (!a) return std::nullopt;
    F2RatFun d(*a, big_m);
    if (d.square() + d == f) return d;
    return std::nullopt;
}

/// The function field F2(t,u).
class F2TUField {
public:
    using element = F2RatFun;

    int characteristic() const { return 2; }
    std::string name() const { return "f2tu"; }

    element zero() const { return {}; }
    element one() const { return F2RatFun::one(); }
    element from_int(long n) const { return (n % 2 != 0) ? one() : zero(); }

    std::optional<element> symbol(std::string_view name) const {
        if (name == "t") return F2RatFun(F2Poly::monomial(1, 0));
        if (name == "u") return F2RatFun(F2Poly::monomial(0, 1));
        return std::nullopt;
    }

    bool has_galois() const { return true; }
    element galois(const element& x) const { return x.swap_tu(); }

    std::optional<element> sqrt(const element& x) const { return f2_sqrt(x); }

    /// Random polynomial of total degree <= 3.
    element random(SeededRng& rng) const {
        std::vector<Monomial> ms;
        for (const auto& m : monomials_up_to(3))
            if (rng.coin()) ms.push_back(m);
        return F2RatFun(F2Poly::from_monomials(std::move(ms)));
    }

    std::string format(const element& x) const { return x.to_string(); }

    friend bool operator==(const F2TUField&, const F2TUField&) { return true; }
};

}  // namespace cliffpar

#endif
