#ifndef CLIFFPAR_QUADRATIC_FIELD_HPP
#define CLIFFPAR_QUADRATIC_FIELD_HPP

#include <optional>
#include <string>
#include <string_view>

#include "cliffpar/errors.hpp"
#include "cliffpar/random.hpp"
#include "cliffpar/rational.hpp"

namespace cliffpar {

/// a + b*sqrt(m) with rational a, b. Elements of different m never mix.
class QuadExtElem {
public:
    QuadExtElem() = default;
    QuadExtElem(Rational a, Rational b, long m) : a_(std::move(a)), b_(std::move(b)), m_(m) {}

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    long m() const { return m_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    QuadExtElem operator-() const { return {-a_, -b_, m_}; }

    QuadExtElem& operator+=(const QuadExtElem& o) {
        check(o);
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    QuadExtElem& operator-=(const QuadExtElem& o) {
        check(o);
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    QuadExtElem& operator*=(const QuadExtElem& o) {
        check(o);
        Rational na = a_ * o.a_ + Rational(m_) * b_ * o.b_;
        Rational nb = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(na);
        b_ = std::move(nb);
        return *this;
    }
    QuadExtElem& operator/=(const QuadExtElem& o) { return *this *= o.inverse(); }

    /// Field norm a^2 - m b^2 down to Q.
    Rational rational_norm() const { return a_ * a_ - Rational(m_) * b_ * b_; }

    QuadExtElem conjugate() const { return {a_, -b_, m_}; }

    QuadExtElem inverse() const {
        if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in Q(sqrt m)");
        const Rational n = rational_norm();
        return {a_ / n, -b_ / n, m_};
    }

    friend QuadExtElem operator+(QuadExtElem x, const QuadExtElem& y) { return x += y; }
    friend QuadExtElem operator-(QuadExtElem x, const QuadExtElem& y) { return x -= y; }
    friend QuadExtElem operator*(QuadExtElem x, const QuadExtElem& y) { return x *= y; }
    friend QuadExtElem operator/(QuadExtElem x, const QuadExtElem& y) { return x /= y; }
    friend bool operator==(const QuadExtElem& x, const QuadExtElem& y) {
        x.check(y);
        return x.a_ == y.a_ && x.b_ == y.b_;
    }

private:
    void check(const QuadExtElem& o) const {
        if (m_ != o.m_)
            throw Error(ErrorKind::FieldMismatch,
                        "Q(sqrt " + std::to_string(m_) + ") vs Q(sqrt " + std::to_string(o.m_) + ")");
    }

    Rational a_;
    Rational b_;
    long m_ = 0;
};

/// The field Q(sqrt m) for a squarefree m that is not a perfect square.
class QuadField {
public:
    using element = QuadExtElem;

    explicit QuadField(long m) : m_(m) {
        if (m == 0 || m == 1) throw Error(ErrorKind::FieldMismatch, "m must be squarefree and not 0 or 1");
        const long am = m < 0 ? -m : m;
        for (long p = 2; p * p <= am; ++p)
            if (am % (p * p) == 0)
                throw Error(ErrorKind::FieldMismatch, "m = " + std::to_string(m) + " is not squarefree");
    }

    long m() const { return m_; }
    int characteristic() const { return 0; }
    std::string name() const { return "qsqrt(" + std::to_string(m_) + ")"; }

    element zero() const { return {Rational(0), Rational(0), m_}; }
    element one() const { return {Rational(1), Rational(0), m_}; }
    element from_int(long n) const { return {Rational(n), Rational(0), m_}; }
    element from_rational(const Rational& r) const { return {r, Rational(0), m_}; }
    element root() const { return {Rational(0), Rational(1), m_}; }

    std::optional<element> symbol(std::string_view name) const {
        if (name == "s") return root();
        return std::nullopt;
    }

    bool has_galois() const { return true; }
    element galois(const element& x) const { return x.conjugate(); }

    /// Square root inside Q(sqrt m), if one exists.
    ///
    /// b = 0: a is a rational square, or a/m is (root r*sqrt m).
    /// b != 0: (X + Y sqrt m)^2 = a + b sqrt m forces a^2 - m b^2 = (X^2 - m Y^2)^2,
    /// so s = sqrt(a^2 - m b^2) must be rational and X^2 = (a +- s)/2, Y = b/(2X).
    std::optional<element> sqrt(const element& x) const {
        if (x.is_zero()) return zero();
        if (x.b().is_zero()) {
            if (auto r = rational_sqrt(x.a())) return element(*r, Rational(0), m_);
            if (auto r = rational_sqrt(x.a() / Rational(m_))) return element(Rational(0), *r, m_);
            return std::nullopt;
        }
        auto s = rational_sqrt(x.rational_norm());
        if (!s) return std::nullopt;
        for (const Rational& cand : {(x.a() + *s) / Rational(2), (x.a() - *s) / Rational(2)}) {
            auto big_x = rational_sqrt(cand);
            if (!big_x || big_x->is_zero()) continue;
            element r(*big_x, x.b() / (Rational(2) * *big_x), m_);
            if (r * r == x) return r;
        }
        return std::nullopt;
    }

    element random(SeededRng& rng) const {
        return {Rational(rng.uniform(-9, 9)), Rational(rng.uniform(-9, 9)), m_};
    }

    /// Renders as "a+b*s" with s standing for sqrt(m).
    std::string format(const element& x) const {
        if (x.b().is_zero()) return x.a().to_string();
        std::string tail;
        if (x.b() == Rational(1)) {
            tail = "s";
        } else if (x.b() == Rational(-1)) {
            tail = "-s";
        } else {
            tail = x.b().to_string() + "*s";
        }
        if (x.a().is_zero()) return tail;
        if (tail[0] == '-') return x.a().to_string() + tail;
        return x.a().to_string() + "+" + tail;
    }

    friend bool operator==(const QuadField& x, const QuadField& y) { return x.m_ == y.m_; }

private:
    long m_;
};

}  // namespace cliffpar

#endif
