#ifndef CLIFFPAR_GEOMETRY_HPP
#define CLIFFPAR_GEOMETRY_HPP

#include <array>
#include <type_traits>

#include "cliffpar/errors.hpp"
#include "cliffpar/linalg.hpp"
#include "cliffpar/quaternion.hpp"

namespace cliffpar {

/// Point F*x of P(H_F), scaled so its first nonzero coordinate is 1.
template <BaseField F>
class ProjPoint {
public:
    using Q = Quaternion<F>;

    ProjPoint(const F& field, const Q& x) : rep_(x) {
        int n = 0;
        while (n < 4 && x.c[n].is_zero()) ++n;
        if (n == 4) throw Error(ErrorKind::ZeroElement, "the zero vector is not a point");
        rep_ = (field.one() / x.c[n]) * x;
    }

    const Q& rep() const { return rep_; }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.rep_ == b.rep_; }

private:
    Q rep_;
};

enum class Side { Left, Right };

/// Two-dimensional subspace of H_F, held as its reduced row echelon basis.
/// Since that basis is unique, equal lines have equal rows.
template <BaseField F>
class Line {
public:
    using Q = Quaternion<F>;

    const Q& row(int n) const { return rows_[n]; }
    const std::array<Q, 2>& rows() const { return rows_; }

    /// True iff x lies in the line.
    bool contains(const F& field, const Q& x) const {
        Rows<typename F::element> m;
        for (const auto& r : rows_) m.push_back({r.c[0], r.c[1], r.c[2], r.c[3]});
        m.push_back({x.c[0], x.c[1], x.c[2], x.c[3]});
        return rref(field, m).size() == 2;
    }

    friend bool operator==(const Line& a, const Line& b) { return a.rows_ == b.rows_; }

    static Line from_canonical_rows(std::array<Q, 2> rows) {
        Line l;
        l.rows_ = std::move(rows);
        return l;
    }

private:
    std::array<Q, 2> rows_;
};

/// span{x, y}, canonicalized.
template <BaseField F>
Line<F> line_span(const F& field, const Quaternion<F>& x, const Quaternion<F>& y) {
    Rows<typename F::element> m{{x.c[0], x.c[1], x.c[2], x.c[3]}, {y.c[0], y.c[1], y.c[2], y.c[3]}};
    if (rref(field, m).size() != 2) throw Error(ErrorKind::DependentVectors, "span needs two independent vectors");
    return Line<F>::from_canonical_rows({Quaternion<F>{{m[0][0], m[0][1], m[0][2], m[0][3]}},
                                         Quaternion<F>{{m[1][0], m[1][1], m[1][2], m[1][3]}}});
}

template <BaseField F>
Line<F> line_span(const QuaternionAlgebra<F>& A, const Quaternion<F>& x, const Quaternion<F>& y) {
    return line_span(A.field(), x, y);
}

/// A nonzero scalar multiple of x with polynomial, content-free coordinates
/// over F2(t,u); x itself over the other fields.
template <BaseField F>
Quaternion<F> primitive_multiple(const F&, const Quaternion<F>& x) {
    if constexpr (std::is_same_v<F, F2TUField>) {
        F2Poly l = F2Poly::one();
        for (const auto& c : x.c)
            if (!c.is_zero() && !c.den().is_one()) l = l * divide_exact(c.den(), poly_gcd(l, c.den()));
        std::array<F2Poly, 4> num;
        F2Poly g;
        for (int n = 0; n < 4; ++n) {
            if (x.c[n].is_zero()) continue;
            num[n] = x.c[n].num() * divide_exact(l, x.c[n].den());
            g = g.is_zero() ? num[n] : poly_gcd(g, num[n]);
        }
        if (g.is_zero()) return x;
        Quaternion<F> out;
        for (int n = 0; n < 4; ++n)
            if (!num[n].is_zero()) out.c[n] = F2RatFun(g.is_one() ? num[n] : divide_exact(num[n], g));
        return out;
    } else {
        return x;
    }
}

/// g*M.
template <BaseField F>
Line<F> left_multiply(const QuaternionAlgebra<F>& A, const Quaternion<F>& g, const Line<F>& M) {
    const F& f = A.field();
    const auto h = primitive_multiple(f, g);
    return line_span(A, A.mul(h, primitive_multiple(f, M.row(0))), A.mul(h, primitive_multiple(f, M.row(1))));
}

/// M*g.
template <BaseField F>
Line<F> right_multiply(const QuaternionAlgebra<F>& A, const Line<F>& M, const Quaternion<F>& g) {
    const F& f = A.field();
    const auto h = primitive_multiple(f, g);
    return line_span(A, A.mul(primitive_multiple(f, M.row(0)), h), A.mul(primitive_multiple(f, M.row(1)), h));
}

/// The member of M's left parallel class through F1: m^-1 M for any nonzero m in M.
/// With m the first echelon row, m^-1 M = conj(m) M = span(1, conj(m) r).
template <BaseField F>
Line<F> left_anchor(const QuaternionAlgebra<F>& A, const Line<F>& M) {
    const auto m = primitive_multiple(A.field(), M.row(0));
    if (A.norm(m).is_zero()) throw Error(ErrorKind::DivisionByZero, "line point has norm 0");
    return line_span(A, A.one(), A.mul(A.conj(m), primitive_multiple(A.field(), M.row(1))));
}

/// M m^-1, the right-class counterpart of left_anchor.
template <BaseField F>
Line<F> right_anchor(const QuaternionAlgebra<F>& A, const Line<F>& M) {
    const auto m = primitive_multiple(A.field(), M.row(0));
    if (A.norm(m).is_zero()) throw Error(ErrorKind::DivisionByZero, "line point has norm 0");
    return line_span(A, A.one(), A.mul(primitive_multiple(A.field(), M.row(1)), A.conj(m)));
}

template <BaseField F>
Line<F> anchor(const QuaternionAlgebra<F>& A, const Line<F>& M, Side side) {
    return side == Side::Left ? left_anchor(A, M) : right_anchor(A, M);
}

template <BaseField F>
bool is_left_parallel(const QuaternionAlgebra<F>& A, const Line<F>& M1, const Line<F>& M2) {
    return M1 == M2 || left_anchor(A, M1) == left_anchor(A, M2);
}

template <BaseField F>
bool is_right_parallel(const QuaternionAlgebra<F>& A, const Line<F>& M1, const Line<F>& M2) {
    return M1 == M2 || right_anchor(A, M1) == right_anchor(A, M2);
}

template <BaseField F>
bool is_parallel(const QuaternionAlgebra<F>& A, const Line<F>& M1, const Line<F>& M2, Side side) {
    return side == Side::Left ? is_left_parallel(A, M1, M2) : is_right_parallel(A, M1, M2);
}

/// The line of M's side-class through p: x*A for the left class, A'*x for the right.
template <BaseField F>
Line<F> parallel_through(const QuaternionAlgebra<F>& A, const ProjPoint<F>& p, const Line<F>& M, Side side) {
    if (side == Side::Left) return left_multiply(A, p.rep(), left_anchor(A, M));
    return right_multiply(A, right_anchor(A, M), p.rep());
}

/// M-perp under <x,y> = tr(x conj y).
template <BaseField F>
Line<F> orthocomplement(const QuaternionAlgebra<F>& A, const Line<F>& M) {
    const F& f = A.field();
    const auto gram = A.gram_matrix();
    if (determinant(f, gram).is_zero()) throw Error(ErrorKind::DegenerateForm, "bilinear form is degenerate");
    // Row r: coefficients of x in <x, M.row(r)> = sum_a x_a * (G m_r)_a.
    Rows<typename F::element> eqs;
    for (const auto& r : M.rows()) {
        std::vector<typename F::element> coeffs(4, f.zero());
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                if (!r.c[b].is_zero()) coeffs[a] = coeffs[a] + gram[a][b] * r.c[b];
        eqs.push_back(std::move(coeffs));
    }
    auto basis = nullspace(f, std::move(eqs), 4);
    return line_span(f, Quaternion<F>{{basis[0][0], basis[0][1], basis[0][2], basis[0][3]}},
                     Quaternion<F>{{basis[1][0], basis[1][1], basis[1][2], basis[1][3]}});
}

/// Lines through F1: the star, i.e. the maximal subfields.
template <BaseField F>
bool in_star(const QuaternionAlgebra<F>& A, const Line<F>& L) {
    return L.contains(A.field(), A.one());
}

/// The non-scalar generator q of a star line; its echelon basis is (1, q).
template <BaseField F>
Quaternion<F> star_generator(const QuaternionAlgebra<F>& A, const Line<F>& L) {
    if (!in_star(A, L)) throw Error(ErrorKind::NotInStar, "line does not pass through F1");
    return L.row(1);
}

/// In characteristic 2, tr(a + b q) = b tr(q), so tr(q) != 0 is choice-independent.
template <BaseField F>
bool is_separable(const QuaternionAlgebra<F>& A, const Line<F>& L) {
    if (A.characteristic() != 2)
        throw Error(ErrorKind::WrongCharacteristic, "separability is only tracked in characteristic 2");
    return !A.trace(star_generator(A, L)).is_zero();
}

template <BaseField F>
Line<F> random_line(const QuaternionAlgebra<F>& A, SeededRng& rng) {
    for (;;) {
        const auto x = random_quaternion(A, rng);
        const auto y = random_quaternion(A, rng);
        try {
            return line_span(A, x, y);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::DependentVectors) throw;
        }
    }
}

template <BaseField F>
Line<F> random_star_line(const QuaternionAlgebra<F>& A, SeededRng& rng) {
    for (;;) {
        const auto x = random_quaternion(A, rng);
        if (!x.is_scalar()) return line_span(A, A.one(), x);
    }
}

template <BaseField F>
std::string format_line(const F& field, const Line<F>& L) {
    return "span(" + format_quaternion(field, L.row(0)) + ";" + format_quaternion(field, L.row(1)) + ")";
}

}  // namespace cliffpar

#endif
