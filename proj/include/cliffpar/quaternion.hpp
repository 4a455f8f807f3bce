#ifndef CLIFFPAR_QUATERNION_HPP
#define CLIFFPAR_QUATERNION_HPP

#include <array>
#include <optional>
#include <string>

#include "cliffpar/errors.hpp"
#include "cliffpar/fields.hpp"
#include "cliffpar/linalg.hpp"

namespace cliffpar {

/// Coordinates with respect to the basis 1, i, j, k.
template <BaseField F>
struct Quaternion {
    using E = typename F::element;
    std::array<E, 4> c;

    bool is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero() && c[3].is_zero(); }
    bool is_scalar() const { return c[1].is_zero() && c[2].is_zero() && c[3].is_zero(); }

    friend Quaternion operator+(const Quaternion& x, const Quaternion& y) {
        return {{x.c[0] + y.c[0], x.c[1] + y.c[1], x.c[2] + y.c[2], x.c[3] + y.c[3]}};
    }
    friend Quaternion operator-(const Quaternion& x, const Quaternion& y) {
        return {{x.c[0] - y.c[0], x.c[1] - y.c[1], x.c[2] - y.c[2], x.c[3] - y.c[3]}};
    }
    Quaternion operator-() const { return {{-c[0], -c[1], -c[2], -c[3]}}; }
    friend Quaternion operator*(const E& s, const Quaternion& x) {
        return {{s * x.c[0], s * x.c[1], s * x.c[2], s * x.c[3]}};
    }
    friend bool operator==(const Quaternion& x, const Quaternion& y) {
        return x.c[0] == y.c[0] && x.c[1] == y.c[1] && x.c[2] == y.c[2] && x.c[3] == y.c[3];
    }
};

enum class AlgebraFlavor { Ordinary, CyclicChar2 };

/// Quaternion algebra over F given by its 16 structure constants.
///
/// Ordinary(a,b): i^2 = a, j^2 = b, k = ij = -ji (characteristic != 2).
/// CyclicChar2(b): K = F(i) with i^2 = i + 1, j^2 = b, ji = j + k
/// (characteristic 2); the full table is spelled out in cyclic_char2().
template <BaseField F>
class QuaternionAlgebra {
public:
    using E = typename F::element;
    using Q = Quaternion<F>;

    static QuaternionAlgebra ordinary(const F& field, const E& a, const E& b) {
        if (field.characteristic() == 2)
            throw Error(ErrorKind::WrongCharacteristic, "ordinary quaternions need characteristic != 2");
        QuaternionAlgebra A(field, AlgebraFlavor::Ordinary);
        const E o = field.one();
        const E z = field.zero();
        A.param_a_ = a;
        A.param_b_ = b;
        auto q = [](E x0, E x1, E x2, E x3) { return Q{{std::move(x0), std::move(x1), std::move(x2), std::move(x3)}}; };
        // rows: left factor 1,i,j,k; columns: right factor.
        A.table_ = {{
            {q(o, z, z, z), q(z, o, z, z), q(z, z, o, z), q(z, z, z, o)},
            {q(z, o, z, z), q(a, z, z, z), q(z, z, z, o), q(z, z, a, z)},
            {q(z, z, o, z), q(z, z, z, -o), q(b, z, z, z), q(z, -b, z, z)},
            {q(z, z, z, o), q(z, z, -a, z), q(z, b, z, z), q(-(a * b), z, z, z)},
        }};
        A.conj_ = {q(o, z, z, z), q(z, -o, z, z), q(z, z, -o, z), q(z, z, z, -o)};
        return A;
    }

    static QuaternionAlgebra ordinary(const F& field) { return ordinary(field, field.from_int(-1), field.from_int(-1)); }

    static QuaternionAlgebra cyclic_char2(const F& field, const E& b) {
        if (field.characteristic() != 2)
            throw Error(ErrorKind::WrongCharacteristic, "cyclic_char2 needs characteristic 2");
        QuaternionAlgebra A(field, AlgebraFlavor::CyclicChar2);
        const E o = field.one();
        const E z = field.zero();
        A.param_b_ = b;
        auto q = [](E x0, E x1, E x2, E x3) { return Q{{std::move(x0), std::move(x1), std::move(x2), std::move(x3)}}; };
        A.table_ = {{
            {q(o, z, z, z), q(z, o, z, z), q(z, z, o, z), q(z, z, z, o)},
            {q(z, o, z, z), q(o, o, z, z), q(z, z, z, o), q(z, z, o, o)},
            {q(z, z, o, z), q(z, z, o, o), q(b, z, z, z), q(b, b, z, z)},
            {q(z, z, z, o), q(z, z, o, z), q(z, b, z, z), q(b, z, z, z)},
        }};
        A.conj_ = {q(o, z, z, z), q(o, o, z, z), q(z, z, o, z), q(z, z, z, o)};
        return A;
    }

    /// Same algebra with one structure constant replaced (used for negative controls).
    QuaternionAlgebra with_product(int left, int right, const Q& value) const {
        QuaternionAlgebra A = *this;
        A.table_.at(left).at(right) = value;
        A.overridden_ = true;
        return A;
    }

    const F& field() const { return field_; }
    AlgebraFlavor flavor() const { return flavor_; }
    bool overridden() const { return overridden_; }
    int characteristic() const { return field_.characteristic(); }
    const Q& product_of_basis(int a, int b) const { return table_[a][b]; }

    std::string description() const {
        std::string s = flavor_ == AlgebraFlavor::Ordinary
                            ? "ordinary(" + field_.format(*param_a_) + "," + field_.format(param_b_) + ")"
                            : "cyclic_char2(" + field_.format(param_b_) + ")";
        return overridden_ ? s + "+override" : s;
    }

    Q zero() const { return scalar(field_.zero()); }
    Q one() const { return scalar(field_.one()); }
    Q scalar(const E& x) const { return Q{{x, field_.zero(), field_.zero(), field_.zero()}}; }
    Q basis(int n) const {
        Q q = zero();
        q.c.at(n) = field_.one();
        return q;
    }
    Q make(E c0, E c1, E c2, E c3) const { return Q{{std::move(c0), std::move(c1), std::move(c2), std::move(c3)}}; }

    /// Bilinear extension of the structure table.
    Q mul(const Q& x, const Q& y) const {
        Q out = zero();
        for (int a = 0; a < 4; ++a) {
            if (x.c[a].is_zero()) continue;
            for (int b = 0; b < 4; ++b) {
                if (y.c[b].is_zero()) continue;
                const E s = x.c[a] * y.c[b];
                const Q& t = table_[a][b];
                for (int n = 0; n < 4; ++n)
                    if (!t.c[n].is_zero()) out.c[n] = out.c[n] + s * t.c[n];
            }
        }
        return out;
    }

    Q conj(const Q& x) const {
        Q out = zero();
        for (int a = 0; a < 4; ++a) {
            if (x.c[a].is_zero()) continue;
            for (int n = 0; n < 4; ++n)
                if (!conj_[a].c[n].is_zero()) out.c[n] = out.c[n] + x.c[a] * conj_[a].c[n];
        }
        return out;
    }

    E trace(const Q& x) const { return central_part(x + conj(x), "trace"); }
    E norm(const Q& x) const { return central_part(mul(conj(x), x), "norm"); }

    /// x^-1 = conj(x) / N(x).
    Q inverse(const Q& x) const {
        const E n = norm(x);
        if (n.is_zero()) throw Error(ErrorKind::DivisionByZero, "quaternion with zero norm has no inverse");
        return (field_.one() / n) * conj(x);
    }

    /// <x,y> = tr(x conj(y)).
    E bilinear_form(const Q& x, const Q& y) const { return trace(mul(x, conj(y))); }

    /// x^2 - tr(x) x + N(x) = 0.
    bool quadratic_identity_check(const Q& x) const {
        const Q lhs = mul(x, x) - trace(x) * x + scalar(norm(x));
        return lhs.is_zero();
    }

    Rows<E> gram_matrix() const {
        Rows<E> g(4, std::vector<E>(4, field_.zero()));
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) g[a][b] = bilinear_form(basis(a), basis(b));
        return g;
    }

    E gram_determinant() const { return determinant(field_, gram_matrix()); }

    /// First basis triple (a,b,c) with (ab)c != a(bc), if any.
    std::optional<std::array<int, 3>> find_nonassociative_triple() const {
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int c = 0; c < 4; ++c)
                    if (!(mul(mul(basis(a), basis(b)), basis(c)) == mul(basis(a), mul(basis(b), basis(c)))))
                        return std::array<int, 3>{a, b, c};
        return std::nullopt;
    }

    bool unit_is_two_sided() const {
        for (int a = 0; a < 4; ++a)
            if (!(mul(one(), basis(a)) == basis(a)) || !(mul(basis(a), one()) == basis(a))) return false;
        return true;
    }

    /// Dimension of the centralizer of {i, j}; 1 exactly when the centre is F.
    std::size_t centralizer_dimension() const {
        Rows<E> eqs;
        for (int g : {1, 2}) {
            // Columns: coordinates of x; rows: coordinates of x*g - g*x.
            Rows<E> block(4, std::vector<E>(4, field_.zero()));
            for (int a = 0; a < 4; ++a) {
                const Q d = mul(basis(a), basis(g)) - mul(basis(g), basis(a));
                for (int n = 0; n < 4; ++n) block[n][a] = d.c[n];
            }
            for (auto& row : block) eqs.push_back(std::move(row));
        }
        return nullspace(field_, std::move(eqs), 4).size();
    }

    friend bool operator==(const QuaternionAlgebra& x, const QuaternionAlgebra& y) {
        if (!(x.field_ == y.field_) || x.flavor_ != y.flavor_) return false;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                if (!(x.table_[a][b] == y.table_[a][b])) return false;
        return true;
    }

private:
    QuaternionAlgebra(const F& field, AlgebraFlavor flavor)
        : field_(field), flavor_(flavor), param_b_(field.zero()) {}

    E central_part(const Q& x, const char* what) const {
        if (!x.is_scalar())
            throw Error(ErrorKind::NotCentral, std::string(what) + " left the centre; structure table is broken");
        return x.c[0];
    }

    F field_;
    AlgebraFlavor flavor_;
    std::optional<E> param_a_;
    E param_b_;
    bool overridden_ = false;
    std::array<std::array<Q, 4>, 4> table_;
    std::array<Q, 4> conj_;
};

template <BaseField F>
void require_same_algebra(const QuaternionAlgebra<F>& x, const QuaternionAlgebra<F>& y) {
    if (!(x == y)) throw Error(ErrorKind::AlgebraMismatch, x.description() + " vs " + y.description());
}

template <BaseField F>
Quaternion<F> random_quaternion(const QuaternionAlgebra<F>& A, SeededRng& rng) {
    const F& f = A.field();
    return A.make(f.random(rng), f.random(rng), f.random(rng), f.random(rng));
}

template <BaseField F>
Quaternion<F> random_nonzero_quaternion(const QuaternionAlgebra<F>& A, SeededRng& rng) {
    for (;;) {
        auto q = random_quaternion(A, rng);
        if (!q.is_zero()) return q;
    }
}

/// Renders "c0+c1*i+c2*j+c3*k", dropping zero terms and unit coefficients.
template <BaseField F>
std::string format_quaternion(const F& field, const Quaternion<F>& x) {
    static constexpr const char* names[4] = {"", "i", "j", "k"};
    std::string out;
    for (int n = 0; n < 4; ++n) {
        if (x.c[n].is_zero()) continue;
        std::string coef = field.format(x.c[n]);
        std::string term;
        if (n == 0) {
            term = coef;
        } else if (coef == "1") {
            term = names[n];
        } else if (coef == "-1") {
            term = std::string("-") + names[n];
        } else {
            const bool compound = coef.find_first_of("+-", 1) != std::string::npos;
            const bool fraction_of_sum = coef.find('(') != std::string::npos;
            term = (compound || fraction_of_sum ? "(" + coef + ")" : coef) + "*" + names[n];
        }
        if (out.empty()) {
            out = term;
        } else if (term[0] == '-') {
            out += term;
        } else {
            out += "+" + term;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace cliffpar

#endif
