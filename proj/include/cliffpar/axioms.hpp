#ifndef CLIFFPAR_AXIOMS_HPP
#define CLIFFPAR_AXIOMS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <type_traits>
#include <vector>

#include "cliffpar/automorphisms.hpp"
#include "cliffpar/config.hpp"
#include "cliffpar/report.hpp"

namespace cliffpar {

/// A named, seeded property check. `base_count` is the number of samples
/// drawn when the suite runs with samples = 100.
template <BaseField F>
struct Property {
    std::string name;
    int base_count;
    std::function<Outcome(const Environment<F>&, int, SeededRng&)> run;
};

namespace props {

template <BaseField F>
using Elem = typename F::element;

template <BaseField F>
std::string show(const F& f, const Quaternion<F>& x) {
    return format_quaternion(f, x);
}

template <BaseField F>
Elem<F> nonzero_element(const F& f, SeededRng& rng) {
    for (;;) {
        auto x = f.random(rng);
        if (!x.is_zero()) return x;
    }
}

/// Random element, half of the time a quotient of two random elements.
template <BaseField F>
Elem<F> sample_element(const F& f, SeededRng& rng) {
    auto x = f.random(rng);
    if (rng.coin()) x = x / nonzero_element(f, rng);
    return x;
}

/// Integer of absolute value <= height, or a polynomial of degree <= 1 in
/// characteristic 2.
template <BaseField F>
Elem<F> small_element(const F& f, SeededRng& rng, int height = 2) {
    const auto coeffs = small_coefficients(f, height);
    return coeffs[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(coeffs.size()) - 1))];
}

template <BaseField F>
Quaternion<F> small_quaternion(const QuaternionAlgebra<F>& A, SeededRng& rng, int height = 2) {
    const F& f = A.field();
    for (;;) {
        auto q = A.make(small_element(f, rng, height), small_element(f, rng, height), small_element(f, rng, height),
                        small_element(f, rng, height));
        if (!q.is_zero()) return q;
    }
}

template <BaseField F>
Quaternion<F> point_in(const QuaternionAlgebra<F>& A, const Line<F>& L, SeededRng& rng) {
    const F& f = A.field();
    for (;;) {
        auto x = small_element(f, rng) * L.row(0) + small_element(f, rng) * L.row(1);
        if (!x.is_zero()) return x;
    }
}

/// A line that is left-parallel to a defining rep half of the time (when
/// there is one), otherwise uniformly random.
template <BaseField F>
Line<F> sample_line(const Environment<F>& env, SeededRng& rng) {
    const auto& A = env.algebra;
    const auto& reps = env.parallelism.defining().reps;
    if (!reps.empty() && rng.coin()) {
        const auto& rep = reps[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(reps.size()) - 1))];
        return left_multiply(A, small_quaternion(A, rng), conjugate_line(A, rep, small_quaternion(A, rng)));
    }
    return random_line(A, rng);
}

inline std::string lines(std::initializer_list<std::string> parts) {
    std::string s;
    for (const auto& p : parts) s += (s.empty() ? "" : ", ") + p;
    return s;
}

// ---------------------------------------------------------------- fields

template <BaseField F>
Outcome arithmetic_laws(const Environment<F>& env, int count, SeededRng& rng) {
    const F& f = env.field;
    for (int n = 0; n < count; ++n) {
        const auto x = sample_element(f, rng);
        const auto y = sample_element(f, rng);
        const auto z = sample_element(f, rng);
        const char* law = nullptr;
        if (!(x + y == y + x)) law = "x+y = y+x";
        else if (!(x * y == y * x)) law = "xy = yx";
        else if (!((x + y) + z == x + (y + z))) law = "(x+y)+z = x+(y+z)";
        else if (!((x * y) * z == x * (y * z))) law = "(xy)z = x(yz)";
        else if (!(x * (y + z) == x * y + x * z)) law = "x(y+z) = xy+xz";
        else if (!(x - x == f.zero()) || !(x + f.zero() == x) || !(x * f.one() == x)) law = "identities";
        if (law)
            return Outcome::fail(std::string(law) + " fails for x=" + f.format(x) + ", y=" + f.format(y) +
                                 ", z=" + f.format(z));
    }
    return Outcome::pass();
}

template <BaseField F>
Outcome inverses(const Environment<F>& env, int count, SeededRng& rng) {
    const F& f = env.field;
    for (int n = 0; n < count; ++n) {
        auto x = sample_element(f, rng);
        if (x.is_zero()) x = f.one();
        if (!(x * field_arith(f, ArithOp::Inv, x, x) == f.one()) || !(field_arith(f, ArithOp::Div, x, x) == f.one()))
            return Outcome::fail("x * inv(x) != 1 for x=" + f.format(x));
    }
    return Outcome::pass();
}

/// Bounded root search: absent means no root of small height/degree.
inline std::optional<Rational> search_root(const RationalField&, const Rational& z) {
    for (long q = 1; q <= 50; ++q)
        for (long p = 0; p <= 50; ++p) {
            const Rational r{mpz_class(p), mpz_class(q)};
            if (r * r == z) return r;
        }
    return std::nullopt;
}

inline std::optional<QuadExtElem> search_root(const QuadField& f, const QuadExtElem& z) {
    if (!z.a().is_integer() || !z.b().is_integer() || !z.a().numerator().fits_slong_p() ||
        !z.b().numerator().fits_slong_p())
        return std::nullopt;
    const long za = z.a().numerator().get_si();
    const long zb = z.b().numerator().get_si();
    for (long a = -50; a <= 50; ++a)
        for (long b = -50; b <= 50; ++b)
            if (a * a + f.m() * b * b == za && 2 * a * b == zb) return QuadExtElem(Rational(a), Rational(b), f.m());
    return std::nullopt;
}

inline std::vector<F2Poly> all_polynomials(int degree) {
    const auto ms = monomials_up_to(degree);
    std::vector<F2Poly> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ms.size()); ++mask) {
        std::vector<Monomial> pick;
        for (std::size_t n = 0; n < ms.size(); ++n)
            if ((mask >> n) & 1U) pick.push_back(ms[n]);
        out.push_back(F2Poly::from_monomials(std::move(pick)));
    }
    return out;
}

inline std::optional<F2RatFun> search_root(const F2TUField&, const F2RatFun& z) {
    if (!z.is_polynomial()) return std::nullopt;
    const int d = std::min(4, std::max(0, z.num().degree() / 2));
    for (const auto& r : all_polynomials(std::min(d, 2)))
        if (r * r == z.num()) return F2RatFun(r);
    return std::nullopt;
}

template <BaseField F>
Outcome square_roots(const Environment<F>& env, int count, SeededRng& rng) {
    const F& f = env.field;
    for (int n = 0; n < count; ++n) {
        const auto y = sample_element(f, rng);
        const auto sq = y * y;
        const auto r = is_square(f, sq);
        if (!r || !(*r * *r == sq)) return Outcome::fail("no valid root found for the square " + f.format(sq));
        const auto z = f.random(rng);
        if (auto s = is_square(f, z)) {
            if (!(*s * *s == z)) return Outcome::fail("returned root of " + f.format(z) + " does not square back");
        } else if (auto w = search_root(f, z)) {
            return Outcome::fail(f.format(z) + " reported non-square but " + f.format(*w) + " squares to it");
        }
    }
    return Outcome::pass();
}

template <BaseField F>
Outcome galois_involution(const Environment<F>& env, int count, SeededRng& rng) {
    const F& f = env.field;
    if (!f.has_galois()) return Outcome::skip(f.name() + " has no Galois involution");
    for (int n = 0; n < count; ++n) {
        const auto x = sample_element(f, rng);
        const auto y = sample_element(f, rng);
        const auto gx = galois_apply(f, x);
        const auto gy = galois_apply(f, y);
        if (!(galois_apply(f, gx) == x) || !(galois_apply(f, x + y) == gx + gy) ||
            !(galois_apply(f, x * y) == gx * gy) || !(galois_apply(f, f.one()) == f.one()))
            return Outcome::fail("x=" + f.format(x) + ", y=" + f.format(y));
    }
    return Outcome::pass();
}

inline F2Poly random_poly(SeededRng& rng, int degree) {
    std::vector<Monomial> ms;
    for (const auto& m : monomials_up_to(degree))
        if (rng.coin()) ms.push_back(m);
    return F2Poly::from_monomials(std::move(ms));
}

template <BaseField F>
Outcome artin_schreier(const Environment<F>&, int count, SeededRng& rng) {
    if constexpr (!std::is_same_v<F, F2TUField>) {
        return Outcome::skip("characteristic 2 only");
    } else {
        for (int n = 0; n < count; ++n) {
            F2Poly p;
            bool solvable = rng.coin();
            if (solvable) {
                const F2Poly d = random_poly(rng, 2);
                p = d.square() + d;
            } else {
                p = random_poly(rng, 4);
            }
            const auto d = artin_schreier_solve(p);
            if (d) {
                if (!(d->square() + *d == p)) return Outcome::fail("bad root " + d->to_string() + " for " + p.to_string());
                continue;
            }
            if (solvable) return Outcome::fail("missed a root of d^2+d = " + p.to_string());
            const int bound = (std::max(p.degree(), 0) + 1) / 2;
            for (const auto& c : all_polynomials(bound))
                if (c.square() + c == p)
                    return Outcome::fail(p.to_string() + " reported unsolvable but d=" + c.to_string() + " works");
        }
        return Outcome::pass();
    }
}

template <BaseField F>
Outcome artin_schreier_rational(const Environment<F>& env, int count, SeededRng& rng) {
    if constexpr (!std::is_same_v<F, F2TUField>) {
        return Outcome::skip("characteristic 2 only");
    } else {
        const F& f = env.field;
        for (int n = 0; n < count; ++n) {
            F2Poly den = random_poly(rng, 2);
            if (den.is_zero()) den = F2Poly::one();
            const F2RatFun d(random_poly(rng, 2), den);
            const F2RatFun target = d * d + d;
            const auto e = artin_schreier_solve_rational(target);
            if (!e || !(*e * *e + *e == target))
                return Outcome::fail("no valid root for " + f.format(target) + " although " + f.format(d) + " works");
            const F2RatFun other = sample_element(f, rng);
            if (auto r = artin_schreier_solve_rational(other); r && !(*r * *r + *r == other))
                return Outcome::fail("bad root " + f.format(*r) + " for " + f.format(other));
        }
        return Outcome::pass();
    }
}

template <BaseField F>
Outcome frobenius_recombination(const Environment<F>& env, int count, SeededRng& rng) {
    if constexpr (!std::is_same_v<F, F2TUField>) {
        return Outcome::skip("characteristic 2 only");
    } else {
        const F& f = env.field;
        const F2RatFun t(F2Poly::monomial(1, 0));
        const F2RatFun u(F2Poly::monomial(0, 1));
        for (int n = 0; n < count; ++n) {
            const auto x = sample_element(f, rng);
            const auto s = frobenius_coordinates(x);
            if (!(s[0] * s[0] + s[1] * s[1] * t + s[2] * s[2] * u + s[3] * s[3] * t * u == x))
                return Outcome::fail("coordinates of " + f.format(x) + " do not recombine");
        }
        return Outcome::pass();
    }
}

template <BaseField F>
Outcome leading_pair_product(const Environment<F>&, int count, SeededRng& rng) {
    if constexpr (!std::is_same_v<F, F2TUField>) {
        return Outcome::skip("characteristic 2 only");
    } else {
        for (int n = 0; n < count; ++n) {
            F2Poly a = random_poly(rng, 3);
            F2Poly b = random_poly(rng, 3);
            if (a.is_zero()) a = F2Poly::one();
            if (b.is_zero()) b = F2Poly::one();
            const auto [ma, na] = t_leading_pair(a);
            const auto [mb, nb] = t_leading_pair(b);
            const auto [mc, nc] = t_leading_pair(a * b);
            if (mc != ma + mb || nc != na + nb) return Outcome::fail("p1=" + a.to_string() + ", p2=" + b.to_string());
        }
        return Outcome::pass();
    }
}

// ------------------------------------------------------------ quaternions

template <BaseField F>
Outcome table_associativity(const Environment<F>& env, int, SeededRng&) {
    static const char* names[4] = {"1", "i", "j", "k"};
    if (auto t = env.algebra.find_nonassociative_triple()) {
        const auto [a, b, c] = *t;
        return Outcome::fail(std::string("(") + names[a] + "*" + names[b] + ")*" + names[c] + " != " + names[a] +
                             "*(" + names[b] + "*" + names[c] + ")");
    }
    return Outcome::pass("64 basis triples");
}

template <BaseField F>
Outcome two_sided_identity(const Environment<F>& env, int count, SeededRng& rng) {
    const auto& A = env.algebra;
    if (!A.unit_is_two_sided()) return Outcome::fail("1 is not a two-sided identity on the basis");
    for (int n = 0; n < count; ++n) {
        const auto x = random_quaternion(A, rng);
        if (!(A.mul(A.one(), x) == x) || !(A.mul(x, A.one()) == x)) return Outcome::fail("x=" + show(A.field(), x));
    }
    return Outcome::pass();
}

template <BaseField F>
Outcome bilinearity(const Environment<F>& env, int count, SeededRng& rng) {
    const auto& A = env.algebra;
    const F& f = A.field();
    for (int n = 0; n < count; ++n) {
        const auto x = random_quaternion(A, rng);
        const auto y = random_quaternion(A, rng);
        const auto z = random_quaternion(A, rng);
        const auto c = f.random(rng);
        if (!(A.mul(c * x + y, z) == c * A.mul(x, z) + A.mul(y, z)) ||
            !(A.mul(z, c * x + y) == c * A.mul(z, x) + A.mul(z, y)))
            return Outcome::fail(lines({"x=" + show(f, x), "y=" + show(f, y), "z=" + show(f, z), "c=" + f.format(c)}));
    }
    return Outcome::pass();
}

template <BaseField F>
Outcome trace_norm_central(const Environment<F>& env, int count, SeededRng& rng) {
    const auto& A = env.algebra;
    for (int n = 0; n < count; ++n) {
        const auto x = random_quaternion(A, rng);
        try {
            (void)A.trace(x);
            (void)A.norm(x);
        } catch (const Error& e) {
            return Outcome::fail("x=" + show(A.field(), x) + ": " + e.what());
        }
    }
    return Outcome::pass();
}

template <BaseField F>
Outcome norm_multiplicative(const Environment<F>& env, int count, SeededRng& rng) {
    const auto& A = env.algebra;
    for (int n = 0; n < count; ++n) {
        const auto x = random_quaternion(A, rng);
        const auto y = random_quaternion(A, rng);
        if (!(A.norm(A.mul(x, y)) == A.norm(x) * A.norm(y)))
            return Outcome::fail("x=" + show(A.field(), x) + ", y=" + show(A.field(), y));
    }
    return Outcome::pass();
}

template <BaseField F>
Outcome conjugation_antiautomorphism(const Environment<F>& env, int count, SeededRng& rng) {
    const auto& A = env.algebra;
    for (int n = 0; n < count; ++n) {
        const auto x = random_quaternion(A, rng);
        const auto y = random_quaternion(A, rng);
        if (!(A.conj(A.mul(x, y)) == A.mul(A.conj(y), A.conj(x))) || !(A.conj(A.conj(x)) == x))
            return Outcome::fail("x=" + show(A.field(), x) + ", y=" + show(A.field(), y));
    }
    return Outcome::pass();
}

template <BaseField F>
Outcome quadratic_identity(const Environment<F>& env, int count, SeededRng& rng) {
    const auto& A = env.algebra;
    for (int n = 0; n < count; ++n) {
        const auto x = random_quaternion(A, rng);
        if (!A.quadratic_identity_check(x)) return Outcome::fail("x=" + show(A.field(), x));
    }
    return Outcome::pass();
}

template <BaseField F>
Outcome division_property(const Environment<F>& env, int count, SeededRng& rng) {
    const auto& A = env.algebra;
    for (int n = 0; n < count; ++n) {
        const auto x = random_nonzero_quaternion(A, rng);
        if (A.norm(x).is_zero()) return Outcome::fail("N(x) = 0 for x=" + show(A.field(), x));
    }
    return Outcome::pass();
}

template <BaseField F>
Outcome inverse_law(const Environment<F>& env, int count, SeededRng& rng) {
    const auto& A = env.algebra;
    for (int n = 0; n < count; ++n) {
        const auto x = random_nonzero_quaternion(A, rng);
        const auto xi = A.inverse(x);
        if (!(A.mul(x, xi) == A.one()) || !(A.mul(xi, x) == A.one())) return Outcome::fail("x=" + show(A.field(), x));
    }
    return Outcome::pass();
}

template <BaseField F>
Outcome bilinear_form_laws(const Environment<F>& env, int count, SeededRng& rng) {
    const auto& A = env.algebra;
    const F& f = A.field();
    for (int n = 0; n < count; ++n) {
        const auto x = random_quaternion(A, rng);
        const auto y = random_quaternion(A, rng);
        if (!(A.bilinear_form(x, y) == A.bilinear_form(y, x)) ||
            !(A.bilinear_form(x, x) == f.from_int(2) * A.norm(x)))
            return Outcome::fail("x=" + show(f, x) + ", y=" + show(f, y));
    }
    return Outcome::pass();
}

template <BaseField F>
Outcome gram_nondegenerate(const Environment<F>& env, int, SeededRng&) {
    const auto det = env.algebra.gram_determinant();
    if (det.is_zero()) return Outcome::fail("Gram determinant on 1,i,j,k is 0");
    return Outcome::pass("det = " + env.field.format(det));
}

template <BaseField F>
Outcome centre_is_base_field(const Environment<F>& env, int, SeededRng&) {
    const auto dim = env.algebra.centralizer_dimension();
    if (dim != 1) return Outcome::fail("centralizer of {i,j} has dimension " + std::to_string(dim));
    return Outcome::pass();
}

// --------------------------------------------------------------- geometry

template <BaseField F>
Outcome anchor_well_defined(const Environment<F>& env, int count, SeededRng& rng) {
    const auto& A = env.algebra;
    for (int n = 0; n < count; ++n) {
        const auto M = random_line(A, rng);
        const auto m1 = point_in(A, M, rng);
        const auto m2 = point_in(A, M, rng);
        if (!(left_multiply(A, A.conj(m1), M) == left_multiply(A, A.conj(m2), M)) ||
            !(right_multiply(A, M, A.conj(m1)) == right_multiply(A, M, A.conj(m2))))
            return Outcome::fail("M=" + format_line(A.field(), M) + ", m=" + show(A.field(), m1) +
                                 ", m'=" + show(A.field(), m2));
    }
    return Outcome::pass();
}

template <BaseField F>
Outcome anchors_conjugate(const Environment<F>& env, int count, SeededRng& rng) {
    const auto& A = env.algebra;
    for (int n = 0; n < count; ++n) {
        const auto M = random_line(A, rng);
        const auto m = point_in(A, M, rng);
        if (!(left_anchor(A, M) == conjugate_line(A, right_anchor(A, M), m)))
            return Outcome::fail("M=" + format_line(A.field(), M) + ", m=" + show(A.field(), m));
    }
    return Outcome::pass();
}

template <BaseField F>
Outcome side_parallel_equivalence(const Environment<F>& env, int count, SeededRng& rng, Side side) {
    const auto& A = env.algebra;
    const F& f = A.field();
    auto move = [&](const Line<F>& M) {
        const auto g = small_quaternion(A, rng);
        return side == Side::Left ? left_multiply(A, g, M) : right_multiply(A, M, g);
    };
    for (int n = 0; n < count; ++n) {
        const auto M1 = random_line(A, rng);
        const auto M2 = move(M1);
        const auto M3 = rng.coin() ? move(M2) : random_line(A, rng);
        const bool p12 = is_parallel(A, M1, M2, side);
        const bool p21 = is_parallel(A, M2, M1, side);
        const bool p23 = is_parallel(A, M2, M3, side);
        const bool p13 = is_parallel(A, M1, M3, side);
        const bool p31 = is_parallel(A, M3, M1, side);
        const auto w = [&] { return std::string(lines({format_line(f, M1), format_line(f, M2), format_line(f, M3)})); };
        if (!is_parallel(A, M1, M1, side)) return Outcome::fail("not reflexive: " + w());
        if (!p12) return Outcome::fail("translate not parallel: " + w());
        if (p12 != p21 || p13 != p31) return Outcome::fail("not symmetric: " + w());
        if (p12 && p23 && !p13) return Outcome::fail("not transitive: " + w());
    }
    return Outcome::pass();
}

template <BaseField F>
Outcome mixed_translation(const Environment<F>& env, int count, SeededRng& rng) {
    const auto& A = env.algebra;
    for (int n = 0; n < count; ++n) {
        const auto M = random_line(A, rng);
        const auto g = small_quaternion(A, rng);
        const auto h = small_quaternion(A, rng);
        if (!(right_anchor(A, left_multiply(A, g, M)) == right_anchor(A, left_multiply(A, g, right_multiply(A, M, h)))))
            return Outcome::fail("M=" + format_line(A.field(), M) + ", g=" + show(A.field(), g) +
                                 ", h=" + show(A.field(), h));
    }
    return Outcome::pass();
}

template <BaseField F>
Outcome spread_property(const Environment<F>& env, int count, SeededRng& rng) {
    const auto& A = env.algebra;
    const F& f = A.field();
    for (int n = 0; n < count; ++n) {
        const auto M = random_line(A, rng);
        const ProjPoint<F> p(f, small_quaternion(A, rng));
        const auto m = point_in(A, M, rng);
        for (Side side : {Side::Left, Side::Right}) {
            const auto N = parallel_through(A, p, M, side);
            const auto w = [&] { return std::string("p=" + show(f, p.rep()) + ", M=" + format_line(f, M)); };
            if (!N.contains(f, p.rep()) || !is_parallel(A, N, M, side)) return Outcome::fail("wrong parallel: " + w());
            // Another class member through p, built independently.
            const auto other = side == Side::Left ? left_multiply(A, A.mul(p.rep(), A.conj(m)), M)
                                                  : right_multiply(A, M, A.mul(A.conj(m), p.rep()));
            if (!(other == N)) return Outcome::fail("second parallel through p: " + w());
        }
    }
    return Outcome::pass();
}

template <BaseField F>
Outcome star_closed(const Environment<F>& env, int count, SeededRng& rng) {
    const auto& A = env.algebra;
    for (int n = 0; n < count; ++n) {
        const auto L = random_star_line(A, rng);
        const auto x = point_in(A, L, rng);
        const auto y = point_in(A, L, rng);
        if (!L.contains(A.field(), A.mul(x, y)))
            return Outcome::fail("L=" + format_line(A.field(), L) + ", x=" + show(A.field(), x) +
                                 ", y=" + show(A.field(), y));
    }
    return Outcome::pass();
}

template <BaseField F>
Outcome polarity(const Environment<F>& env, int count, SeededRng& rng) {
    const auto& A = env.algebra;
    for (int n = 0; n < count; ++n) {
        const auto M = random_line(A, rng);
        const auto P = orthocomplement(A, M);
        const auto w = [&] { return std::string("M=" + format_line(A.field(), M)); };
        if (!is_left_parallel(A, M, P)) return Outcome::fail("M not left-parallel to its perp: " + w());
        if (!is_right_parallel(A, M, P)) return Outcome::fail("M not right-parallel to its perp: " + w());
        if (!(orthocomplement(A, P) == M)) return Outcome::fail("perp is not involutive: " + w());
    }
    return Outcome::pass();
}

template <BaseField F>
Outcome scale_invariance(const Environment<F>& env, int count, SeededRng& rng) {
    const auto& A = env.algebra;
    const F& f = A.field();
    for (int n = 0; n < count; ++n) {
        const auto M = random_line(A, rng);
        const auto c = nonzero_element(f, rng);
        const auto d = nonzero_element(f, rng);
        const auto x = random_nonzero_quaternion(A, rng);
        if (!(line_span(A, c * M.row(0), d * M.row(1)) == M) || !(ProjPoint<F>(f, c * x) == ProjPoint<F>(f, x)))
            return Outcome::fail("M=" + format_line(f, M) + ", c=" + f.format(c) + ", d=" + f.format(d));
    }
    return Outcome::pass();
}

// ------------------------------------------------------------ parallelisms

template <BaseField F>
Outcome defining_set_valid(const Environment<F>& env, int, SeededRng&) {
    const auto& P = env.parallelism;
    const auto report = validate_defining_set(P.defining(), P.algebra());
    if (!report.valid) return Outcome::fail(report.violations.front());
    for (const auto& rep : P.defining().reps)
        if (!in_defining_set(rep, P)) return Outcome::fail("rep not in its own set: " + format_line(env.field, rep));
    return Outcome::pass(std::to_string(P.defining().reps.size()) + " reps");
}

template <BaseField F>
Outcome conjugacy_equivalence(const Environment<F>& env, int count, SeededRng& rng) {
    const auto& A = env.algebra;
    const F& f = A.field();
    for (int n = 0; n < count; ++n) {
        const auto L1 = random_star_line(A, rng);
        const auto L2 = conjugate_line(A, L1, small_quaternion(A, rng));
        const auto L3 = conjugate_line(A, L2, small_quaternion(A, rng));
        const auto L4 = random_star_line(A, rng);
        const auto w = [&] { return std::string(lines({format_line(f, L1), format_line(f, L2), format_line(f, L3), format_line(f, L4)})); };
        if (!conjugate_lines(A, L1, L1)) return Outcome::fail("not reflexive: " + w());
        const bool c12 = conjugate_lines(A, L1, L2);
        const bool c23 = conjugate_lines(A, L2, L3);
        if (!c12 || !c23) return Outcome::fail("conjugate pair rejected: " + w());
        if (!conjugate_lines(A, L1, L3)) return Outcome::fail("not transitive: " + w());
        if (conjugate_lines(A, L1, L4) != conjugate_lines(A, L4, L1)) return Outcome::fail("not symmetric: " + w());
        if (conjugate_lines(A, L3, L4) != conjugate_lines(A, L1, L4)) return Outcome::fail("orbit-inconsistent: " + w());
    }
    return Outcome::pass();
}

template <BaseField F>
Outcome inner_soundness(const Environment<F>& env, int count, SeededRng& rng) {
    const auto& A = env.algebra;
    for (int n = 0; n < count; ++n) {
        const auto L = random_star_line(A, rng);
        const auto h = random_nonzero_quaternion(A, rng);
        if (!conjugate_lines(A, L, conjugate_line(A, L, h)))
            return Outcome::fail("L=" + format_line(A.field(), L) + ", h=" + show(A.field(), h));
    }
    return Outcome::pass();
}

template <BaseField F>
Outcome class_kind_consistency(const Environment<F>& env, int count, SeededRng& rng) {
    const auto& P = env.parallelism;
    int left = 0;
    for (int n = 0; n < count; ++n) {
        const auto M = sample_line(env, rng);
        const Side k = class_kind(M, P);
        if (k != class_kind_via_right_anchor(M, P)) return Outcome::fail("M=" + format_line(env.field, M));
        left += k == Side::Left;
    }
    return Outcome::pass(std::to_string(left) + " left / " + std::to_string(count - left) + " right");
}

template <BaseField F>
Outcome parallel_equivalence(const Environment<F>& env, int count, SeededRng& rng) {
    const auto& A = env.algebra;
    const auto& P = env.parallelism;
    const F& f = A.field();
    for (int n = 0; n < count; ++n) {
        const auto M1 = sample_line(env, rng);
        const auto M2 = parallel_through(ProjPoint<F>(f, small_quaternion(A, rng)), M1, P);
        const auto M3 = rng.coin() ? parallel_through(ProjPoint<F>(f, small_quaternion(A, rng)), M2, P)
                                   : sample_line(env, rng);
        const auto w = [&] { return std::string(lines({format_line(f, M1), format_line(f, M2), format_line(f, M3)})); };
        if (!are_parallel(M1, M1, P)) return Outcome::fail("not reflexive: " + w());
        const bool p12 = are_parallel(M1, M2, P);
        if (!p12 || !are_parallel(M2, M1, P)) return Outcome::fail("class member not parallel: " + w());
        const bool p13 = are_parallel(M1, M3, P);
        if (p13 != are_parallel(M3, M1, P)) return Outcome::fail("not symmetric: " + w());
        if (are_parallel(M2, M3, P) && !p13) return Outcome::fail("not transitive: " + w());
    }
    return Outcome::pass();
}

template <BaseField F>
Outcome parallelism_axiom(const Environment<F>& env, int count, SeededRng& rng) {
    const auto& A = env.algebra;
    const auto& P = env.parallelism;
    const F& f = A.field();
    for (int n = 0; n < count; ++n) {
        const auto M = sample_line(env, rng);
        const ProjPoint<F> p(f, small_quaternion(A, rng));
        const auto N = parallel_through(p, M, P);
        const auto w = [&] { return std::string("p=" + show(f, p.rep()) + ", M=" + format_line(f, M)); };
        if (!N.contains(f, p.rep()) || !are_parallel(M, N, P)) return Outcome::fail("no class line through p: " + w());
        // Both Clifford candidates through p; whichever lies in the class must be N.
        const auto m = point_in(A, M, rng);
        for (const auto& other : {left_multiply(A, A.mul(p.rep(), A.conj(m)), M),
                                  right_multiply(A, M, A.mul(A.conj(m), p.rep()))})
            if (are_parallel(M, other, P) && !(other == N)) return Outcome::fail("two class lines through p: " + w());
    }
    return Outcome::pass();
}

template <BaseField F>
Outcome refines_clifford(const Environment<F>& env, int count, SeededRng& rng) {
    const auto& A = env.algebra;
    const auto& P = env.parallelism;
    const F& f = A.field();
    for (int n = 0; n < count; ++n) {
        const auto M1 = sample_line(env, rng);
        const auto M2 = rng.coin() ? parallel_through(ProjPoint<F>(f, small_quaternion(A, rng)), M1, P)
                                   : sample_line(env, rng);
        if (are_parallel(M1, M2, P) && !is_left_parallel(A, M1, M2) && !is_right_parallel(A, M1, M2))
            return Outcome::fail(lines({format_line(f, M1), format_line(f, M2)}));
    }
    return Outcome::pass();
}

template <BaseField F>
Outcome inner_and_translation_preserve_classes(const Environment<F>& env, int count, SeededRng& rng) {
    const auto& A = env.algebra;
    const auto& P = env.parallelism;
    const F& f = A.field();
    for (int n = 0; n < count; ++n) {
        const auto M1 = sample_line(env, rng);
        const auto M2 = parallel_through(ProjPoint<F>(f, small_quaternion(A, rng)), M1, P);
        const auto h = small_quaternion(A, rng);
        const auto g = small_quaternion(A, rng);
        const auto w = [&] { return std::string(lines({format_line(f, M1), format_line(f, M2), "h=" + show(f, h), "g=" + show(f, g)})); };
        if (!are_parallel(conjugate_line(A, M1, h), conjugate_line(A, M2, h), P))
            return Outcome::fail("inner image splits a class: " + w());
        if (!are_parallel(left_multiply(A, g, M1), left_multiply(A, g, M2), P))
            return Outcome::fail("left translation splits a class: " + w());
    }
    return Outcome::pass();
}

// ------------------------------------------------------------ automorphisms

template <BaseField F>
SemilinearMap<F> random_map(const QuaternionAlgebra<F>& A, SeededRng& rng) {
    auto beta = left_translation(A, random_nonzero_quaternion(A, rng)) * inner(A, random_nonzero_quaternion(A, rng));
    if (A.field().has_galois() && rng.coin()) beta = beta * galois_outer(A);
    if (rng.coin()) beta = beta * conjugation(A);
    return beta;
}

/// Random linear map with random basis images; almost never a ring map.
template <BaseField F>
SemilinearMap<F> random_linear_map(const QuaternionAlgebra<F>& A, SeededRng& rng) {
    for (;;) {
        try {
            return SemilinearMap<F>::from_images(
                A, {small_quaternion(A, rng), small_quaternion(A, rng), small_quaternion(A, rng), small_quaternion(A, rng)},
                Sigma::Identity);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotInvertible) throw;
        }
    }
}

template <BaseField F>
Outcome factorize_roundtrip(const Environment<F>& env, int count, SeededRng& rng) {
    const auto& A = env.algebra;
    for (int n = 0; n < count; ++n) {
        const auto beta = rng.coin() ? random_map(A, rng) : random_linear_map(A, rng);
        const auto fz = factorize(beta);
        if (!(fz.translation_part == beta.apply(A.one())) || !(fz.unit_part.apply(A.one()) == A.one()) ||
            !(left_translation(A, fz.translation_part) * fz.unit_part == beta))
            return Outcome::fail("sample " + std::to_string(n) + ", beta(1)=" + show(A.field(), beta.apply(A.one())));
    }
    return Outcome::pass();
}

template <BaseField F>
Outcome classify_inner(const Environment<F>& env, int count, SeededRng& rng) {
    const auto& A = env.algebra;
    for (int n = 0; n < count; ++n) {
        const auto h = random_nonzero_quaternion(A, rng);
        const auto in = inner(A, h);
        if (classify(in) != MapKind::Automorphism) return Outcome::fail("inner(h) not an automorphism, h=" + show(A.field(), h));
        if (classify(in * conjugation(A)) != MapKind::Antiautomorphism)
            return Outcome::fail("inner(h) o conj not an antiautomorphism, h=" + show(A.field(), h));
    }
    return Outcome::pass();
}

template <BaseField F>
Outcome class_image(const Environment<F>& env, int count, SeededRng& rng) {
    const auto& A = env.algebra;
    const auto& P = env.parallelism;
    const F& f = A.field();
    const auto model = ParallelismModel<F>::of(P);
    for (int n = 0; n < count; ++n) {
        const auto g = random_nonzero_quaternion(A, rng);
        const auto h = small_quaternion(A, rng);
        const auto beta = left_translation(A, g) * inner(A, h);
        if (!preserves_parallelism(beta, model).preserves)
            return Outcome::fail("ltrans(g) o inner(h) rejected: g=" + show(f, g) + ", h=" + show(f, h));
        const auto M1 = sample_line(env, rng);
        const auto M2 = parallel_through(ProjPoint<F>(f, small_quaternion(A, rng)), M1, P);
        if (!are_parallel(beta.apply(M1), beta.apply(M2), P))
            return Outcome::fail("image of a class splits: " + lines({format_line(f, M1), format_line(f, M2)}));
    }
    return Outcome::pass();
}

/// The unit part of a preserving map is multiplicative along each star line.
template <BaseField F>
Outcome multiplicative_on_subfields(const Environment<F>& env, int count, SeededRng& rng) {
    const auto& A = env.algebra;
    const F& f = A.field();
    for (int n = 0; n < count; ++n) {
        const auto fz = factorize(left_translation(A, small_quaternion(A, rng)) * inner(A, small_quaternion(A, rng)));
        const auto L = random_star_line(A, rng);
        const auto x = point_in(A, L, rng);
        const auto z = point_in(A, L, rng);
        const auto& alpha = fz.unit_part;
        if (!(alpha.apply(A.mul(x, z)) == A.mul(alpha.apply(x), alpha.apply(z))))
            return Outcome::fail("x=" + show(f, x) + ", z=" + show(f, z));
    }
    return Outcome::pass();
}

template <BaseField F>
Outcome linear_preservers(const Environment<F>& env, int count, SeededRng& rng) {
    const auto& A = env.algebra;
    const F& f = A.field();
    const std::vector<ParallelismModel<F>> models{ParallelismModel<F>::left(), ParallelismModel<F>::right(),
                                                  ParallelismModel<F>::of(env.parallelism)};
    for (int n = 0; n < count; ++n) {
        const auto g = random_nonzero_quaternion(A, rng);
        const auto h = random_nonzero_quaternion(A, rng);
        const auto fz = factorize(left_translation(A, g) * inner(A, h));
        for (const auto& model : models) {
            const auto v = preserves_parallelism(fz, model);
            if (!v.preserves) return Outcome::fail("g=" + show(f, g) + ", h=" + show(f, h) + ": " + v.diagnostic);
        }
    }
    const int controls = std::max(1, count / 10);
    for (int n = 0; n < controls; ++n) {
        const auto beta = random_linear_map(A, rng);
        const auto fz = factorize(beta);
        if (fz.unit_part_kind != MapKind::Neither) continue;
        for (const auto& model : models)
            if (preserves_parallelism(fz, model).preserves)
                return Outcome::fail("negative control accepted, beta(1)=" + show(f, beta.apply(A.one())));
    }
    return Outcome::pass();
}

template <BaseField F>
Outcome antiautomorphism_excluded(const Environment<F>& env, int, SeededRng&) {
    const auto& A = env.algebra;
    const auto model = ParallelismModel<F>::of(env.parallelism);
    std::vector<std::pair<std::string, SemilinearMap<F>>> autos{{"id", identity_map(A)}};
    if (A.field().has_galois()) autos.emplace_back("galois", galois_outer(A));
    for (const auto& [name, alpha] : autos) {
        if (classify(alpha) != MapKind::Automorphism) continue;
        if (!preserves_parallelism(alpha, model).preserves) continue;
        if (preserves_parallelism(alpha * conjugation(A), model).preserves)
            return Outcome::fail(name + " and " + name + ".conj both preserve the parallelism");
    }
    return Outcome::pass();
}

}  // namespace props

/// Every registered property, each with its sample count at samples = 100.
template <BaseField F>
std::vector<Property<F>> registered_properties() {
    using namespace props;
    auto side = [](Side s) {
        return [s](const Environment<F>& e, int n, SeededRng& r) { return side_parallel_equivalence(e, n, r, s); };
    };
    return {
        {"fields.arithmetic-laws", 1000, arithmetic_laws<F>},
        {"fields.inverse", 1000, inverses<F>},
        {"fields.square-roots", 100, square_roots<F>},
        {"fields.galois-involution", 500, galois_involution<F>},
        {"fields.artin-schreier", 100, artin_schreier<F>},
        {"fields.artin-schreier-rational", 50, artin_schreier_rational<F>},
        {"fields.frobenius-coordinates", 200, frobenius_recombination<F>},
        {"fields.t-leading-pair", 200, leading_pair_product<F>},
        {"quaternion.associativity", 1, table_associativity<F>},
        {"quaternion.identity", 500, two_sided_identity<F>},
        {"quaternion.bilinearity", 500, bilinearity<F>},
        {"quaternion.trace-norm-central", 500, trace_norm_central<F>},
        {"quaternion.norm-multiplicative", 500, norm_multiplicative<F>},
        {"quaternion.conjugation-antiautomorphism", 500, conjugation_antiautomorphism<F>},
        {"quaternion.quadratic-identity", 500, quadratic_identity<F>},
        {"quaternion.division", 500, division_property<F>},
        {"quaternion.inverse", 100, inverse_law<F>},
        {"quaternion.bilinear-form", 100, bilinear_form_laws<F>},
        {"quaternion.gram-nondegenerate", 1, gram_nondegenerate<F>},
        {"quaternion.centre", 1, centre_is_base_field<F>},
        {"geometry.anchor-well-defined", 100, anchor_well_defined<F>},
        {"geometry.anchors-conjugate", 100, anchors_conjugate<F>},
        {"geometry.left-parallel-equivalence", 200, side(Side::Left)},
        {"geometry.right-parallel-equivalence", 200, side(Side::Right)},
        {"geometry.mixed-translation", 100, mixed_translation<F>},
        {"geometry.spread", 100, spread_property<F>},
        {"geometry.star-closed", 100, star_closed<F>},
        {"geometry.polarity", 100, polarity<F>},
        {"geometry.scale-invariance", 100, scale_invariance<F>},
        {"parallelisms.defining-set", 1, defining_set_valid<F>},
        {"parallelisms.conjugacy-equivalence", 50, conjugacy_equivalence<F>},
        {"parallelisms.inner-soundness", 100, inner_soundness<F>},
        {"parallelisms.class-kind-consistency", 200, class_kind_consistency<F>},
        {"parallelisms.parallel-equivalence", 200, parallel_equivalence<F>},
        {"parallelisms.parallelism-axiom", 100, parallelism_axiom<F>},
        {"parallelisms.refines-clifford", 200, refines_clifford<F>},
        {"parallelisms.inner-and-translation", 50, inner_and_translation_preserve_classes<F>},
        {"automorphisms.factorize-roundtrip", 200, factorize_roundtrip<F>},
        {"automorphisms.classify-inner", 100, classify_inner<F>},
        {"automorphisms.class-image", 50, class_image<F>},
        {"automorphisms.linear-preservers", 200, linear_preservers<F>},
        {"automorphisms.multiplicative-on-subfields", 50, multiplicative_on_subfields<F>},
        {"automorphisms.antiautomorphism-excluded", 1, antiautomorphism_excluded<F>},
    };
}

template <BaseField F>
Report run_property(const Property<F>& p, const Environment<F>& env, int count, std::uint64_t seed) {
    return run_check(p.name, [&] {
        SeededRng rng(seed ^ name_seed(p.name));
        return p.run(env, count, rng);
    });
}

/// Runs every registered property; sample counts scale with `samples`.
template <BaseField F>
std::vector<Report> run_axiom_suite(const Environment<F>& env, int samples, std::uint64_t seed) {
    std::vector<Report> reports;
    for (const auto& p : registered_properties<F>()) {
        const int count = std::max(1, static_cast<int>((static_cast<long>(p.base_count) * samples + 99) / 100));
        reports.push_back(run_property(p, env, count, seed));
    }
    sort_reports(reports);
    return reports;
}

/// Config-level entry point: picks the field, builds the environment.
inline std::vector<Report> run_axiom_suite(const Config& cfg, int samples, std::uint64_t seed) {
    return visit_field(cfg.field, [&](const auto& field) {
        return run_axiom_suite(build_environment(field, cfg), samples, seed);
    });
}

}  // namespace cliffpar

#endif
