#ifndef CLIFFPAR_PARALLELISMS_HPP
#define CLIFFPAR_PARALLELISMS_HPP

#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "cliffpar/errors.hpp"
#include "cliffpar/geometry.hpp"

namespace cliffpar {

/// Finite description of an inner-invariant subset of the star: the union of
/// the conjugacy orbits of `reps`, plus whole separability classes when the
/// flags are set (characteristic 2 only).
template <BaseField F>
struct DefiningSet {
    std::vector<Line<F>> reps;
    bool all_separable = false;
    bool all_inseparable = false;

    bool has_flags() const { return all_separable || all_inseparable; }
};

/// How two star lines were found (non)conjugate.
enum class ConjugacyCriterion {
    SquareClass,      // char != 2: N(q2)/N(q1) must be a square
    ArtinSchreier,    // char 2 separable: N(q1)+N(q2) = d^2 + d
    FrobeniusCoords,  // char 2 inseparable: N(q2) = c^2 N(q1) + d^2
    MixedSeparability,
};

template <BaseField F>
struct ConjugacyVerdict {
    bool conjugate = false;
    ConjugacyCriterion criterion = ConjugacyCriterion::SquareClass;
    /// The field element the criterion was applied to (ratio, AS target, or N(q2)).
    std::optional<typename F::element> target;
    /// c (square root / proportionality factor) or d (Artin-Schreier root) when found.
    std::optional<typename F::element> certificate;
};

/// Decides whether L2 = h^-1 L1 h for some nonzero h.
///
/// Both lines are maximal subfields F(q1), F(q2). The tests below are the
/// orbit conditions on normalized generators; by Skolem-Noether any
/// F-isomorphism F(q1) -> F(q2) extends to an inner automorphism, so they are
/// also sufficient.
template <BaseField F>
ConjugacyVerdict<F> decide_conjugacy(const QuaternionAlgebra<F>& A, const Line<F>& L1, const Line<F>& L2) {
    using E = typename F::element;
    const F& f = A.field();
    auto q1 = star_generator(A, L1);
    auto q2 = star_generator(A, L2);
    ConjugacyVerdict<F> v;

    if (A.characteristic() != 2) {
        const E half = f.one() / f.from_int(2);
        q1 = q1 - A.scalar(half * A.trace(q1));
        q2 = q2 - A.scalar(half * A.trace(q2));
        const E ratio = A.norm(q2) / A.norm(q1);
        v.criterion = ConjugacyCriterion::SquareClass;
        v.target = ratio;
        if (auto c = f.sqrt(ratio)) {
            v.conjugate = true;
            v.certificate = *c;
        }
        return v;
    }

    if constexpr (std::is_same_v<F, F2TUField>) {
        const E t1 = A.trace(q1);
        const E t2 = A.trace(q2);
        if (t1.is_zero() != t2.is_zero()) {
            v.criterion = ConjugacyCriterion::MixedSeparability;
            return v;
        }
        if (!t1.is_zero()) {
            q1 = (f.one() / t1) * q1;
            q2 = (f.one() / t2) * q2;
            const E target = A.norm(q1) + A.norm(q2);
            v.criterion = ConjugacyCriterion::ArtinSchreier;
            v.target = target;
            std::optional<E> d;
            if (target.is_polynomial()) {
                if (auto p = artin_schreier_solve(target.num())) d = E(*p);
            } else {
                d = artin_schreier_solve_rational(target);
            }
            if (d) {
                v.conjugate = true;
                v.certificate = *d;
            }
            return v;
        }
        const E n1 = A.norm(q1);
        const E n2 = A.norm(q2);
        v.criterion = ConjugacyCriterion::FrobeniusCoords;
        v.target = n2;
        const auto a = frobenius_coordinates(n2);
        const auto b = frobenius_coordinates(n1);
        int k = 1;
        while (k < 4 && b[k].is_zero()) ++k;
        if (k == 4) throw Error(ErrorKind::NotCentral, "norm of an inseparable generator is a square");
        const E c = a[k] / b[k];
        if (c.is_zero()) return v;
        for (int l = 1; l < 4; ++l)
            if (!(a[l] == c * b[l])) return v;
        v.conjugate = true;
        v.certificate = c;
        return v;
    } else {
        throw Error(ErrorKind::WrongCharacteristic, "no characteristic-2 field available for " + f.name());
    }
}

template <BaseField F>
bool conjugate_lines(const QuaternionAlgebra<F>& A, const Line<F>& L1, const Line<F>& L2) {
    if (L1 == L2) {
        star_generator(A, L1);
        return true;
    }
    return decide_conjugacy(A, L1, L2).conjugate;
}

/// h^-1 L h, computed as conj(h) L h since scalars do not move a line.
template <BaseField F>
Line<F> conjugate_line(const QuaternionAlgebra<F>& A, const Line<F>& L, const Quaternion<F>& h) {
    const F& f = A.field();
    const auto g = primitive_multiple(f, h);
    if (A.norm(g).is_zero()) throw Error(ErrorKind::DivisionByZero, "quaternion with zero norm has no inverse");
    const auto gc = A.conj(g);
    return line_span(A, A.mul(A.mul(gc, primitive_multiple(f, L.row(0))), g),
                     A.mul(A.mul(gc, primitive_multiple(f, L.row(1))), g));
}

/// Small coefficient candidates for witness searches: integers of absolute
/// value <= height, or in characteristic 2 the polynomials of degree <= 1.
template <BaseField F>
std::vector<typename F::element> small_coefficients(const F& f, int height) {
    std::vector<typename F::element> out;
    if (f.characteristic() == 2) {
        if constexpr (std::is_same_v<F, F2TUField>) {
            for (int mask = 0; mask < 8; ++mask) {
                std::vector<Monomial> ms;
                if (mask & 1) ms.push_back({0, 0});
                if (mask & 2) ms.push_back({1, 0});
                if (mask & 4) ms.push_back({0, 1});
                out.emplace_back(F2Poly::from_monomials(ms));
            }
        }
        return out;
    }
    for (int n = -height; n <= height; ++n) out.push_back(f.from_int(n));
    return out;
}

/// Exhaustive search for h with small coefficients and h^-1 L1 h = L2.
template <BaseField F>
std::optional<Quaternion<F>> find_conjugating_element(const QuaternionAlgebra<F>& A, const Line<F>& L1,
                                                      const Line<F>& L2, int height = 3) {
    const auto coeffs = small_coefficients(A.field(), height);
    const auto q1 = star_generator(A, L1);
    for (const auto& a : coeffs)
        for (const auto& b : coeffs)
            for (const auto& c : coeffs)
                for (const auto& d : coeffs) {
                    const auto h = A.make(a, b, c, d);
                    if (h.is_zero() || A.norm(h).is_zero()) continue;
                    if (L2.contains(A.field(), A.mul(A.mul(A.conj(h), q1), h))) return h;
                }
    return std::nullopt;
}

template <BaseField F>
struct DefiningSetReport {
    bool valid = true;
    std::vector<std::string> violations;
    DefiningSet<F> normalized;
};

/// Checks that reps are star lines in pairwise distinct orbits and not
/// already covered by a flag; flags need characteristic 2.
template <BaseField F>
DefiningSetReport<F> validate_defining_set(const DefiningSet<F>& D, const QuaternionAlgebra<F>& A) {
    DefiningSetReport<F> r;
    const F& f = A.field();
    auto violation = [&](std::string msg) {
        r.valid = false;
        r.violations.push_back(std::move(msg));
    };
    if (D.has_flags() && A.characteristic() != 2) {
        violation("separability flags need characteristic 2");
    } else {
        r.normalized.all_separable = D.all_separable;
        r.normalized.all_inseparable = D.all_inseparable;
    }
    for (std::size_t n = 0; n < D.reps.size(); ++n) {
        const auto& L = D.reps[n];
        const std::string name = "rep " + std::to_string(n) + " " + format_line(f, L);
        if (!in_star(A, L)) {
            violation(name + ": not in the star");
            continue;
        }
        if (A.characteristic() == 2 && r.normalized.has_flags()) {
            const bool sep = is_separable(A, L);
            if ((sep && D.all_separable) || (!sep && D.all_inseparable)) {
                violation(name + ": redundant, already covered by flag " +
                          (sep ? std::string("all_separable") : std::string("all_inseparable")));
                continue;
            }
        }
        bool duplicate = false;
        for (std::size_t m = 0; m < r.normalized.reps.size(); ++m) {
            if (conjugate_lines(A, r.normalized.reps[m], L)) {
                violation(name + ": duplicate orbit of an earlier rep");
                duplicate = true;
                break;
            }
        }
        if (!duplicate) r.normalized.reps.push_back(L);
    }
    return r;
}

/// Clifford-like parallelism: left classes of lines in the defining set,
/// right classes of the other star lines.
template <BaseField F>
class CliffordLikeParallelism {
public:
    CliffordLikeParallelism(QuaternionAlgebra<F> algebra, const DefiningSet<F>& defining,
                            std::optional<DefiningSet<F>> complement = std::nullopt)
        : algebra_(std::move(algebra)) {
        auto report = validate_defining_set(defining, algebra_);
        if (!report.valid) throw Error(ErrorKind::InvalidDefiningSet, join(report.violations));
        defining_ = std::move(report.normalized);
        if (complement) {
            auto creport = validate_defining_set(*complement, algebra_);
            if (!creport.valid) throw Error(ErrorKind::InvalidDefiningSet, "complement: " + join(creport.violations));
            complement_ = std::move(creport.normalized);
        }
    }

    const QuaternionAlgebra<F>& algebra() const { return algebra_; }
    const DefiningSet<F>& defining() const { return defining_; }
    /// Optional finite description of the star minus the defining set.
    const std::optional<DefiningSet<F>>& complement() const { return complement_; }

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : "; ") + x;
        return s;
    }

    QuaternionAlgebra<F> algebra_;
    DefiningSet<F> defining_;
    std::optional<DefiningSet<F>> complement_;
};

/// Membership of a star line in the set described by D.
template <BaseField F>
bool in_described_set(const QuaternionAlgebra<F>& A, const DefiningSet<F>& D, const Line<F>& L) {
    if (!in_star(A, L)) throw Error(ErrorKind::NotInStar, "membership is only defined for star lines");
    if (D.has_flags()) {
        const bool sep = is_separable(A, L);
        if ((sep && D.all_separable) || (!sep && D.all_inseparable)) return true;
    }
    for (const auto& rep : D.reps)
        if (conjugate_lines(A, rep, L)) return true;
    return false;
}

template <BaseField F>
bool in_defining_set(const Line<F>& L, const CliffordLikeParallelism<F>& P) {
    return in_described_set(P.algebra(), P.defining(), L);
}

/// Left iff the left anchor of M is in the defining set.
template <BaseField F>
Side class_kind(const Line<F>& M, const CliffordLikeParallelism<F>& P) {
    return in_defining_set(left_anchor(P.algebra(), M), P) ? Side::Left : Side::Right;
}

/// Same verdict computed through the right anchor.
template <BaseField F>
Side class_kind_via_right_anchor(const Line<F>& M, const CliffordLikeParallelism<F>& P) {
    return in_defining_set(right_anchor(P.algebra(), M), P) ? Side::Left : Side::Right;
}

template <BaseField F>
bool are_parallel(const Line<F>& M1, const Line<F>& M2, const CliffordLikeParallelism<F>& P) {
    if (M1 == M2) return true;
    const auto& A = P.algebra();
    const auto a1 = left_anchor(A, M1);
    if (in_defining_set(a1, P)) return a1 == left_anchor(A, M2);
    return is_right_parallel(A, M1, M2);
}

/// The line of M's class (under P) through p.
template <BaseField F>
Line<F> parallel_through(const ProjPoint<F>& p, const Line<F>& M, const CliffordLikeParallelism<F>& P) {
    const auto& A = P.algebra();
    const auto a = left_anchor(A, M);
    if (in_defining_set(a, P)) return left_multiply(A, p.rep(), a);
    return parallel_through(A, p, M, Side::Right);
}

}  // namespace cliffpar

#endif
