#ifndef CLIFFPAR_AUTOMORPHISMS_HPP
#define CLIFFPAR_AUTOMORPHISMS_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "cliffpar/errors.hpp"
#include "cliffpar/parallelisms.hpp"

namespace cliffpar {

/// Field automorphism accompanying a semilinear map.
enum class Sigma { Identity, Galois };

inline Sigma compose(Sigma a, Sigma b) { return a == b ? Sigma::Identity : Sigma::Galois; }

/// x -> M sigma(x), where column n of M is the image of the n-th basis vector.
template <BaseField F>
class SemilinearMap {
public:
    using E = typename F::element;
    using Q = Quaternion<F>;

    SemilinearMap(QuaternionAlgebra<F> algebra, Rows<E> matrix, Sigma sigma)
        : algebra_(std::move(algebra)), matrix_(std::move(matrix)), sigma_(sigma) {
        if (sigma_ == Sigma::Galois && !algebra_.field().has_galois())
            throw Error(ErrorKind::NoGaloisAutomorphism, algebra_.field().name() + " has no Galois involution");
        if (!invert(algebra_.field(), matrix_))
            throw Error(ErrorKind::NotInvertible, "semilinear map with singular matrix");
    }

    /// Map whose basis images are the given quaternions.
    static SemilinearMap from_images(const QuaternionAlgebra<F>& A, const std::array<Q, 4>& images, Sigma sigma) {
        Rows<E> m(4, std::vector<E>(4, A.field().zero()));
        for (int col = 0; col < 4; ++col)
            for (int row = 0; row < 4; ++row) m[row][col] = images[col].c[row];
        return SemilinearMap(A, std::move(m), sigma);
    }

    const QuaternionAlgebra<F>& algebra() const { return algebra_; }
    const Rows<E>& matrix() const { return matrix_; }
    Sigma sigma() const { return sigma_; }

    E apply_sigma(const E& x) const { return sigma_ == Sigma::Galois ? algebra_.field().galois(x) : x; }

    Q apply(const Q& x) const {
        Q out = algebra_.zero();
        for (int col = 0; col < 4; ++col) {
            if (x.c[col].is_zero()) continue;
            const E s = apply_sigma(x.c[col]);
            for (int row = 0; row < 4; ++row)
                if (!matrix_[row][col].is_zero()) out.c[row] = out.c[row] + matrix_[row][col] * s;
        }
        return out;
    }

    Line<F> apply(const Line<F>& L) const { return line_span(algebra_, apply(L.row(0)), apply(L.row(1))); }

    /// (this o other)(x) = M sigma(N tau(x)) = M sigma(N) (sigma tau)(x).
    SemilinearMap then_after(const SemilinearMap& other) const {
        require_same_algebra(algebra_, other.algebra_);
        Rows<E> twisted = other.matrix_;
        for (auto& row : twisted)
            for (auto& e : row) e = apply_sigma(e);
        return SemilinearMap(algebra_, matmul(algebra_.field(), matrix_, twisted), compose(sigma_, other.sigma_),
                             Unchecked{});
    }

    /// x = sigma(M^-1 y), so the inverse has matrix sigma(M^-1) and the same sigma.
    SemilinearMap inverse() const {
        Rows<E> inv = *invert(algebra_.field(), matrix_);
        for (auto& row : inv)
            for (auto& e : row) e = apply_sigma(e);
        return SemilinearMap(algebra_, std::move(inv), sigma_, Unchecked{});
    }

    friend bool operator==(const SemilinearMap& a, const SemilinearMap& b) {
        return a.algebra_ == b.algebra_ && a.sigma_ == b.sigma_ && a.matrix_ == b.matrix_;
    }

private:
    struct Unchecked {};
    // Products and inverses of invertible maps need no rank check.
    SemilinearMap(QuaternionAlgebra<F> algebra, Rows<E> matrix, Sigma sigma, Unchecked)
        : algebra_(std::move(algebra)), matrix_(std::move(matrix)), sigma_(sigma) {}

    QuaternionAlgebra<F> algebra_;
    Rows<E> matrix_;
    Sigma sigma_;
};

/// beta o alpha.
template <BaseField F>
SemilinearMap<F> operator*(const SemilinearMap<F>& beta, const SemilinearMap<F>& alpha) {
    return beta.then_after(alpha);
}

template <BaseField F>
SemilinearMap<F> identity_map(const QuaternionAlgebra<F>& A) {
    return SemilinearMap<F>::from_images(A, {A.basis(0), A.basis(1), A.basis(2), A.basis(3)}, Sigma::Identity);
}

/// x -> h^-1 x h.
template <BaseField F>
SemilinearMap<F> inner(const QuaternionAlgebra<F>& A, const Quaternion<F>& h) {
    if (h.is_zero()) throw Error(ErrorKind::ZeroElement, "inner automorphism of zero");
    const auto hinv = A.inverse(h);
    std::array<Quaternion<F>, 4> img;
    for (int n = 0; n < 4; ++n) img[n] = A.mul(A.mul(hinv, A.basis(n)), h);
    return SemilinearMap<F>::from_images(A, img, Sigma::Identity);
}

/// x -> g x.
template <BaseField F>
SemilinearMap<F> left_translation(const QuaternionAlgebra<F>& A, const Quaternion<F>& g) {
    if (g.is_zero()) throw Error(ErrorKind::ZeroElement, "left translation by zero");
    std::array<Quaternion<F>, 4> img;
    for (int n = 0; n < 4; ++n) img[n] = A.mul(g, A.basis(n));
    return SemilinearMap<F>::from_images(A, img, Sigma::Identity);
}

/// x -> x g.
template <BaseField F>
SemilinearMap<F> right_translation(const QuaternionAlgebra<F>& A, const Quaternion<F>& g) {
    if (g.is_zero()) throw Error(ErrorKind::ZeroElement, "right translation by zero");
    std::array<Quaternion<F>, 4> img;
    for (int n = 0; n < 4; ++n) img[n] = A.mul(A.basis(n), g);
    return SemilinearMap<F>::from_images(A, img, Sigma::Identity);
}

/// x -> conj(x).
template <BaseField F>
SemilinearMap<F> conjugation(const QuaternionAlgebra<F>& A) {
    std::array<Quaternion<F>, 4> img;
    for (int n = 0; n < 4; ++n) img[n] = A.conj(A.basis(n));
    return SemilinearMap<F>::from_images(A, img, Sigma::Identity);
}

/// Applies the Galois involution to coordinates and fixes 1, i, j, k.
template <BaseField F>
SemilinearMap<F> galois_outer(const QuaternionAlgebra<F>& A) {
    if (!A.field().has_galois())
        throw Error(ErrorKind::NoGaloisAutomorphism, A.field().name() + " has no Galois involution");
    return SemilinearMap<F>::from_images(A, {A.basis(0), A.basis(1), A.basis(2), A.basis(3)}, Sigma::Galois);
}

enum class MapKind { Automorphism, Antiautomorphism, Neither };

inline const char* to_string(MapKind k) {
    switch (k) {
        case MapKind::Automorphism: return "automorphism";
        case MapKind::Antiautomorphism: return "antiautomorphism";
        case MapKind::Neither: return "neither";
    }
    return "?";
}

/// Checks that tr, N and conjugation commute with alpha up to sigma.
/// All three sides are sigma-semilinear (N via its polar form B), so checking
/// tr and conj on the basis, N on the basis and B on basis pairs is exact.
/// Returns a failing element e_a or e_a + e_b.
template <BaseField F>
std::optional<Quaternion<F>> find_compatibility_failure(const SemilinearMap<F>& alpha) {
    const auto& A = alpha.algebra();
    std::array<Quaternion<F>, 4> img;
    for (int a = 0; a < 4; ++a) {
        const auto e = A.basis(a);
        img[a] = alpha.apply(e);
        if (!(A.trace(img[a]) == alpha.apply_sigma(A.trace(e))) || !(A.norm(img[a]) == alpha.apply_sigma(A.norm(e))) ||
            !(A.conj(img[a]) == alpha.apply(A.conj(e))))
            return e;
    }
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            if (!(A.bilinear_form(img[a], img[b]) == alpha.apply_sigma(A.bilinear_form(A.basis(a), A.basis(b)))))
                return A.basis(a) + A.basis(b);
    return std::nullopt;
}

/// Automorphism / antiautomorphism test for a unital semilinear map.
///
/// Checking the 16 basis products suffices: with x = sum x_a e_a and
/// y = sum y_b e_b, alpha(xy) = sum sigma(x_a y_b) alpha(e_a e_b) while
/// alpha(x) alpha(y) = sum sigma(x_a) sigma(y_b) alpha(e_a) alpha(e_b), since
/// the sigma-images of coordinates are central. The reversed case is the same.
template <BaseField F>
MapKind classify(const SemilinearMap<F>& alpha) {
    const auto& A = alpha.algebra();
    if (!(alpha.apply(A.one()) == A.one())) throw Error(ErrorKind::NotUnital, "classify needs alpha(1) = 1");
    bool automorphism = true;
    bool anti = true;
    for (int a = 0; a < 4 && (automorphism || anti); ++a)
        for (int b = 0; b < 4; ++b) {
            const auto lhs = alpha.apply(A.mul(A.basis(a), A.basis(b)));
            const auto ia = alpha.apply(A.basis(a));
            const auto ib = alpha.apply(A.basis(b));
            if (automorphism && !(lhs == A.mul(ia, ib))) automorphism = false;
            if (anti && !(lhs == A.mul(ib, ia))) anti = false;
        }
    const MapKind kind = automorphism ? MapKind::Automorphism : anti ? MapKind::Antiautomorphism : MapKind::Neither;
    if (kind != MapKind::Neither) {
        if (find_compatibility_failure(alpha))
            throw std::logic_error("ring (anti)automorphism failed trace/norm/conjugation compatibility");
    }
    return kind;
}

/// beta = left_translation(translation_part) o unit_part, with unit_part(1) = 1.
template <BaseField F>
struct MapClassification {
    Quaternion<F> translation_part;
    SemilinearMap<F> unit_part;
    MapKind unit_part_kind;
};

template <BaseField F>
MapClassification<F> factorize(const SemilinearMap<F>& beta) {
    const auto& A = beta.algebra();
    const auto g = beta.apply(A.one());
    auto unit = left_translation(A, A.inverse(g)) * beta;
    const MapKind kind = classify(unit);
    return {g, std::move(unit), kind};
}

enum class ModelKind { LeftClifford, RightClifford, CliffordLike };

/// The parallelism whose automorphisms are being tested.
template <BaseField F>
struct ParallelismModel {
    ModelKind kind = ModelKind::LeftClifford;
    std::optional<CliffordLikeParallelism<F>> clifford_like;

    static ParallelismModel left() { return {ModelKind::LeftClifford, std::nullopt}; }
    static ParallelismModel right() { return {ModelKind::RightClifford, std::nullopt}; }
    static ParallelismModel of(CliffordLikeParallelism<F> P) { return {ModelKind::CliffordLike, std::move(P)}; }
};

struct PreservationVerdict {
    bool preserves = false;
    MapKind unit_part_kind = MapKind::Neither;
    std::string diagnostic;
};

/// Decides whether beta maps parallel lines to parallel lines.
///
/// beta preserves a Clifford-like parallelism iff its unit part alpha is an
/// automorphism with alpha(F) = F or an antiautomorphism with
/// alpha(F) = star \ F. For automorphisms it suffices that every rep lands in
/// F: alpha o h~ o alpha^-1 is inner, so alpha permutes conjugacy orbits, and
/// separability classes are fixed. For antiautomorphisms the complement has
/// to be described explicitly, otherwise the answer is conservatively false.
template <BaseField F>
PreservationVerdict preserves_parallelism(const MapClassification<F>& fz, const ParallelismModel<F>& model) {
    PreservationVerdict v;
    v.unit_part_kind = fz.unit_part_kind;
    if (model.kind != ModelKind::CliffordLike) {
        v.preserves = fz.unit_part_kind == MapKind::Automorphism;
        if (!v.preserves) v.diagnostic = std::string("unit part is ") + to_string(fz.unit_part_kind);
        return v;
    }
    const auto& P = *model.clifford_like;
    require_same_algebra(fz.unit_part.algebra(), P.algebra());
    const auto& A = P.algebra();
    const auto& D = P.defining();
    const auto& alpha = fz.unit_part;
    const F& f = A.field();

    if (fz.unit_part_kind == MapKind::Neither) {
        v.diagnostic = "unit part is neither an automorphism nor an antiautomorphism";
        return v;
    }
    if (fz.unit_part_kind == MapKind::Automorphism) {
        for (std::size_t n = 0; n < D.reps.size(); ++n) {
            const auto image = alpha.apply(D.reps[n]);
            if (!in_described_set(A, D, image)) {
                v.diagnostic = "alpha(rep " + std::to_string(n) + ") = " + format_line(f, image) +
                               " is not in the defining set";
                return v;
            }
        }
        v.preserves = true;
        return v;
    }
    // Antiautomorphism: it must swap the defining set with its complement.
    if (D.has_flags()) {
        v.diagnostic = "a flagged separability class is mapped onto itself";
        return v;
    }
    for (std::size_t n = 0; n < D.reps.size(); ++n) {
        const auto image = alpha.apply(D.reps[n]);
        if (in_described_set(A, D, image)) {
            v.diagnostic = "alpha(rep " + std::to_string(n) + ") = " + format_line(f, image) + " stays in the defining set";
            return v;
        }
    }
    if (!P.complement()) {
        v.diagnostic = "antiautomorphism acceptance needs an explicit complement description";
        return v;
    }
    const auto& C = *P.complement();
    if (C.has_flags()) {
        v.diagnostic = "a flagged separability class of the complement is mapped onto itself";
        return v;
    }
    for (std::size_t n = 0; n < D.reps.size(); ++n)
        if (!in_described_set(A, C, alpha.apply(D.reps[n]))) {
            v.diagnostic = "alpha(rep " + std::to_string(n) + ") is outside the described complement";
            return v;
        }
    for (std::size_t n = 0; n < C.reps.size(); ++n)
        if (!in_described_set(A, D, alpha.apply(C.reps[n]))) {
            v.diagnostic = "alpha(complement rep " + std::to_string(n) + ") is not in the defining set";
            return v;
        }
    v.preserves = true;
    return v;
}

template <BaseField F>
PreservationVerdict preserves_parallelism(const SemilinearMap<F>& beta, const ParallelismModel<F>& model) {
    return preserves_parallelism(factorize(beta), model);
}

}  // namespace cliffpar

#endif
