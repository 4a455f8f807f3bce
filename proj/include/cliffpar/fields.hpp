#ifndef CLIFFPAR_FIELDS_HPP
#define CLIFFPAR_FIELDS_HPP

#include <concepts>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "cliffpar/errors.hpp"
#include "cliffpar/f2ratfun.hpp"
#include "cliffpar/quadratic_field.hpp"
#include "cliffpar/random.hpp"
#include "cliffpar/rational.hpp"

namespace cliffpar {

/// The prime field Q.
class RationalField {
public:
    using element = Rational;

    int characteristic() const { return 0; }
    std::string name() const { return "rationals"; }

    element zero() const { return Rational(0); }
    element one() const { return Rational(1); }
    element from_int(long n) const { return Rational(n); }

    std::optional<element> symbol(std::string_view) const { return std::nullopt; }

    bool has_galois() const { return false; }
    element galois(const element&) const {
        throw Error(ErrorKind::NoGaloisAutomorphism, "Q has no nontrivial automorphism");
    }

    std::optional<element> sqrt(const element& x) const { return rational_sqrt(x); }

    element random(SeededRng& rng) const { return Rational(rng.uniform(-9, 9)); }

    std::string format(const element& x) const { return x.to_string(); }

    friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// What every base-field descriptor provides to the generic algorithms.
template <class F>
concept BaseField = requires(const F& f, const typename F::element& x, SeededRng& rng, std::string_view s) {
    { f.characteristic() } -> std::convertible_to<int>;
    { f.zero() } -> std::same_as<typename F::element>;
    { f.one() } -> std::same_as<typename F::element>;
    { f.from_int(1L) } -> std::same_as<typename F::element>;
    { f.symbol(s) } -> std::same_as<std::optional<typename F::element>>;
    { f.has_galois() } -> std::convertible_to<bool>;
    { f.galois(x) } -> std::same_as<typename F::element>;
    { f.sqrt(x) } -> std::same_as<std::optional<typename F::element>>;
    { f.random(rng) } -> std::same_as<typename F::element>;
    { f.format(x) } -> std::convertible_to<std::string>;
    { f.name() } -> std::convertible_to<std::string>;
    { x + x } -> std::same_as<typename F::element>;
    { x - x } -> std::same_as<typename F::element>;
    { x * x } -> std::same_as<typename F::element>;
    { x / x } -> std::same_as<typename F::element>;
    { -x } -> std::same_as<typename F::element>;
    { x == x } -> std::convertible_to<bool>;
    { x.is_zero() } -> std::convertible_to<bool>;
};

static_assert(BaseField<RationalField>);
static_assert(BaseField<QuadField>);
static_assert(BaseField<F2TUField>);

enum class FieldKind { Rationals, QuadExt, F2TU };

/// Runtime choice of base field, e.g. from a config file.
struct FieldConfig {
    FieldKind kind = FieldKind::Rationals;
    long m = 0;  // only meaningful for QuadExt

    int characteristic() const { return kind == FieldKind::F2TU ? 2 : 0; }

    std::string name() const {
        switch (kind) {
            case FieldKind::Rationals: return "rationals";
            case FieldKind::QuadExt: return "qsqrt(" + std::to_string(m) + ")";
            case FieldKind::F2TU: return "f2tu";
        }
        return "?";
    }
};

/// Calls `fn` with the concrete field descriptor selected by `config`.
template <class Fn>
decltype(auto) visit_field(const FieldConfig& config, Fn&& fn) {
    switch (config.kind) {
        case FieldKind::QuadExt: return std::forward<Fn>(fn)(QuadField(config.m));
        case FieldKind::F2TU: return std::forward<Fn>(fn)(F2TUField{});
        case FieldKind::Rationals: break;
    }
    return std::forward<Fn>(fn)(RationalField{});
}

enum class ArithOp { Add, Sub, Mul, Div, Neg, Inv };

/// Dispatches one field operation; `y` is ignored for the unary ones.
template <BaseField F>
typename F::element field_arith(const F&, ArithOp op, const typename F::element& x, const typename F::element& y) {
    switch (op) {
        case ArithOp::Add: return x + y;
        case ArithOp::Sub: return x - y;
        case ArithOp::Mul: return x * y;
        case ArithOp::Div:
            if (y.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
            return x / y;
        case ArithOp::Neg: return -x;
        case ArithOp::Inv:
            if (x.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
            return x.inverse();
    }
    return x;
}

template <BaseField F>
std::optional<typename F::element> is_square(const F& field, const typename F::element& x) {
    return field.sqrt(x);
}

/// The nontrivial involution of Q(sqrt m) or F2(t,u).
template <BaseField F>
typename F::element galois_apply(const F& field, const typename F::element& x) {
    return field.galois(x);
}

}  // namespace cliffpar

#endif
