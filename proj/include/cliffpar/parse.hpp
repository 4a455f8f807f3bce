#ifndef CLIFFPAR_PARSE_HPP
#define CLIFFPAR_PARSE_HPP

#include <cctype>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cliffpar/automorphisms.hpp"
#include "cliffpar/errors.hpp"
#include "cliffpar/fields.hpp"
#include "cliffpar/geometry.hpp"
#include "cliffpar/quaternion.hpp"

namespace cliffpar {

/// Whitespace-skipping cursor over a text; positions are byte offsets.
class Cursor {
public:
    explicit Cursor(std::string_view text, std::size_t pos = 0) : text_(text), pos_(pos) {}

    std::size_t pos() const { return pos_; }
    std::string_view text() const { return text_; }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    bool accept_word(std::string_view w) {
        skip_space();
        if (text_.substr(pos_, w.size()) != w) return false;
        const std::size_t end = pos_ + w.size();
        if (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
            return false;
        pos_ = end;
        return true;
    }
    std::string identifier() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }
    long integer() {
        skip_space();
        const std::size_t start = pos_;
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const int d = text_[pos_] - '0';
            if (v > (std::numeric_limits<long>::max() - d) / 10) throw ParseError(start, "integer literal too large");
            v = v * 10 + d;
            ++pos_;
        }
        if (start == pos_) fail("expected an integer");
        return v;
    }
    void expect_end() {
        if (!at_end()) fail("unexpected trailing input");
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(pos_, msg); }

private:
    std::string_view text_;
    std::size_t pos_;
};

/// Expression grammar shared by field and quaternion literals:
///   expr  := term (('+' | '-') term)*
///   term  := unary (('*' | '/') unary)*
///   unary := '-' unary | power
///   power := atom ('^' integer)?
///   atom  := integer | symbol | '(' expr ')'
/// Symbols are the field's generators (s, t, u) and, when an algebra is
/// given, i, j, k. The expression ends at the first character that cannot
/// continue it, so "j i" reads as two operands.
template <BaseField F>
class ExprParser {
public:
    using Q = Quaternion<F>;

    ExprParser(const F& field, const QuaternionAlgebra<F>* algebra, Cursor& cur)
        : field_(field), algebra_(algebra), cur_(cur) {}

    Q expression() {
        Q acc = term();
        for (;;) {
            if (cur_.accept('+')) {
                acc = acc + term();
            } else if (cur_.accept('-')) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

private:
    Q scalar(typename F::element x) const {
        return Q{{std::move(x), field_.zero(), field_.zero(), field_.zero()}};
    }

    Q multiply(const Q& x, const Q& y) const {
        if (algebra_) return algebra_->mul(x, y);
        return scalar(x.c[0] * y.c[0]);
    }

    Q term() {
        Q acc = unary();
        for (;;) {
            if (cur_.accept('*')) {
                acc = multiply(acc, unary());
            } else if (cur_.peek() == '/') {
                const std::size_t at = cur_.pos();
                cur_.accept('/');
                const Q d = unary();
                if (d.is_zero()) throw ParseError(at, "division by zero");
                if (algebra_) {
                    acc = algebra_->mul(acc, algebra_->inverse(d));
                } else {
                    acc = scalar(acc.c[0] / d.c[0]);
                }
            } else {
                return acc;
            }
        }
    }

    Q unary() {
        if (cur_.accept('-')) return -unary();
        return power();
    }

    Q power() {
        Q base = atom();
        if (!cur_.accept('^')) return base;
        const long e = cur_.integer();
        Q acc = scalar(field_.one());
        for (long n = 0; n < e; ++n) acc = multiply(acc, base);
        return acc;
    }

    Q atom() {
        const char c = cur_.peek();
        if (c == '(') {
            cur_.accept('(');
            Q inner = expression();
            cur_.expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return scalar(field_.from_int(cur_.integer()));
        const std::size_t at = cur_.pos();
        const std::string name = cur_.identifier();
        if (name.empty()) cur_.fail("expected a number, symbol or '('");
        if (auto v = field_.symbol(name)) return scalar(*v);
        if (algebra_) {
            if (name == "i") return algebra_->basis(1);
            if (name == "j") return algebra_->basis(2);
            if (name == "k") return algebra_->basis(3);
        }
        throw ParseError(at, "unknown symbol '" + name + "' for " + field_.name());
    }

    const F& field_;
    const QuaternionAlgebra<F>* algebra_;
    Cursor& cur_;
};

template <BaseField F>
typename F::element parse_field_element(const F& field, Cursor& cur) {
    return ExprParser<F>(field, nullptr, cur).expression().c[0];
}

/// Field literal: "p/q", "a+b*s", or a rational expression in t and u.
template <BaseField F>
typename F::element parse_field_element(const F& field, std::string_view text) {
    Cursor cur(text);
    auto x = parse_field_element(field, cur);
    cur.expect_end();
    return x;
}

template <BaseField F>
Quaternion<F> parse_quaternion(const QuaternionAlgebra<F>& A, Cursor& cur) {
    return ExprParser<F>(A.field(), &A, cur).expression();
}

/// Quaternion literal "c0 + c1*i + c2*j + c3*k"; missing terms are 0.
template <BaseField F>
Quaternion<F> parse_quaternion(const QuaternionAlgebra<F>& A, std::string_view text) {
    Cursor cur(text);
    auto q = parse_quaternion(A, cur);
    cur.expect_end();
    return q;
}

/// "span(<quaternion>; <quaternion>)".
template <BaseField F>
Line<F> parse_line(const QuaternionAlgebra<F>& A, Cursor& cur) {
    const std::size_t at = cur.pos();
    if (!cur.accept_word("span")) cur.fail("expected 'span('");
    cur.expect('(');
    const auto x = parse_quaternion(A, cur);
    cur.expect(';');
    const auto y = parse_quaternion(A, cur);
    cur.expect(')');
    try {
        return line_span(A, x, y);
    } catch (const Error& e) {
        throw ParseError(at, e.what());
    }
}

template <BaseField F>
Line<F> parse_line(const QuaternionAlgebra<F>& A, std::string_view text) {
    Cursor cur(text);
    auto L = parse_line(A, cur);
    cur.expect_end();
    return L;
}

/// "[span(...), span(...)]" or an empty list "[]".
template <BaseField F>
std::vector<Line<F>> parse_line_list(const QuaternionAlgebra<F>& A, Cursor& cur) {
    std::vector<Line<F>> out;
    cur.expect('[');
    if (cur.accept(']')) return out;
    do {
        out.push_back(parse_line(A, cur));
    } while (cur.accept(','));
    cur.expect(']');
    return out;
}

/// Map literal: factors inner(q), ltrans(q), rtrans(q), conj, galois, id,
/// composed with '.', so "ltrans(1+i).inner(j)" is ltrans(1+i) o inner(j).
template <BaseField F>
SemilinearMap<F> parse_map(const QuaternionAlgebra<F>& A, Cursor& cur) {
    auto factor = [&]() -> SemilinearMap<F> {
        const std::size_t at = cur.pos();
        const std::string name = cur.identifier();
        auto arg = [&]() {
            cur.expect('(');
            auto q = parse_quaternion(A, cur);
            cur.expect(')');
            return q;
        };
        try {
            if (name == "inner") return inner(A, arg());
            if (name == "ltrans") return left_translation(A, arg());
            if (name == "rtrans") return right_translation(A, arg());
            if (name == "conj") return conjugation(A);
            if (name == "galois") return galois_outer(A);
            if (name == "id") return identity_map(A);
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(at, e.what());
        }
        throw ParseError(at, "unknown map '" + name + "'");
    };
    SemilinearMap<F> acc = factor();
    while (cur.accept('.')) acc = acc * factor();
    return acc;
}

template <BaseField F>
SemilinearMap<F> parse_map(const QuaternionAlgebra<F>& A, std::string_view text) {
    Cursor cur(text);
    auto m = parse_map(A, cur);
    cur.expect_end();
    return m;
}

/// "rationals", "qsqrt(<m>)" or "f2tu".
inline FieldConfig parse_field_config(Cursor& cur) {
    const std::size_t at = cur.pos();
    const std::string name = cur.identifier();
    if (name == "rationals" || name == "q") return {FieldKind::Rationals, 0};
    if (name == "f2tu") return {FieldKind::F2TU, 0};
    if (name == "qsqrt") {
        cur.expect('(');
        const bool neg = cur.accept('-');
        const long m = cur.integer();
        cur.expect(')');
        try {
            QuadField check(neg ? -m : m);
        } catch (const Error& e) {
            throw ParseError(at, e.what());
        }
        return {FieldKind::QuadExt, neg ? -m : m};
    }
    throw ParseError(at, "unknown field '" + name + "' (rationals | qsqrt(m) | f2tu)");
}

inline FieldConfig parse_field_config(std::string_view text) {
    Cursor cur(text);
    auto f = parse_field_config(cur);
    cur.expect_end();
    return f;
}

/// "ordinary", "ordinary(a,b)", "cyclic_char2(b)", optionally followed by
/// "override <x>*<y>=<quaternion>, ..." with x, y among 1, i, j, k.
template <BaseField F>
QuaternionAlgebra<F> parse_algebra(const F& field, Cursor& cur) {
    const std::size_t at = cur.pos();
    const std::string name = cur.identifier();
    auto build = [&]() -> QuaternionAlgebra<F> {
        if (name == "ordinary") {
            if (!cur.accept('(')) return QuaternionAlgebra<F>::ordinary(field);
            auto a = parse_field_element(field, cur);
            cur.expect(',');
            auto b = parse_field_element(field, cur);
            cur.expect(')');
            return QuaternionAlgebra<F>::ordinary(field, a, b);
        }
        if (name == "cyclic_char2") {
            cur.expect('(');
            auto b = parse_field_element(field, cur);
            cur.expect(')');
            return QuaternionAlgebra<F>::cyclic_char2(field, b);
        }
        throw ParseError(at, "unknown algebra '" + name + "' (ordinary | cyclic_char2)");
    };
    QuaternionAlgebra<F> A = [&]() {
        try {
            return build();
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(at, e.what());
        }
    }();
    if (!cur.accept_word("override")) return A;
    auto basis_index = [&]() {
        const std::size_t p = cur.pos();
        if (cur.accept('1')) return 0;
        const std::string b = cur.identifier();
        if (b == "i") return 1;
        if (b == "j") return 2;
        if (b == "k") return 3;
        throw ParseError(p, "expected one of 1, i, j, k");
    };
    do {
        const int x = basis_index();
        cur.expect('*');
        const int y = basis_index();
        cur.expect('=');
        const auto value = parse_quaternion(A, cur);
        A = A.with_product(x, y, value);
    } while (cur.accept(','));
    return A;
}

template <BaseField F>
QuaternionAlgebra<F> parse_algebra(const F& field, std::string_view text) {
    Cursor cur(text);
    auto A = parse_algebra(field, cur);
    cur.expect_end();
    return A;
}

}  // namespace cliffpar

#endif
