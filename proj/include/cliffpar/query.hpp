#ifndef CLIFFPAR_QUERY_HPP
#define CLIFFPAR_QUERY_HPP

#include <string>
#include <string_view>

#include "cliffpar/automorphisms.hpp"
#include "cliffpar/config.hpp"
#include "cliffpar/parse.hpp"
#include "cliffpar/report.hpp"

namespace cliffpar {

namespace detail {

enum class Target { Left, Right, Parallelism };

/// Optional trailing `left`, `right` or `P`; the parallelism by default.
inline Target parse_target(Cursor& cur) {
    if (cur.at_end()) return Target::Parallelism;
    const std::size_t at = cur.pos();
    const std::string w = cur.identifier();
    if (w == "left") return Target::Left;
    if (w == "right") return Target::Right;
    if (w == "P") return Target::Parallelism;
    throw ParseError(at, "expected left, right or P");
}

inline const char* boolean(bool b) { return b ? "true" : "false"; }

template <BaseField F>
std::string evaluate(const Environment<F>& env, std::string_view expr) {
    const auto& A = env.algebra;
    const F& f = A.field();
    Cursor cur(expr);
    const std::size_t at = cur.pos();
    std::string verb = cur.identifier();
    if (cur.accept('?')) verb += '?';
    if (verb == "norm" || verb == "trace" || verb == "conj") {
        const auto x = parse_quaternion(A, cur);
        cur.expect_end();
        if (verb == "norm") return f.format(A.norm(x));
        if (verb == "trace") return f.format(A.trace(x));
        return format_quaternion(f, A.conj(x));
    }
    if (verb == "mul") {
        const auto x = parse_quaternion(A, cur);
        const auto y = parse_quaternion(A, cur);
        cur.expect_end();
        return format_quaternion(f, A.mul(x, y));
    }
    if (verb == "anchor") {
        const std::size_t dash = cur.pos();
        if (!cur.accept('-')) throw ParseError(dash, "expected anchor-left or anchor-right");
        const std::string side = cur.identifier();
        if (side != "left" && side != "right") throw ParseError(dash, "expected anchor-left or anchor-right");
        const auto M = parse_line(A, cur);
        cur.expect_end();
        return format_line(f, side == "left" ? left_anchor(A, M) : right_anchor(A, M));
    }
    if (verb == "parallel?") {
        const auto M1 = parse_line(A, cur);
        const auto M2 = parse_line(A, cur);
        const Target t = parse_target(cur);
        cur.expect_end();
        if (t == Target::Left) return boolean(is_left_parallel(A, M1, M2));
        if (t == Target::Right) return boolean(is_right_parallel(A, M1, M2));
        return boolean(are_parallel(M1, M2, env.parallelism));
    }
    if (verb == "conjugate?") {
        const auto L1 = parse_line(A, cur);
        const auto L2 = parse_line(A, cur);
        cur.expect_end();
        return boolean(conjugate_lines(A, L1, L2));
    }
    if (verb == "classify") {
        const auto beta = parse_map(A, cur);
        cur.expect_end();
        const auto fz = factorize(beta);
        if (fz.translation_part == A.one()) return to_string(fz.unit_part_kind);
        return "ltrans(" + format_quaternion(f, fz.translation_part) + ") o " + to_string(fz.unit_part_kind);
    }
    if (verb == "preserves?") {
        const auto beta = parse_map(A, cur);
        const Target t = parse_target(cur);
        cur.expect_end();
        const auto model = t == Target::Left    ? ParallelismModel<F>::left()
                           : t == Target::Right ? ParallelismModel<F>::right()
                                                : ParallelismModel<F>::of(env.parallelism);
        const auto v = preserves_parallelism(beta, model);
        return v.preserves ? "true" : "false (" + v.diagnostic + ")";
    }
    throw ParseError(at, "unknown verb '" + verb +
                             "' (norm, trace, conj, mul, anchor-left, anchor-right, parallel?, conjugate?, classify, "
                             "preserves?)");
}

}  // namespace detail

/// Evaluates one query against the environment described by `cfg`. The
/// result text is the report's witness.
inline Report query(const Config& cfg, std::string_view expr) {
    const auto start = std::chrono::steady_clock::now();
    std::string result = visit_field(cfg.field, [&](const auto& field) {
        return detail::evaluate(build_environment(field, cfg), expr);
    });
    const std::chrono::duration<double, std::milli> took = std::chrono::steady_clock::now() - start;
    return {"query", Status::Pass, std::move(result), took.count()};
}

}  // namespace cliffpar

#endif
