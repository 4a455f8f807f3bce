#ifndef CLIFFPAR_SCENARIOS_HPP
#define CLIFFPAR_SCENARIOS_HPP

#include <string>
#include <type_traits>
#include <vector>

#include "cliffpar/automorphisms.hpp"
#include "cliffpar/config.hpp"
#include "cliffpar/parse.hpp"
#include "cliffpar/report.hpp"

namespace cliffpar {

enum class OrbitTest { SquareClass, ArtinSchreier, FrobeniusCoords };

/// A built-in example: an algebra with an outer automorphism alpha (the
/// Galois involution on coordinates) and a line L = F1 + Fq whose image
/// alpha(L) lies in a different conjugacy orbit.
struct Scenario {
    std::string id;
    std::string config;
    std::string generator;
    std::string expected_trace;
    std::string expected_norm;
    std::string expected_alpha_norm;
    OrbitTest orbit_test;
};

inline const std::vector<Scenario>& scenarios() {
    static const std::vector<Scenario> table{
        {"root3",
         "field = qsqrt(3)\nalgebra = ordinary(-1,-1)\ndefining_reps = [span(1; i+(1+s)*j)]\n",
         "i+(1+s)*j", "0", "5+2*s", "5-2*s", OrbitTest::SquareClass},
        {"c2-sep",
         "field = f2tu\nalgebra = cyclic_char2(t+u)\ndefining_reps = [span(1; i+u*j)]\n",
         "i+u*j", "1", "1+u^2*(t+u)", "1+t^2*(u+t)", OrbitTest::ArtinSchreier},
        {"c2-sep-old",
         "field = f2tu\nalgebra = cyclic_char2(t+u)\ndefining_reps = [span(1; i+u*j)]\nflags = all_inseparable\n",
         "i+u*j", "1", "1+u^2*(t+u)", "1+t^2*(u+t)", OrbitTest::ArtinSchreier},
        {"c2-insep",
         "field = f2tu\nalgebra = cyclic_char2(t+u)\ndefining_reps = [span(1; j+u*k)]\n",
         "j+u*k", "0", "(u+t)*(1+u+u^2)", "(u+t)*(1+t+t^2)", OrbitTest::FrobeniusCoords},
        {"c2-insep-old",
         "field = f2tu\nalgebra = cyclic_char2(t+u)\ndefining_reps = [span(1; j+u*k)]\nflags = all_separable\n",
         "j+u*k", "0", "(u+t)*(1+u+u^2)", "(u+t)*(1+t+t^2)", OrbitTest::FrobeniusCoords},
    };
    return table;
}

inline const Scenario& find_scenario(const std::string& id) {
    for (const auto& s : scenarios())
        if (s.id == id) return s;
    std::string known;
    for (const auto& s : scenarios()) known += (known.empty() ? "" : ", ") + s.id;
    throw Error(ErrorKind::UnknownScenario, "'" + id + "' (known: " + known + ")");
}

inline Config scenario_config(const std::string& id) { return parse_config(find_scenario(id).config); }

namespace detail {

template <BaseField F>
Outcome expect_value(const F& f, const char* what, const typename F::element& got, const std::string& expected) {
    const auto want = parse_field_element(f, expected);
    if (!(got == want)) return Outcome::fail(std::string(what) + " = " + f.format(got) + ", expected " + expected);
    return Outcome::pass(std::string(what) + " = " + f.format(got));
}

/// The orbit equation for q and alpha(q) has no solution in F.
template <BaseField F>
Outcome orbit_equation(const Scenario& s, const QuaternionAlgebra<F>& A, const Quaternion<F>& q,
                       const Quaternion<F>& aq) {
    const F& f = A.field();
    const auto nq = A.norm(q);
    const auto naq = A.norm(aq);
    switch (s.orbit_test) {
        case OrbitTest::SquareClass: {
            const auto ratio = naq / nq;
            const auto sq = is_square(f, ratio);
            if (sq) return Outcome::fail("N(alpha q)/N(q) = " + f.format(ratio) + " has root " + f.format(*sq));
            const auto n = naq * nq;
            return Outcome::pass("c^2 = " + f.format(ratio) + " unsolvable; N(q) N(alpha q) = " + f.format(n) +
                                 (is_square(f, n) ? " is a square" : " is not a square"));
        }
        case OrbitTest::ArtinSchreier:
            if constexpr (std::is_same_v<F, F2TUField>) {
                const auto target = nq + naq;
                if (!target.is_polynomial()) return Outcome::fail("d^2+d target is not a polynomial: " + f.format(target));
                if (auto d = artin_schreier_solve(target.num()))
                    return Outcome::fail("d = " + d->to_string() + " solves d^2+d = " + f.format(target));
                return Outcome::pass("d^2+d = " + f.format(target) + " unsolvable");
            }
            break;
        case OrbitTest::FrobeniusCoords:
            if constexpr (std::is_same_v<F, F2TUField>) {
                const auto v = decide_conjugacy(A, line_span(A, A.one(), q), line_span(A, A.one(), aq));
                if (v.criterion != ConjugacyCriterion::FrobeniusCoords)
                    return Outcome::fail("decided by another criterion");
                if (v.conjugate) return Outcome::fail("c = " + f.format(*v.certificate) + " solves d^2 = N(alpha q) + c^2 N(q)");
                return Outcome::pass("d^2 = N(alpha q) + c^2 N(q) unsolvable");
            }
            break;
    }
    return Outcome::fail("orbit test does not apply to " + f.name());
}

template <BaseField F>
std::vector<Report> run_scenario(const Scenario& s, const Environment<F>& env) {
    const auto& A = env.algebra;
    const auto& P = env.parallelism;
    const F& f = A.field();
    const auto q = parse_quaternion(A, s.generator);
    const auto alpha = galois_outer(A);
    const auto aq = alpha.apply(q);
    const auto L = line_span(A, A.one(), q);
    std::vector<Report> out;

    out.push_back(run_check("trace.q", [&] { return expect_value(f, "tr(q)", A.trace(q), s.expected_trace); }));
    out.push_back(run_check("norm.q", [&] { return expect_value(f, "N(q)", A.norm(q), s.expected_norm); }));
    out.push_back(run_check("norm.alpha-q", [&] {
        if (!(A.norm(aq) == alpha.apply_sigma(A.norm(q)))) return Outcome::fail("N(alpha q) != alpha(N(q))");
        return expect_value(f, "N(alpha q)", A.norm(aq), s.expected_alpha_norm);
    }));
    out.push_back(run_check("orbit-equation", [&] { return orbit_equation(s, A, q, aq); }));
    out.push_back(run_check("conjugacy.alpha-L", [&] {
        const auto aL = alpha.apply(L);
        if (conjugate_lines(A, L, aL)) return Outcome::fail("L and alpha(L) = " + format_line(f, aL) + " are conjugate");
        if (auto h = find_conjugating_element(A, L, aL))
            return Outcome::fail("witness search found h = " + format_quaternion(f, *h));
        return Outcome::pass("alpha(L) = " + format_line(f, aL) + " is not conjugate to L");
    }));
    out.push_back(run_check("defining-set.valid", [&] {
        const auto r = validate_defining_set(P.defining(), A);
        if (!r.valid) return Outcome::fail(r.violations.front());
        return Outcome::pass();
    }));

    // Truth table: each map is factorized once and tested against both models.
    struct Row {
        std::string name;
        SemilinearMap<F> map;
        bool left;
        bool p;
    };
    std::vector<Row> rows{{"galois", alpha, true, false}, {"conjugation", conjugation(A), false, false}};
    SeededRng rng(name_seed(s.id));
    const auto coeffs = small_coefficients(f, 1);
    auto coeff = [&] {
        return coeffs[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(coeffs.size()) - 1))];
    };
    auto pick = [&] {
        for (;;) {
            auto x = A.make(coeff(), coeff(), coeff(), coeff());
            if (!x.is_zero()) return x;
        }
    };
    for (int n = 0; n < 3; ++n) rows.push_back({"inner-" + std::to_string(n), inner(A, pick()), true, true});
    for (int n = 0; n < 3; ++n) rows.push_back({"ltrans-" + std::to_string(n), left_translation(A, pick()), true, true});

    const auto left = ParallelismModel<F>::left();
    const auto model = ParallelismModel<F>::of(P);
    bool table_ok = true;
    for (const auto& row : rows) {
        std::optional<MapClassification<F>> fz;
        out.push_back(run_check("preserves." + row.name + ".left", [&] {
            fz = factorize(row.map);
            const auto v = preserves_parallelism(*fz, left);
            if (v.preserves != row.left)
                return Outcome::fail(std::string("got ") + (v.preserves ? "true" : "false") + ": " + v.diagnostic);
            return Outcome::pass(v.preserves ? "true" : "false (" + v.diagnostic + ")");
        }));
        out.push_back(run_check("preserves." + row.name + ".P", [&] {
            if (!fz) fz = factorize(row.map);
            const auto v = preserves_parallelism(*fz, model);
            if (v.preserves != row.p)
                return Outcome::fail(std::string("got ") + (v.preserves ? "true" : "false") + ": " + v.diagnostic);
            return Outcome::pass(v.preserves ? "true" : "false (" + v.diagnostic + ")");
        }));
        table_ok = table_ok && out[out.size() - 2].status == Status::Pass && out.back().status == Status::Pass;
    }

    out.push_back(run_check("verdict", [&] {
        if (!table_ok) return Outcome::fail("preservation table does not separate the groups");
        return Outcome::pass("Γ∥ ⊊ Γℓ witnessed by galois");
    }));
    sort_reports(out);
    return out;
}

}  // namespace detail

/// Builds scenario `id` and runs its checks; reports are sorted by name.
inline std::vector<Report> run_example(const std::string& id) {
    const Scenario& s = find_scenario(id);
    const Config cfg = parse_config(s.config);
    return visit_field(cfg.field, [&](const auto& field) {
        return detail::run_scenario(s, build_environment(field, cfg));
    });
}

}  // namespace cliffpar

#endif
