#ifndef CLIFFPAR_CONFIG_HPP
#define CLIFFPAR_CONFIG_HPP

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "cliffpar/errors.hpp"
#include "cliffpar/parallelisms.hpp"
#include "cliffpar/parse.hpp"

namespace cliffpar {

/// Raw value of one config key together with where it starts in the file.
struct ConfigValue {
    std::string text;
    std::size_t line = 0;
    std::size_t column = 0;
};

/// Flat `key = value` file; `#` starts a comment.
///
///   field           rationals | qsqrt(m) | f2tu            (required)
///   algebra         ordinary[(a,b)] | cyclic_char2(b) [override x*y=q, ...]
///   defining_reps   [span(q;q), ...]
///   flags           all_separable, all_inseparable or none
///   samples         positive integer (default 100)
///   seed            unsigned integer, decimal or 0x-hex (default 42)
///   complement_reps, complement_flags   describe the star minus the defining set
struct Config {
    FieldConfig field;
    std::optional<ConfigValue> algebra;
    std::optional<ConfigValue> defining_reps;
    std::optional<ConfigValue> flags;
    std::optional<ConfigValue> complement_reps;
    std::optional<ConfigValue> complement_flags;
    int samples = 100;
    std::uint64_t seed = 42;
};

namespace detail {

inline std::string_view trim(std::string_view s, std::size_t* lead = nullptr) {
    std::size_t a = 0;
    while (a < s.size() && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    std::size_t b = s.size();
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    if (lead) *lead = a;
    return s.substr(a, b - a);
}

inline std::uint64_t parse_unsigned(const ConfigValue& v, const char* what) {
    std::size_t used = 0;
    std::uint64_t n = 0;
    try {
        n = std::stoull(v.text, &used, 0);
    } catch (const std::exception&) {
        throw ConfigError(v.line, v.column, std::string("expected ") + what);
    }
    if (used != v.text.size() || v.text[0] == '-')
        throw ConfigError(v.line, v.column + used, std::string("expected ") + what);
    return n;
}

}  // namespace detail

inline Config parse_config(std::string_view text) {
    static const char* const known[] = {"field", "algebra", "defining_reps", "flags",
                                        "samples", "seed", "complement_reps", "complement_flags"};
    std::map<std::string, ConfigValue> values;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        start = end + 1;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        std::size_t lead = 0;
        if (detail::trim(line, &lead).empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) throw ConfigError(line_no, lead + 1, "expected 'key = value'");
        const std::string key(detail::trim(line.substr(0, eq)));
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw ConfigError(line_no, lead + 1, "unknown key '" + key + "'");
        if (values.count(key)) throw ConfigError(line_no, lead + 1, "duplicate key '" + key + "'");
        std::size_t vlead = 0;
        const std::string_view value = detail::trim(line.substr(eq + 1), &vlead);
        if (value.empty()) throw ConfigError(line_no, eq + 2, "missing value for '" + key + "'");
        values[key] = ConfigValue{std::string(value), line_no, eq + 2 + vlead};
    }

    Config cfg;
    auto it = values.find("field");
    if (it == values.end()) throw ConfigError(1, 1, "missing required key 'field'");
    try {
        cfg.field = parse_field_config(it->second.text);
    } catch (const ParseError& e) {
        throw ConfigError(it->second.line, it->second.column + e.position(), e.what());
    }
    auto take = [&](const char* key) -> std::optional<ConfigValue> {
        auto v = values.find(key);
        if (v == values.end()) return std::nullopt;
        return v->second;
    };
    cfg.algebra = take("algebra");
    cfg.defining_reps = take("defining_reps");
    cfg.flags = take("flags");
    cfg.complement_reps = take("complement_reps");
    cfg.complement_flags = take("complement_flags");
    if (auto v = take("samples")) {
        const auto n = detail::parse_unsigned(*v, "a positive sample count");
        if (n == 0 || n > 1000000) throw ConfigError(v->line, v->column, "samples must be in 1..1000000");
        cfg.samples = static_cast<int>(n);
    }
    if (auto v = take("seed")) cfg.seed = detail::parse_unsigned(*v, "an unsigned seed");
    return cfg;
}

inline Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(0, 0, "cannot read config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

/// Algebra, defining set and parallelism described by a config.
template <BaseField F>
struct Environment {
    F field;
    QuaternionAlgebra<F> algebra;
    CliffordLikeParallelism<F> parallelism;
};

namespace detail {

template <class T, class Fn>
T at_value(const ConfigValue& v, Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        throw ConfigError(v.line, v.column + e.position(), e.what());
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError(v.line, v.column, e.what());
    }
}

template <BaseField F>
DefiningSet<F> described_set(const QuaternionAlgebra<F>& A, const std::optional<ConfigValue>& reps,
                             const std::optional<ConfigValue>& flags) {
    DefiningSet<F> D;
    if (reps) {
        D.reps = at_value<std::vector<Line<F>>>(*reps, [&] {
            Cursor cur(reps->text);
            auto v = parse_line_list(A, cur);
            cur.expect_end();
            return v;
        });
    }
    if (flags) {
        at_value<int>(*flags, [&] {
            Cursor cur(flags->text);
            do {
                const std::size_t at = cur.pos();
                const std::string f = cur.identifier();
                if (f == "all_separable") {
                    D.all_separable = true;
                } else if (f == "all_inseparable") {
                    D.all_inseparable = true;
                } else if (f != "none") {
                    throw ParseError(at, "unknown flag '" + f + "' (all_separable | all_inseparable | none)");
                }
            } while (cur.accept(',') || cur.accept('|'));
            cur.expect_end();
            return 0;
        });
    }
    return D;
}

}  // namespace detail

/// Builds the environment for the field selected by `cfg`; every failure is
/// reported as a ConfigError pointing into the offending value.
template <BaseField F>
Environment<F> build_environment(const F& field, const Config& cfg) {
    auto algebra = cfg.algebra ? detail::at_value<QuaternionAlgebra<F>>(*cfg.algebra, [&] {
        return parse_algebra(field, cfg.algebra->text);
    })
                               : [&] {
                                     if (field.characteristic() == 2)
                                         return QuaternionAlgebra<F>::cyclic_char2(
                                             field, parse_field_element(field, "t+u"));
                                     return QuaternionAlgebra<F>::ordinary(field);
                                 }();
    const auto D = detail::described_set(algebra, cfg.defining_reps, cfg.flags);
    std::optional<DefiningSet<F>> C;
    if (cfg.complement_reps || cfg.complement_flags)
        C = detail::described_set(algebra, cfg.complement_reps, cfg.complement_flags);
    const ConfigValue where = cfg.defining_reps ? *cfg.defining_reps
                              : cfg.flags       ? *cfg.flags
                                                : ConfigValue{"", 1, 1};
    auto P = detail::at_value<CliffordLikeParallelism<F>>(where, [&] {
        return CliffordLikeParallelism<F>(algebra, D, C);
    });
    return Environment<F>{field, std::move(algebra), std::move(P)};
}

}  // namespace cliffpar

#endif
