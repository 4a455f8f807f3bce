#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "oracles.hpp"

using namespace cliffpar;

namespace {

std::string cfg_path(const char* name) { return std::string(CONFIG_DIR) + "/" + name; }

std::string run_query(const char* cfg, const char* expr) { return query(load_config(cfg_path(cfg)), expr).witness; }

}  // namespace

TEST(Config, ParsesKeysAndDefaults) {
    const auto cfg = parse_config("# comment\nfield = qsqrt(3)\n\nalgebra = ordinary(-1,-1)  # trailing\n");
    EXPECT_EQ(cfg.field.kind, FieldKind::QuadExt);
    EXPECT_EQ(cfg.samples, 100);
    EXPECT_EQ(cfg.seed, 42U);
    ASSERT_TRUE(cfg.algebra);
    EXPECT_EQ(cfg.algebra->text, "ordinary(-1,-1)");
    EXPECT_EQ(cfg.algebra->line, 4U);
    EXPECT_EQ(parse_config("field = f2tu\nseed = 0x10\nsamples = 7").seed, 16U);
}

TEST(Config, ErrorsCarryPositions) {
    auto where = [](const char* text) -> std::pair<std::size_t, std::size_t> {
        try {
            parse_config(text);
        } catch (const ConfigError& e) {
            return {e.line(), e.column()};
        }
        return {0, 0};
    };
    EXPECT_EQ(where("field = f2tu\nbogus = 1\n"), std::make_pair(std::size_t{2}, std::size_t{1}));
    EXPECT_EQ(where("algebra = ordinary\n"), std::make_pair(std::size_t{1}, std::size_t{1}));
    EXPECT_EQ(where("field = f2tu\nsamples = 0\n").first, 2U);
    EXPECT_EQ(where("field = f2tu\nfield = rationals\n").first, 2U);
    EXPECT_THROW(load_config(cfg_path("missing.cfg")), ConfigError);
}

TEST(Config, BadDefiningSetIsAConfigError) {
    const auto cfg = parse_config("field = qsqrt(3)\ndefining_reps = [span(j; k)]\n");
    EXPECT_THROW(visit_field(cfg.field, [&](const auto& f) { return build_environment(f, cfg).field.name(); }),
                 ConfigError);
    const auto typo = parse_config("field = qsqrt(3)\ndefining_reps = [span(1; i+)]\n");
    try {
        visit_field(typo.field, [&](const auto& f) { return build_environment(f, typo).field.name(); });
        FAIL() << "expected a ConfigError";
    } catch (const ConfigError& e) {
        EXPECT_EQ(e.line(), 2U);
        EXPECT_GT(e.column(), 17U);
    }
}

TEST(Parse, Expressions) {
    const QuadField Q3(3);
    const auto H = QuaternionAlgebra<QuadField>::ordinary(Q3);
    EXPECT_EQ(parse_quaternion(H, "(i+j)^2"), parse_quaternion(H, "-2"));
    EXPECT_EQ(parse_quaternion(H, "1/2*i - s*k"), H.make(Q3.zero(), parse_field_element(Q3, "1/2"), Q3.zero(),
                                                          parse_field_element(Q3, "-s")));
    try {
        parse_quaternion(H, "i + * j");
        FAIL() << "expected a ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 4U);
    }
    EXPECT_THROW(parse_quaternion(H, "i+t"), ParseError);
    EXPECT_THROW(parse_map(H, "inner(0)"), Error);
    EXPECT_EQ(parse_map(H, "ltrans(2+j).inner(i)"), left_translation(H, parse_quaternion(H, "2+j")) *
                                                         inner(H, parse_quaternion(H, "i")));
}

TEST(Query, Examples) {
    EXPECT_EQ(run_query("root3.cfg", "norm i+(1+s)*j"), "5+2*s");
    EXPECT_EQ(run_query("c2-sep.cfg", "mul j i"), "j+k");
    EXPECT_EQ(run_query("root3.cfg", "parallel? span(1;i) span(j;k) left"), "true");
    EXPECT_EQ(run_query("root3.cfg", "conjugate? span(1;i) span(1;j)"), "true");
    EXPECT_EQ(run_query("root3.cfg", "anchor-left span(j;k)"), "span(1;i)");
    EXPECT_EQ(run_query("root3.cfg", "classify ltrans(1+i)"), "ltrans(1+i) o automorphism");
    EXPECT_EQ(run_query("root3.cfg", "classify conj"), "antiautomorphism");
    EXPECT_EQ(run_query("root3.cfg", "preserves? galois left"), "true");
    EXPECT_EQ(run_query("root3.cfg", "preserves? galois").rfind("false (", 0), 0U);
    EXPECT_THROW(run_query("root3.cfg", "frobnicate i"), ParseError);
}

TEST(Report, JsonLinesHaveFixedKeyOrder) {
    std::ostringstream os;
    write_json_lines(os, {{"a.b", Status::Fail, "x = \"1\"", 1.5}, {"c", Status::Skip, "", 0}});
    std::istringstream in(os.str());
    std::string line;
    std::vector<std::string> keys;
    std::getline(in, line);
    const auto j = nlohmann::ordered_json::parse(line);
    for (const auto& item : j.items()) keys.push_back(item.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"check", "status", "witness", "ms"}));
    EXPECT_EQ(j["status"], "fail");
    EXPECT_EQ(j["witness"], "x = \"1\"");
    std::getline(in, line);
    EXPECT_EQ(nlohmann::json::parse(line)["status"], "skip");
}

TEST(Report, ExceptionsBecomeFailures) {
    const auto r = run_check("boom", []() -> Outcome { throw Error(ErrorKind::ZeroElement, "nope"); });
    EXPECT_EQ(r.status, Status::Fail);
    EXPECT_NE(r.witness.find("nope"), std::string::npos);
    std::vector<Report> v{{"b", Status::Pass, "", 0}, {"a", Status::Skip, "", 0}};
    sort_reports(v);
    EXPECT_EQ(v[0].check, "a");
    EXPECT_TRUE(all_passed(v));
}

TEST(Scenarios, AllPass) {
    for (const auto& s : scenarios()) {
        const auto reports = run_example(s.id);
        for (const auto& r : reports) EXPECT_EQ(r.status, Status::Pass) << s.id << " " << r.check << ": " << r.witness;
        EXPECT_TRUE(std::is_sorted(reports.begin(), reports.end(),
                                   [](const Report& a, const Report& b) { return a.check < b.check; }));
    }
    EXPECT_THROW(run_example("nosuch"), Error);
}

TEST(Scenarios, ConfigFilesMatchBuiltIns) {
    for (const auto& s : scenarios()) {
        const auto file = load_config(cfg_path((s.id + ".cfg").c_str()));
        const auto built = scenario_config(s.id);
        EXPECT_EQ(file.field.name(), built.field.name());
        EXPECT_EQ(file.defining_reps->text, built.defining_reps->text);
        EXPECT_EQ(file.flags.has_value(), built.flags.has_value());
    }
}

namespace {

std::vector<std::pair<std::string, std::string>> stripped(const std::vector<Report>& v) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& r : v) out.emplace_back(r.check + ":" + to_string(r.status), r.witness);
    return out;
}

}  // namespace

TEST(Axioms, RationalsPassAndAreDeterministic) {
    const auto cfg = load_config(cfg_path("rationals.cfg"));
    const auto a = run_axiom_suite(cfg, 20, 7);
    for (const auto& r : a) EXPECT_NE(r.status, Status::Fail) << r.check << ": " << r.witness;
    EXPECT_EQ(stripped(a), stripped(run_axiom_suite(cfg, 20, 7)));
    EXPECT_NE(stripped(a), stripped(run_axiom_suite(cfg, 20, 8)));
}

TEST(Axioms, CorruptedTableIsCaught) {
    const auto reports = run_axiom_suite(load_config(cfg_path("corrupted.cfg")), 5, 1);
    EXPECT_FALSE(all_passed(reports));
    bool assoc = false;
    for (const auto& r : reports)
        if (r.check.find("associativity") != std::string::npos) assoc = r.status == Status::Fail;
    EXPECT_TRUE(assoc);
}
