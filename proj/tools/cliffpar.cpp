#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "cliffpar.hpp"

namespace {

enum Exit { Ok = 0, Failed = 1, Usage = 2 };

int emit(const std::vector<cliffpar::Report>& reports, const std::string& json_path) {
    cliffpar::write_human(std::cout, reports);
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) {
            std::cerr << "cannot write " << json_path << '\n';
            return Usage;
        }
        cliffpar::write_json_lines(out, reports);
    }
    return cliffpar::all_passed(reports) ? Ok : Failed;
}

void show_position(std::string_view text, std::size_t pos) {
    std::cerr << "  " << text << '\n' << "  " << std::string(std::min(pos, text.size()), ' ') << "^\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Clifford-like parallelisms over quaternion skew fields"};
    app.require_subcommand(1);

    std::string json_path;

    auto* verify = app.add_subcommand("verify-example", "Rebuild a built-in example and check its verdicts");
    std::string example_id;
    verify->add_option("id", example_id, "root3, c2-sep, c2-sep-old, c2-insep or c2-insep-old")->required();
    verify->add_option("--json", json_path, "Also write JSON-lines reports to this file");

    auto* axioms = app.add_subcommand("axioms", "Run the seeded property suite");
    std::string config_path;
    std::optional<int> samples;
    std::optional<std::uint64_t> seed;
    axioms->add_option("--config", config_path, "Config file")->required();
    axioms->add_option("--samples", samples, "Sample scale (100 = default counts)")->check(CLI::Range(1, 1000000));
    axioms->add_option("--seed", seed, "Seed for every property stream");
    axioms->add_option("--json", json_path, "Also write JSON-lines reports to this file");

    auto* query = app.add_subcommand("query", "Evaluate one expression");
    std::string expr;
    query->add_option("--config", config_path, "Config file")->required();
    query->add_option("expr", expr, "e.g. \"norm i+(1+s)*j\"")->required();
    query->add_option("--json", json_path, "Also write the JSON-lines report to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? Ok : Usage;
    }

    try {
        if (*verify) return emit(cliffpar::run_example(example_id), json_path);

        const cliffpar::Config cfg = cliffpar::load_config(config_path);
        if (*axioms) {
            return emit(cliffpar::run_axiom_suite(cfg, samples.value_or(cfg.samples), seed.value_or(cfg.seed)),
                        json_path);
        }

        try {
            const auto report = cliffpar::query(cfg, expr);
            std::cout << report.witness << '\n';
            if (!json_path.empty()) {
                std::ofstream out(json_path);
                cliffpar::write_json_lines(out, {report});
            }
            return Ok;
        } catch (const cliffpar::ParseError& e) {
            std::cerr << e.what() << '\n';
            show_position(expr, e.position());
            return Usage;
        }
    } catch (const cliffpar::ConfigError& e) {
        std::cerr << config_path << ": " << e.what() << '\n';
        return Usage;
    } catch (const cliffpar::Error& e) {
        std::cerr << e.what() << '\n';
        return e.kind() == cliffpar::ErrorKind::UnknownScenario ? Usage : Failed;
    }
}
