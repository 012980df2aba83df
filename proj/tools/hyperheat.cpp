#include "hyperheat/errors.hpp"
#include "hyperheat/experiments/experiments.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

namespace {

struct Options {
    std::string config;
    std::string out;
    std::optional<std::uint64_t> seed;
};

void print_summary(const hyperheat::experiments::ResultRecord& record, const std::string& dir) {
    for (const auto& m : record.metrics) {
        std::printf("%-40s %-14.6g %-6s %-12.6g %s\n", m.name.c_str(), m.value, m.comparator.c_str(), m.threshold,
                    m.comparator == "report" ? "" : (m.pass ? "ok" : "VIOLATED"));
    }
    for (const auto& [key, value] : record.labels) std::printf("%s: %s\n", key.c_str(), value.c_str());
    std::printf("results written to %s\n", dir.c_str());
}

}  // namespace

int main(int argc, char** argv) {
    namespace ex = hyperheat::experiments;
    CLI::App app{"Mild solutions of the hyperdissipative heat equation: numerical experiments"};
    app.require_subcommand(1);
    Options options;
    const char* verbs[] = {"smoothing", "scaling", "criticality", "contraction", "stability", "solve", "sweep"};
    for (const char* verb : verbs) {
        auto* sub = app.add_subcommand(verb, std::string("run the ") + verb + " experiment");
        sub->add_option("--config", options.config, "INI experiment config (defaults used if omitted)");
        sub->add_option("--out", options.out, "output directory (overrides [experiment] output)");
        sub->add_option("--seed", options.seed, "RNG seed (overrides [experiment] seed)");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        const std::string verb = app.get_subcommands().front()->get_name();
        const std::string id = ex::canonical_id(verb);
        ex::ExperimentConfig config = options.config.empty() ? ex::default_config(id) : ex::load_config(options.config);
        if (config.id != id) {
            std::cerr << "error: config is for '" << config.id << "' but verb is '" << verb << "'\n";
            return 1;
        }
        if (options.seed) config.seed = *options.seed;
        if (!options.out.empty()) config.output = options.out;
        const auto record = ex::run_experiment(config);
        ex::emit_results(record, config.output);
        print_summary(record, config.output);
        return record.all_pass() ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
