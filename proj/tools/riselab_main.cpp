#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "riselab/scenario.hpp"

namespace {

struct CliOverrides {
    std::string config_path;
    int grid = 0;
    long long seed = -1;
    int seeds = 0;
    double dt = 0.0;
    std::string out;
    int dim = 0;
    std::string kind;
};

int run_scenario(riselab::Scenario scenario, const CliOverrides& cli) {
    riselab::ScenarioConfig config;
    if (!cli.config_path.empty()) config = riselab::load_config(cli.config_path);
    config.scenario = scenario;
    if (cli.grid > 0) config.grid_m = cli.grid;
    if (cli.seed >= 0) config.base_seed = static_cast<std::uint64_t>(cli.seed);
    if (cli.seeds > 0) config.seeds = cli.seeds;
    if (cli.dt > 0.0) config.dt = cli.dt;
    if (!cli.out.empty()) config.out_dir = cli.out;
    if (cli.dim > 0) config.dim = cli.dim;
    if (!cli.kind.empty()) config.kind = cli.kind;

    const riselab::RunReport report = riselab::run(config);
    const std::string csv = riselab::write_artifacts(report, config);

    int failed = 0;
    for (const riselab::CheckRecord& r : report.records)
        if (!r.pass) ++failed;
    std::printf("%s: %zu records, %d failed, csv: %s\n", report.scenario.c_str(),
                report.records.size(), failed, csv.c_str());
    if (config.scenario == riselab::Scenario::ExploratoryStrongTriangle) return 0;
    return report.aggregate_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for rearrangements, rises and actions of convex potentials"};
    app.require_subcommand(1);

    CliOverrides cli;
    for (const std::string& name : riselab::scenario_names()) {
        CLI::App* sub = app.add_subcommand(name, "run the " + name + " scenario");
        sub->add_option("--config", cli.config_path, "JSON config file");
        sub->add_option("--grid", cli.grid, "grid subdivisions per axis");
        sub->add_option("--seed", cli.seed, "base seed");
        sub->add_option("--seeds", cli.seeds, "number of seeds");
        sub->add_option("--dt", cli.dt, "finite-difference time step");
        sub->add_option("--out", cli.out, "output directory");
        sub->add_option("--dim", cli.dim, "polytope dimension (1 or 2)");
        sub->add_option("--kind", cli.kind, "instance kind (kinky|smooth|monotone-pair|triple)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        const std::string chosen = app.get_subcommands().front()->get_name();
        return run_scenario(*riselab::scenario_by_name(chosen), cli);
    } catch (const riselab::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const riselab::IoError& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
