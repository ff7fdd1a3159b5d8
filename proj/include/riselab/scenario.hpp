#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "riselab/report.hpp"

namespace riselab {

inline const char* kVersion = "riselab 0.1.0";

enum class Scenario {
    Conservation,
    Pythagoras,
    Triangle,
    Contraction,
    FlatCompare,
    MeetBound,
    MonotoneApprox,
    LeastAction,
    MetricTable,
    LagrangianStructure,
    ExploratoryStrongTriangle,
};

std::optional<Scenario> scenario_by_name(const std::string& name);
std::string scenario_name(Scenario s);
std::vector<std::string> scenario_names();

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ScenarioConfig {
    Scenario scenario = Scenario::Pythagoras;
    int dim = 1;
    int grid_m = 64;
    int seeds = 50;
    std::uint64_t base_seed = 1;
    double dt = 1.0 / 256.0;
    std::string out_dir = "out";
    std::string kind;                  // generator kind override; empty = scenario default
    std::vector<std::string> chi;      // chi catalogue selection; empty = defaults
    bool svg = true;
    double tol_structural = 1e-12;
    double tol_inequality = 1e-9;
    double grid_constant = 0.0;        // C in C*h tolerances; 0 = scenario default
    int partition_points = 16;
    int support_planes = 16;
    std::vector<int> refine_grids = {32, 64, 128};
    std::vector<double> times = {0.25, 0.5, 0.75};
    double shift = 0.0;                // metric-table: pair v = u - shift when nonzero

    void validate() const;
};

// Parse a JSON config file; missing keys keep their defaults.
ScenarioConfig load_config(const std::string& path);
void apply_scenario_defaults(ScenarioConfig& config);

// Execute the scenario: deterministic given (config, base_seed); seeds are
// dispatched to a worker pool capped by RISELAB_THREADS, results ordered by
// seed index.
RunReport run(const ScenarioConfig& config);

// Write <out>/<scenario>.csv, <out>/report.json and any scenario SVGs.
// Returns the csv path.
std::string write_artifacts(const RunReport& report, const ScenarioConfig& config);

}  // namespace riselab
