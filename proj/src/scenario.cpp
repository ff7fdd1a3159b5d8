#include "riselab/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <random>
#include <thread>

#include <json.hpp>

#include "riselab/action.hpp"
#include "riselab/generator.hpp"
#include "riselab/json_io.hpp"
#include "riselab/lagrangian.hpp"
#include "riselab/rise.hpp"
#include "riselab/svg.hpp"

namespace riselab {

namespace {

struct ScenarioInfo {
    Scenario scenario;
    const char* name;
};

constexpr ScenarioInfo kScenarios[] = {
    {Scenario::Conservation, "conservation"},
    {Scenario::Pythagoras, "pythagoras"},
    {Scenario::Triangle, "triangle"},
    {Scenario::Contraction, "contraction"},
    {Scenario::FlatCompare, "flat-compare"},
    {Scenario::MeetBound, "meet-bound"},
    {Scenario::MonotoneApprox, "monotone-approx"},
    {Scenario::LeastAction, "least-action"},
    {Scenario::MetricTable, "metric-table"},
    {Scenario::LagrangianStructure, "lagrangian-structure"},
    {Scenario::ExploratoryStrongTriangle, "exploratory-strong-triangle"},
};

double default_grid_constant(Scenario s) {
    switch (s) {
        case Scenario::Conservation: return 1.0;
        case Scenario::FlatCompare: return 4.0;
        case Scenario::MeetBound: return 4.0;
        case Scenario::MonotoneApprox: return 4.0;
        case Scenario::LeastAction: return 4.0;
        default: return 2.0;
    }
}

InstanceKind default_kind(Scenario s, std::uint64_t seed) {
    switch (s) {
        case Scenario::Conservation: return InstanceKind::Smooth;
        case Scenario::Triangle:
        case Scenario::MeetBound:
        case Scenario::ExploratoryStrongTriangle: return InstanceKind::Triple;
        default: return seed % 2 ? InstanceKind::Smooth : InstanceKind::Kinky;
    }
}

InstanceKind resolve_kind(const ScenarioConfig& config, std::uint64_t seed) {
    if (!config.kind.empty()) {
        const auto k = instance_kind_by_name(config.kind);
        if (!k) throw ConfigError("unknown instance kind: " + config.kind);
        return *k;
    }
    return default_kind(config.scenario, seed);
}

std::vector<Chi> resolve_chi(const ScenarioConfig& config) {
    if (config.chi.empty()) return Chi::catalogue();
    std::vector<Chi> out;
    for (const std::string& name : config.chi) {
        const auto c = Chi::by_name(name);
        if (!c) throw ConfigError("unknown chi: " + name);
        out.push_back(*c);
    }
    return out;
}

unsigned worker_count(std::size_t jobs) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("RISELAB_THREADS")) {
        const int cap = std::atoi(env);
        if (cap > 0) hw = std::min<unsigned>(hw, static_cast<unsigned>(cap));
    }
    return static_cast<unsigned>(std::min<std::size_t>(hw, jobs));
}

// deterministic uniforms for scenario-local randomness (families, probes)
double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
double uniform(std::mt19937_64& rng, double lo, double hi) { return lo + (hi - lo) * uniform01(rng); }
int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// The sweep grids approximate the instance's rise, computed once on a grid
// finer than every sweep grid; dt scales with the spacing so both error terms
// vanish together (dt equals the configured value at the headline grid).
Rise conservation_reference(std::uint64_t seed, const ScenarioConfig& config, int ref_m) {
    const auto pots = generate_instance(seed, config.dim, ref_m, resolve_kind(config, seed));
    return rise(pots[0], pots[1]);
}

double conservation_deviation(std::uint64_t seed, const ScenarioConfig& config, int m,
                              const Rise& reference) {
    const auto pots = generate_instance(seed, config.dim, m, resolve_kind(config, seed));
    const GeodesicPath path(pots[0], pots[1]);
    const double dt = config.dt * config.grid_m / m;
    return conservation_deviation_vs(path, reference, config.times, dt);
}

std::vector<CheckRecord> run_conservation(std::uint64_t seed, const ScenarioConfig& config) {
    const double h = 1.0 / config.grid_m;
    const double tol = config.grid_constant * (h + config.dt);
    std::vector<CheckRecord> out;

    int ref_m = config.grid_m;
    for (int m : config.refine_grids) ref_m = std::max(ref_m, m);
    ref_m *= 2;
    const Rise reference = conservation_reference(seed, config, ref_m);

    std::vector<double> devs;
    devs.reserve(config.refine_grids.size());
    double headline = -1.0;
    for (int m : config.refine_grids) {
        devs.push_back(conservation_deviation(seed, config, m, reference));
        if (m == config.grid_m) headline = devs.back();
    }
    if (headline < 0.0) headline = conservation_deviation(seed, config, config.grid_m, reference);

    out.push_back({"velocity-match", seed, headline, tol, headline <= tol});

    double worst_increase = 0.0;
    bool strictly_decreasing = true;
    for (std::size_t i = 0; i + 1 < devs.size(); ++i) {
        worst_increase = std::max(worst_increase, devs[i + 1] - devs[i]);
        if (!(devs[i + 1] < devs[i])) strictly_decreasing = false;
    }
    out.push_back({"refinement-decay", seed, std::max(0.0, worst_increase), 0.0, strictly_decreasing});
    return out;
}

std::vector<CheckRecord> run_pythagoras(std::uint64_t seed, const ScenarioConfig& config) {
    const auto pots = generate_instance(seed, config.dim, config.grid_m, resolve_kind(config, seed));
    const double v = pythagoras_violation(pots[0], pots[1]);
    return {{"pythagoras", seed, v, config.tol_structural, v <= config.tol_structural}};
}

std::vector<CheckRecord> run_triangle(std::uint64_t seed, const ScenarioConfig& config) {
    const auto pots = generate_instance(seed, config.dim, config.grid_m, resolve_kind(config, seed));
    const double v = triangle_hlp_violation(pots[0], pots[1], pots[2]);
    return {{"hlp-triangle", seed, v, config.tol_inequality, v <= config.tol_inequality}};
}

std::vector<CheckRecord> run_contraction(std::uint64_t seed, const ScenarioConfig& config) {
    const auto pair = generate_instance(seed, config.dim, config.grid_m, InstanceKind::MonotonePair);
    const auto other = generate_instance(seed, config.dim, config.grid_m, InstanceKind::Kinky);
    const double v = contraction_violation(pair[0], pair[1], other[0]);
    return {{"contraction", seed, v, config.tol_inequality, v <= config.tol_inequality}};
}

std::vector<CheckRecord> run_flat_compare(std::uint64_t seed, const ScenarioConfig& config) {
    const double h = 1.0 / config.grid_m;
    const double tol = config.grid_constant * h + config.tol_inequality;
    std::vector<CheckRecord> out;

    const auto pair = generate_instance(seed, config.dim, config.grid_m, resolve_kind(config, seed));
    const double chain = flat_chain_violation(flat_compare(pair[0], pair[1]));
    out.push_back({"chain", seed, chain, tol, chain <= tol});

    // chord sandwich along the geodesic (the same chain applied to an inner segment)
    const GeodesicPath path(pair[0], pair[1]);
    const double chord =
        flat_chain_violation(flat_compare(geodesic_at(path, 0.25), geodesic_at(path, 0.75)));
    out.push_back({"chord-sandwich", seed, chord, tol, chord <= tol});

    const auto mono = generate_instance(seed, config.dim, config.grid_m, InstanceKind::MonotonePair);
    const double strong = flat_strong_violation(mono[0], mono[1]);
    out.push_back({"strong-ratio", seed, strong, tol, strong <= tol});
    return out;
}

std::vector<CheckRecord> run_meet_bound(std::uint64_t seed, const ScenarioConfig& config) {
    const double h = 1.0 / config.grid_m;
    const double tol = config.grid_constant * h + config.tol_inequality;
    const auto pots = generate_instance(seed, config.dim, config.grid_m, resolve_kind(config, seed));
    const MeetBoundData data = meet_bound_data(pots[0], pots[1], pots[2]);
    double worst = 0.0;
    for (int j = 1; j <= 5; ++j) {
        const double s = static_cast<double>(j) / 6.0;
        for (int k = 1; k <= 5; ++k) {
            const double sigma = s * static_cast<double>(k) / 6.0;
            worst = std::max(worst, meet_distance_violation(data, sigma, s));
        }
    }
    return {{"meet-bound", seed, worst, tol, worst <= tol}};
}

std::vector<CheckRecord> run_monotone_approx(std::uint64_t seed, const ScenarioConfig& config) {
    const double h = 1.0 / config.grid_m;
    const auto pots = generate_instance(seed, config.dim, config.grid_m, resolve_kind(config, seed));
    const std::vector<double> devs =
        monotone_approx_deviations(pots[0], pots[1], config.support_planes);
    std::vector<CheckRecord> out;

    const double tol_final = config.grid_constant * h;
    out.push_back({"final-deviation", seed, devs.back(), tol_final, devs.back() <= tol_final});

    const double worst = monotone_approx_decay_violation(devs);
    out.push_back({"decay", seed, worst, 0.0, worst == 0.0});
    return out;
}

std::vector<std::pair<std::string, LagrangianSpec>> action_lagrangians() {
    return {
        {"energy", WeightLagrangian{StepFunction::constant(1.0, 1.0)}},
        {"chi2", OrliczIntegralLagrangian{Chi::abs_pow(2.0)}},
        {"norm2", OrliczNormLagrangian{Chi::abs_pow(2.0)}},
    };
}

std::vector<CheckRecord> run_least_action(std::uint64_t seed, const ScenarioConfig& config) {
    const double h = 1.0 / config.grid_m;
    const double tol_path = config.grid_constant * h;
    const auto pots = generate_instance(seed, config.dim, config.grid_m, resolve_kind(config, seed));
    std::vector<CheckRecord> out;

    for (const auto& [name, L] : action_lagrangians()) {
        const LeastActionReport rep = least_action_check(L, pots[0], pots[1], config.partition_points, tol_path);
        const double rect_violation = std::max(0.0, rep.geodesic_action - rep.rectilinear_action);
        out.push_back({"rectilinear:" + name, seed, rect_violation, tol_path, rect_violation <= tol_path});
        const double meet_violation = std::max(0.0, rep.geodesic_action - rep.meet_detour_action);
        out.push_back({"meet-detour:" + name, seed, meet_violation, config.tol_inequality,
                       meet_violation <= config.tol_inequality});
    }

    {  // Luxemburg-norm actions do not depend on T
        const LagrangianSpec norm = OrliczNormLagrangian{Chi::abs_pow(2.0)};
        const double a = action(norm, pots[0], pots[1], 0.5).value;
        const double b = action(norm, pots[0], pots[1], 1.0).value;
        const double c = action(norm, pots[0], pots[1], 2.0).value;
        const double spread = std::max({a, b, c}) - std::min({a, b, c});
        out.push_back({"norm-T-independence", seed, spread, config.tol_inequality,
                       spread <= config.tol_inequality});
    }

    {  // exact partition independence of the geodesic action
        const LagrangianSpec L = OrliczIntegralLagrangian{Chi::abs_pow(2.0)};
        const GeodesicPath path(pots[0], pots[1]);
        auto sample_path = [&](int points) {
            std::vector<ConvexPotential> ps;
            std::vector<double> ts;
            for (int i = 0; i < points; ++i) {
                const double t = static_cast<double>(i) / (points - 1);
                ts.push_back(t);
                ps.push_back(geodesic_at(path, t));
            }
            return path_action(L, ps, ts);
        };
        const double a2 = sample_path(2);
        const double a3 = sample_path(3);
        const double a16 = sample_path(config.partition_points);
        const double spread = std::max({a2, a3, a16}) - std::min({a2, a3, a16});
        const double tol = 1e-11 * std::max(1.0, std::abs(a2));
        out.push_back({"partition-independence", seed, spread, tol, spread <= tol});
    }
    return out;
}

std::vector<CheckRecord> run_metric_table(std::uint64_t seed, const ScenarioConfig& config) {
    std::vector<ConvexPotential> pots;
    if (config.shift != 0.0) {
        auto pair = generate_instance(seed, config.dim, config.grid_m, resolve_kind(config, seed));
        pots.push_back(pair[0]);
        pots.push_back(pair[0].shifted(-config.shift));
    } else {
        pots = generate_instance(seed, config.dim, config.grid_m, resolve_kind(config, seed));
    }
    std::vector<CheckRecord> out;
    for (const Chi& chi : resolve_chi(config)) {
        const double forward = d_chi(pots[0], pots[1], chi);
        const double backward = d_chi(pots[1], pots[0], chi);
        const double v = std::abs(forward - backward);
        const double tol = config.tol_structural * std::max(1.0, std::abs(forward));
        out.push_back({"d_chi-symmetry:" + chi.name(), seed, v, tol, v <= tol});
    }
    if (config.shift != 0.0) {
        for (double p : {1.0, 1.5, 2.0, 3.0, 4.0}) {
            const double v = std::abs(d_p(pots[0], pots[1], p) - std::abs(config.shift));
            char name[32];
            std::snprintf(name, sizeof name, "shift-dp:p%g", p);
            out.push_back({name, seed, v, config.tol_structural, v <= config.tol_structural});
        }
    }
    return out;
}

FenchelLagrangian random_family(std::mt19937_64& rng) {
    FenchelLagrangian family;
    const int members = uniform_int(rng, 1, 4);
    for (int k = 0; k < members; ++k) {
        const int atoms = uniform_int(rng, 2, 6);
        std::vector<double> values(static_cast<std::size_t>(atoms));
        std::vector<double> weights(static_cast<std::size_t>(atoms));
        double mass = 0.0;
        for (int i = 0; i < atoms; ++i) {
            values[static_cast<std::size_t>(i)] = uniform(rng, -2.0, 2.0);
            weights[static_cast<std::size_t>(i)] = uniform(rng, 0.1, 1.0);
            mass += weights[static_cast<std::size_t>(i)];
        }
        for (double& w : weights) w /= mass;  // profiles live on total mass 1
        family.members.push_back({uniform(rng, -1.0, 1.0), WeightedSample(values, weights)});
    }
    return family;
}

std::vector<CheckRecord> run_lagrangian_structure(std::uint64_t seed, const ScenarioConfig& config) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL);
    std::vector<CheckRecord> out;

    {  // sup over permutations equals the similarly-ordered integral
        const int atoms = uniform_int(rng, 2, 6);
        std::vector<double> xi(static_cast<std::size_t>(atoms)), f(static_cast<std::size_t>(atoms));
        for (double& v : xi) v = uniform(rng, -2.0, 2.0);
        for (double& v : f) v = uniform(rng, -2.0, 2.0);
        const double gap = hardy_littlewood_sup_gap(WeightedSample::uniform(xi, 1.0),
                                                    WeightedSample::uniform(f, 1.0));
        out.push_back({"hl-sup", seed, gap, 1e-10, gap <= 1e-10});
    }

    const FenchelLagrangian family = random_family(rng);
    {
        const int atoms = uniform_int(rng, 2, 6);
        std::vector<double> values(static_cast<std::size_t>(atoms));
        std::vector<double> weights(static_cast<std::size_t>(atoms));
        double mass = 0.0;
        for (int i = 0; i < atoms; ++i) {
            values[static_cast<std::size_t>(i)] = uniform(rng, -2.0, 2.0);
            weights[static_cast<std::size_t>(i)] = uniform(rng, 0.1, 1.0);
            mass += weights[static_cast<std::size_t>(i)];
        }
        for (double& w : weights) w /= mass;
        const double v = comparison_violation(family, WeightedSample(values, weights));
        out.push_back({"eq817", seed, v, config.tol_inequality, v <= config.tol_inequality});
    }

    {  // ac modulus decreases along delta halvings toward L(0) = sup a
        double L0 = -std::numeric_limits<double>::infinity();
        for (const FenchelMember& mem : family.members) L0 = std::max(L0, mem.offset);
        double prev = std::numeric_limits<double>::infinity();
        double worst = 0.0;
        double last = 0.0;
        for (int k = 0; k <= 6; ++k) {
            const double delta = std::pow(0.5, k);
            last = ac_modulus(family, 1.0, delta);
            worst = std::max(worst, last - prev);  // must not increase as delta shrinks
            worst = std::max(worst, L0 - last);    // never drops below L(0)
            prev = last;
        }
        worst = std::max(0.0, worst);
        out.push_back({"ac-modulus-decay", seed, worst, config.tol_structural,
                       worst <= config.tol_structural});
    }

    {  // finiteness bound is monotone in lambda
        double worst = 0.0;
        double prev = -std::numeric_limits<double>::infinity();
        for (double lambda : {0.5, 1.0, 2.0}) {
            const double b = finiteness_bound(family, lambda);
            worst = std::max(worst, prev - b);
            prev = b;
        }
        worst = std::max(0.0, worst);
        out.push_back({"finiteness-monotone", seed, worst, config.tol_structural,
                       worst <= config.tol_structural});
    }
    return out;
}

std::vector<CheckRecord> run_exploratory(std::uint64_t seed, const ScenarioConfig& config) {
    const auto pots = generate_instance(seed, config.dim, config.grid_m, resolve_kind(config, seed));
    const Rise ruv = rise(pots[0], pots[1]);
    const Rise rvw = rise(pots[1], pots[2]);
    const Rise ruw = rise(pots[0], pots[2]);
    double deficit = 0.0;  // positive part of the pointwise-integrand violation
    for (double s : ruw.step().midpoints())
        deficit = std::max(deficit, ruw.eval(s) - ruv.eval(s) - rvw.eval(s));
    for (double s : ruv.step().midpoints())
        deficit = std::max(deficit, ruw.eval(s) - ruv.eval(s) - rvw.eval(s));
    // finding only: the scenario records the deficit without judging it
    return {{"pointwise-integrand-deficit", seed, std::max(0.0, deficit), 0.0, true}};
}

std::vector<CheckRecord> run_seed(std::uint64_t seed, const ScenarioConfig& config) {
    switch (config.scenario) {
        case Scenario::Conservation: return run_conservation(seed, config);
        case Scenario::Pythagoras: return run_pythagoras(seed, config);
        case Scenario::Triangle: return run_triangle(seed, config);
        case Scenario::Contraction: return run_contraction(seed, config);
        case Scenario::FlatCompare: return run_flat_compare(seed, config);
        case Scenario::MeetBound: return run_meet_bound(seed, config);
        case Scenario::MonotoneApprox: return run_monotone_approx(seed, config);
        case Scenario::LeastAction: return run_least_action(seed, config);
        case Scenario::MetricTable: return run_metric_table(seed, config);
        case Scenario::LagrangianStructure: return run_lagrangian_structure(seed, config);
        case Scenario::ExploratoryStrongTriangle: return run_exploratory(seed, config);
    }
    throw ConfigError("unknown scenario");
}

}  // namespace

std::optional<Scenario> scenario_by_name(const std::string& name) {
    for (const ScenarioInfo& info : kScenarios)
        if (name == info.name) return info.scenario;
    return std::nullopt;
}

std::string scenario_name(Scenario s) {
    for (const ScenarioInfo& info : kScenarios)
        if (info.scenario == s) return info.name;
    return "?";
}

std::vector<std::string> scenario_names() {
    std::vector<std::string> out;
    for (const ScenarioInfo& info : kScenarios) out.emplace_back(info.name);
    return out;
}

void ScenarioConfig::validate() const {
    if (dim != 1 && dim != 2) throw ConfigError("dim must be 1 or 2");
    if (grid_m < 8) throw ConfigError("grid must have at least 8 subdivisions");
    if (seeds < 1) throw ConfigError("need at least one seed");
    if (!(dt > 0.0) || dt > 0.125) throw ConfigError("dt must lie in (0, 1/8]");
    if (partition_points < 2) throw ConfigError("partition_points must be >= 2");
    if (support_planes < 2) throw ConfigError("support_planes must be >= 2");
    if (scenario == Scenario::Conservation) {
        if (dt >= 1.0 / grid_m) throw ConfigError("grid too coarse for dt: need dt < 1/grid");
        for (int m : refine_grids) {
            if (m < 8) throw ConfigError("refinement grids must have at least 8 subdivisions");
            if (dt >= 1.0 / m) throw ConfigError("grid too coarse for dt in the refinement sweep");
        }
        if (refine_grids.empty()) throw ConfigError("conservation needs a refinement sweep");
        for (double t : times)
            if (!(t - dt > 0.0 && t + dt < 1.0)) throw ConfigError("times must fit in (dt, 1-dt)");
    }
    if (!kind.empty() && !instance_kind_by_name(kind)) throw ConfigError("unknown kind: " + kind);
    for (const std::string& name : chi)
        if (!Chi::by_name(name)) throw ConfigError("unknown chi: " + name);
}

void apply_scenario_defaults(ScenarioConfig& config) {
    if (config.grid_constant <= 0.0) config.grid_constant = default_grid_constant(config.scenario);
}

ScenarioConfig load_config(const std::string& path) {
    nlohmann::json j;
    try {
        j = read_json_file(path);
    } catch (const std::exception& e) {
        throw IoError(e.what());
    }
    ScenarioConfig config;
    try {
        if (j.contains("scenario")) {
            const auto s = scenario_by_name(j["scenario"].get<std::string>());
            if (!s) throw ConfigError("unknown scenario: " + j["scenario"].get<std::string>());
            config.scenario = *s;
        }
        if (j.contains("dim")) config.dim = j["dim"].get<int>();
        if (j.contains("grid")) config.grid_m = j["grid"].get<int>();
        if (j.contains("seeds")) config.seeds = j["seeds"].get<int>();
        if (j.contains("base_seed")) config.base_seed = j["base_seed"].get<std::uint64_t>();
        if (j.contains("dt")) config.dt = j["dt"].get<double>();
        if (j.contains("out")) config.out_dir = j["out"].get<std::string>();
        if (j.contains("kind")) config.kind = j["kind"].get<std::string>();
        if (j.contains("chi")) config.chi = j["chi"].get<std::vector<std::string>>();
        if (j.contains("svg")) config.svg = j["svg"].get<bool>();
        if (j.contains("shift")) config.shift = j["shift"].get<double>();
        if (j.contains("partition_points")) config.partition_points = j["partition_points"].get<int>();
        if (j.contains("support_planes")) config.support_planes = j["support_planes"].get<int>();
        if (j.contains("refine_grids")) config.refine_grids = j["refine_grids"].get<std::vector<int>>();
        if (j.contains("times")) config.times = j["times"].get<std::vector<double>>();
        if (j.contains("tolerances")) {
            const nlohmann::json& t = j["tolerances"];
            if (t.contains("structural")) config.tol_structural = t["structural"].get<double>();
            if (t.contains("inequality")) config.tol_inequality = t["inequality"].get<double>();
            if (t.contains("grid_constant")) config.grid_constant = t["grid_constant"].get<double>();
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
    return config;
}

RunReport run(const ScenarioConfig& raw) {
    ScenarioConfig config = raw;
    apply_scenario_defaults(config);
    config.validate();

    RunReport report;
    report.scenario = scenario_name(config.scenario);
    report.version = kVersion;
    report.dim = config.dim;
    report.grid_m = config.grid_m;
    report.base_seed = config.base_seed;

    const std::size_t n = static_cast<std::size_t>(config.seeds);
    std::vector<std::vector<CheckRecord>> results(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                results[i] = run_seed(config.base_seed + i, config);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned workers = worker_count(n);
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);

    for (std::vector<CheckRecord>& records : results)
        for (CheckRecord& r : records) report.records.push_back(std::move(r));
    return report;
}

namespace {

void emit_scenario_svgs(const RunReport& report, const ScenarioConfig& config) {
    namespace fs = std::filesystem;
    const std::uint64_t seed = config.base_seed;
    const std::string base = (fs::path(config.out_dir) / report.scenario).string();
    switch (config.scenario) {
        case Scenario::FlatCompare: {
            const auto pair = generate_instance(seed, config.dim, config.grid_m, resolve_kind(config, seed));
            const FlatCompareResult fc = flat_compare(pair[0], pair[1]);
            write_svg(base + "_profiles.svg",
                      {staircase(fc.lower, "lower (v-u)*v", "#1f77b4"),
                       staircase(fc.rise.step(), "rise", "#d62728"),
                       staircase(fc.upper, "upper (v-u)*u", "#2ca02c")},
                      "flat comparison, seed " + std::to_string(seed));
            break;
        }
        case Scenario::Conservation: {
            SvgCurve decay;
            decay.label = "max deviation";
            decay.color = "#d62728";
            int ref_m = config.grid_m;
            for (int m : config.refine_grids) ref_m = std::max(ref_m, m);
            const Rise reference = conservation_reference(seed, config, 2 * ref_m);
            for (int m : config.refine_grids) {
                decay.x.push_back(static_cast<double>(m));
                decay.y.push_back(conservation_deviation(seed, config, m, reference));
            }
            write_svg(base + "_refinement.svg", {decay},
                      "velocity-match deviation vs grid, seed " + std::to_string(seed));
            const auto pots = generate_instance(seed, config.dim, config.grid_m, resolve_kind(config, seed));
            write_svg(base + "_rise.svg", {staircase(rise(pots[0], pots[1]).step(), "rise", "#d62728")},
                      "rise profile, seed " + std::to_string(seed));
            break;
        }
        case Scenario::Pythagoras: {
            const auto pots = generate_instance(seed, config.dim, config.grid_m, resolve_kind(config, seed));
            const ConvexPotential m = meet(pots[0], pots[1]);
            write_svg(base + "_profiles.svg",
                      {staircase(rise(pots[0], pots[1]).step(), "rise", "#d62728"),
                       staircase(rise(pots[0], m).step(), "down part", "#1f77b4"),
                       staircase(rise(m, pots[1]).step(), "up part", "#2ca02c")},
                      "envelope decomposition, seed " + std::to_string(seed));
            break;
        }
        case Scenario::MonotoneApprox: {
            const auto pots = generate_instance(seed, config.dim, config.grid_m, resolve_kind(config, seed));
            const std::vector<double> devs =
                monotone_approx_deviations(pots[0], pots[1], config.support_planes);
            SvgCurve c;
            c.label = "deviation";
            c.color = "#1f77b4";
            for (std::size_t i = 0; i < devs.size(); ++i) {
                c.x.push_back(static_cast<double>(i + 2));
                c.y.push_back(devs[i]);
            }
            write_svg(base + "_decay.svg", {c},
                      "approximation deviation vs supporting planes, seed " + std::to_string(seed));
            break;
        }
        case Scenario::MetricTable: {
            std::vector<ConvexPotential> pots;
            if (config.shift != 0.0) {
                auto pair = generate_instance(seed, config.dim, config.grid_m, resolve_kind(config, seed));
                pots.push_back(pair[0]);
                pots.push_back(pair[0].shifted(-config.shift));
            } else {
                pots = generate_instance(seed, config.dim, config.grid_m, resolve_kind(config, seed));
            }
            write_svg(base + "_rise.svg", {staircase(rise(pots[0], pots[1]).step(), "rise", "#d62728")},
                      "rise profile, seed " + std::to_string(seed));
            break;
        }
        default:
            break;
    }
}

void emit_metric_table(const ScenarioConfig& config) {
    namespace fs = std::filesystem;
    std::string text = "scenario,seed,metric,value\n";
    for (int i = 0; i < config.seeds; ++i) {
        const std::uint64_t seed = config.base_seed + static_cast<std::uint64_t>(i);
        std::vector<ConvexPotential> pots;
        if (config.shift != 0.0) {
            auto pair = generate_instance(seed, config.dim, config.grid_m, resolve_kind(config, seed));
            pots.push_back(pair[0]);
            pots.push_back(pair[0].shifted(-config.shift));
        } else {
            pots = generate_instance(seed, config.dim, config.grid_m, resolve_kind(config, seed));
        }
        for (double p : {1.0, 1.5, 2.0, 3.0, 4.0}) {
            char name[16];
            std::snprintf(name, sizeof name, "d_p%g", p);
            text += "metric-table," + std::to_string(seed) + "," + name + "," +
                    format_double(d_p(pots[0], pots[1], p)) + "\n";
        }
        for (const Chi& chi : resolve_chi(config))
            text += "metric-table," + std::to_string(seed) + ",d_chi:" + chi.name() + "," +
                    format_double(d_chi(pots[0], pots[1], chi)) + "\n";
    }
    const fs::path path = fs::path(config.out_dir) / "metrics.csv";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << text;
    if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace

std::string write_artifacts(const RunReport& report, const ScenarioConfig& raw) {
    ScenarioConfig config = raw;
    apply_scenario_defaults(config);
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(config.out_dir, ec);
    if (ec) throw IoError("cannot create output directory: " + config.out_dir);

    const fs::path csv_path = fs::path(config.out_dir) / (report.scenario + ".csv");
    try {
        write_csv(report, csv_path.string());
    } catch (const std::exception& e) {
        throw IoError(e.what());
    }

    nlohmann::json j{{"scenario", report.scenario},
                     {"version", report.version},
                     {"dim", report.dim},
                     {"grid", report.grid_m},
                     {"base_seed", report.base_seed},
                     {"seeds", config.seeds},
                     {"aggregate_pass", report.aggregate_pass()},
                     {"records", report.records.size()}};
    try {
        write_json_file((fs::path(config.out_dir) / "report.json").string(), j);
        if (config.scenario == Scenario::MetricTable) emit_metric_table(config);
        if (config.svg) emit_scenario_svgs(report, config);
    } catch (const IoError&) {
        throw;
    } catch (const std::exception& e) {
        throw IoError(e.what());
    }
    return csv_path.string();
}

}  // namespace riselab
