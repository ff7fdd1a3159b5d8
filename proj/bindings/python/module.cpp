#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "riselab/action.hpp"
#include "riselab/generator.hpp"
#include "riselab/json_io.hpp"
#include "riselab/lagrangian.hpp"
#include "riselab/rearrange.hpp"
#include "riselab/rise.hpp"
#include "riselab/scenario.hpp"
#include "riselab/toric.hpp"

namespace py = pybind11;
using namespace riselab;

namespace {

LagrangianSpec make_lagrangian(const std::string& variant, const std::string& chi_name) {
    const auto chi = Chi::by_name(chi_name);
    if (!chi) throw std::invalid_argument("unknown chi: " + chi_name);
    if (variant == "orlicz-integral") return OrliczIntegralLagrangian{*chi};
    if (variant == "orlicz-norm") return OrliczNormLagrangian{*chi};
    throw std::invalid_argument("unknown lagrangian variant: " + variant);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "rearrangement calculus, toric potentials, rises and actions";

    py::class_<WeightedSample>(m, "WeightedSample")
        .def(py::init<std::vector<double>, std::vector<double>>(), py::arg("values"),
             py::arg("weights"))
        .def_static("uniform", &WeightedSample::uniform, py::arg("values"),
                    py::arg("total_mass") = 1.0)
        .def_property_readonly("values", &WeightedSample::values)
        .def_property_readonly("weights", &WeightedSample::weights)
        .def_property_readonly("total_mass", &WeightedSample::total_mass)
        .def("integral", &WeightedSample::integral);

    py::class_<StepFunction>(m, "StepFunction")
        .def_static("from_plateaus", &StepFunction::from_plateaus, py::arg("upper"),
                    py::arg("values"))
        .def_static("constant", &StepFunction::constant, py::arg("value"), py::arg("total_mass"))
        .def_property_readonly("V", &StepFunction::V)
        .def_property_readonly("breakpoints", &StepFunction::upper_breakpoints)
        .def_property_readonly("values", &StepFunction::plateau_values)
        .def("__call__", &StepFunction::eval, py::arg("s"))
        .def("eval", &StepFunction::eval, py::arg("s"))
        .def("partial_integral", &StepFunction::partial_integral, py::arg("lam"))
        .def("integral", &StepFunction::integral)
        .def("midpoints", &StepFunction::midpoints);

    m.def("rearrange", &rearrange, py::arg("sample"));
    m.def("hlp_geq", &hlp_geq, py::arg("f"), py::arg("g"), py::arg("tol"));
    m.def("distribution_bounds_check", &distribution_bounds_check, py::arg("sample"));
    m.def("equidistributed", &equidistributed, py::arg("a"), py::arg("b"), py::arg("tol"));
    m.def("rescale_allied", &rescale_allied, py::arg("f"), py::arg("alpha"), py::arg("beta"));

    py::class_<Polytope>(m, "Polytope")
        .def_static("unit", &Polytope::unit, py::arg("dim"), py::arg("m"))
        .def_readonly("dim", &Polytope::dim)
        .def_readonly("m", &Polytope::m)
        .def("node_count", &Polytope::node_count);

    py::class_<ConvexPotential>(m, "ConvexPotential")
        .def(py::init<Polytope, std::vector<double>>(), py::arg("polytope"), py::arg("values"))
        .def_property_readonly("polytope", &ConvexPotential::polytope)
        .def_property_readonly("values", &ConvexPotential::values)
        .def("shifted", &ConvexPotential::shifted, py::arg("c"));

    py::class_<SpaceFunction>(m, "SpaceFunction")
        .def(py::init<int, double, int, std::vector<double>>(), py::arg("dim"), py::arg("R"),
             py::arg("subdivisions"), py::arg("values"))
        .def_property_readonly("dim", &SpaceFunction::dim)
        .def_property_readonly("R", &SpaceFunction::R)
        .def_property_readonly("subdivisions", &SpaceFunction::subdivisions)
        .def_property_readonly("values", &SpaceFunction::values);

    py::class_<GeodesicPath>(m, "GeodesicPath")
        .def(py::init<ConvexPotential, ConvexPotential>(), py::arg("start"), py::arg("end"));

    m.def("convexify", &convexify, py::arg("polytope"), py::arg("values"));
    m.def("is_grid_convex", &is_grid_convex, py::arg("polytope"), py::arg("values"),
          py::arg("tol") = 1e-9);
    m.def("meet", &meet, py::arg("u_hat"), py::arg("v_hat"));
    m.def("join", &join, py::arg("u_hat"), py::arg("v_hat"));
    m.def("geodesic_at", &geodesic_at, py::arg("path"), py::arg("t"));
    m.def(
        "legendre",
        [](const ConvexPotential& u, double R, int subdivisions) {
            return legendre(u, XGridSpec{R, subdivisions});
        },
        py::arg("u_hat"), py::arg("R") = 0.0, py::arg("subdivisions") = 0);
    m.def("project_space_function", &project_space_function, py::arg("f"), py::arg("polytope"));
    m.def("pushforward_measure", &pushforward_measure, py::arg("u_hat"), py::arg("g"));
    m.def(
        "velocity_finite_difference",
        [](const GeodesicPath& path, double t, double dt) {
            return velocity_finite_difference(path, t, dt);
        },
        py::arg("path"), py::arg("t"), py::arg("dt"));
    m.def(
        "envelope_oracle",
        [](const ConvexPotential& u, const ConvexPotential& v, double t, std::vector<double> x) {
            std::array<double, 2> xx{0.0, 0.0};
            for (std::size_t i = 0; i < x.size() && i < 2; ++i) xx[i] = x[i];
            return envelope_oracle(u, v, t, xx);
        },
        py::arg("u_hat"), py::arg("v_hat"), py::arg("t"), py::arg("x"));

    py::class_<Rise>(m, "Rise")
        .def_property_readonly("step", &Rise::step)
        .def("__call__", &Rise::eval, py::arg("s"))
        .def("partial_integral", &Rise::partial_integral, py::arg("lam"));

    m.def("rise", &rise, py::arg("u_hat"), py::arg("v_hat"));
    m.def("rise_of_segment", &rise_of_segment, py::arg("path"), py::arg("a"), py::arg("b"));
    m.def("rise_reversed", &rise_reversed, py::arg("r"));
    m.def("pythagoras_violation", &pythagoras_violation, py::arg("u_hat"), py::arg("v_hat"));
    m.def("triangle_hlp_violation", &triangle_hlp_violation, py::arg("u_hat"), py::arg("v_hat"),
          py::arg("w_hat"));
    m.def("contraction_violation", &contraction_violation, py::arg("u_hat"), py::arg("v_hat"),
          py::arg("w_hat"));
    m.def(
        "flat_compare",
        [](const ConvexPotential& u, const ConvexPotential& v) {
            FlatCompareResult r = flat_compare(u, v);
            return py::make_tuple(r.lower, r.rise, r.upper);
        },
        py::arg("u_hat"), py::arg("v_hat"));
    m.def("flat_strong_violation", &flat_strong_violation, py::arg("u_hat"), py::arg("v_hat"));
    m.def("meet_distance_bound_check", &meet_distance_bound_check, py::arg("u_hat"),
          py::arg("v_hat"), py::arg("w_hat"), py::arg("sigma"), py::arg("s"), py::arg("tol"));
    m.def(
        "conservation_deviation",
        [](const GeodesicPath& path, std::vector<double> times, double dt) {
            return conservation_check(path, times, dt, 1.0).max_deviation;
        },
        py::arg("path"), py::arg("times"), py::arg("dt"));

    m.def("chi_names", []() {
        std::vector<std::string> names;
        for (const Chi& c : Chi::catalogue()) names.push_back(c.name());
        return names;
    });
    m.def("d_chi",
          [](const ConvexPotential& u, const ConvexPotential& v, const std::string& chi_name) {
              const auto chi = Chi::by_name(chi_name);
              if (!chi) throw std::invalid_argument("unknown chi: " + chi_name);
              return d_chi(u, v, *chi);
          },
          py::arg("u_hat"), py::arg("v_hat"), py::arg("chi"));
    m.def("d_p", &d_p, py::arg("u_hat"), py::arg("v_hat"), py::arg("p"));
    m.def(
        "action",
        [](const std::string& variant, const std::string& chi_name, const ConvexPotential& u,
           const ConvexPotential& v, double T) {
            return action(make_lagrangian(variant, chi_name), u, v, T).value;
        },
        py::arg("variant"), py::arg("chi"), py::arg("u_hat"), py::arg("v_hat"), py::arg("T"));

    m.def(
        "generate_instance",
        [](std::uint64_t seed, int dim, int m_sub, const std::string& kind) {
            const auto k = instance_kind_by_name(kind);
            if (!k) throw std::invalid_argument("unknown kind: " + kind);
            return generate_instance(seed, dim, m_sub, *k);
        },
        py::arg("seed"), py::arg("dim"), py::arg("m"), py::arg("kind"));

    m.def("scenario_names", &scenario_names);
    m.def(
        "run_scenario",
        [](const std::string& name, int dim, int grid, int seeds, std::uint64_t base_seed,
           const std::string& out_dir, bool svg) {
            const auto s = scenario_by_name(name);
            if (!s) throw std::invalid_argument("unknown scenario: " + name);
            ScenarioConfig config;
            config.scenario = *s;
            config.dim = dim;
            config.grid_m = grid;
            config.seeds = seeds;
            config.base_seed = base_seed;
            config.out_dir = out_dir;
            config.svg = svg;
            const RunReport report = run(config);
            std::string csv;
            if (!out_dir.empty()) csv = write_artifacts(report, config);
            py::list rows;
            for (const CheckRecord& r : report.records)
                rows.append(py::make_tuple(r.check, r.seed, r.max_violation, r.tolerance, r.pass));
            return py::make_tuple(report.aggregate_pass(), rows, csv);
        },
        py::arg("name"), py::arg("dim") = 1, py::arg("grid") = 32, py::arg("seeds") = 5,
        py::arg("base_seed") = 1, py::arg("out_dir") = "", py::arg("svg") = false);

    m.def("potential_to_json", [](const ConvexPotential& p) { return to_json(p).dump(); });
    m.def("potential_from_json",
          [](const std::string& text) { return potential_from_json(nlohmann::json::parse(text)); });

    m.attr("__version__") = "0.1.0";
}
