#include "riselab/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace riselab {

using nlohmann::json;

json to_json(const StepFunction& f) {
    std::vector<double> bp;
    bp.reserve(f.plateau_count() + 1);
    bp.push_back(0.0);
    for (double s : f.upper_breakpoints()) bp.push_back(s);
    return json{{"V", f.V()}, {"breakpoints", bp}, {"values", f.plateau_values()}};
}

json to_json(const WeightedSample& s) {
    return json{{"values", s.values()}, {"weights", s.weights()}};
}

json to_json(const ConvexPotential& p) {
    json bounds = json::array();
    for (int a = 0; a < p.polytope().dim; ++a)
        bounds.push_back({p.polytope().bounds[a][0], p.polytope().bounds[a][1]});
    return json{{"dim", p.polytope().dim}, {"bounds", bounds}, {"m", p.polytope().m},
                {"values", p.values()}};
}

json to_json(const SpaceFunction& f) {
    return json{{"dim", f.dim()}, {"R", f.R()}, {"m", f.subdivisions()}, {"values", f.values()}};
}

StepFunction step_function_from_json(const json& j) {
    std::vector<double> bp = j.at("breakpoints").get<std::vector<double>>();
    std::vector<double> values = j.at("values").get<std::vector<double>>();
    if (!bp.empty() && bp.front() == 0.0 && bp.size() == values.size() + 1)
        bp.erase(bp.begin());
    return StepFunction::from_plateaus(std::move(bp), std::move(values));
}

WeightedSample weighted_sample_from_json(const json& j) {
    return WeightedSample(j.at("values").get<std::vector<double>>(),
                          j.at("weights").get<std::vector<double>>());
}

ConvexPotential potential_from_json(const json& j) {
    Polytope poly;
    poly.dim = j.at("dim").get<int>();
    poly.m = j.at("m").get<int>();
    const json& bounds = j.at("bounds");
    for (int a = 0; a < poly.dim && a < static_cast<int>(bounds.size()); ++a) {
        poly.bounds[a][0] = bounds[a][0].get<double>();
        poly.bounds[a][1] = bounds[a][1].get<double>();
    }
    return ConvexPotential(poly, j.at("values").get<std::vector<double>>());
}

SpaceFunction space_function_from_json(const json& j) {
    return SpaceFunction(j.at("dim").get<int>(), j.at("R").get<double>(), j.at("m").get<int>(),
                         j.at("values").get<std::vector<double>>());
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << j.dump(2) << "\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    json j;
    in >> j;
    return j;
}

}  // namespace riselab
