#include "riselab/action.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace riselab {

double d_chi_of_rise(const Rise& r, const Chi& chi) {
    const StepFunction& f = r.step();
    double acc = 0.0;
    for (std::size_t k = 0; k < f.plateau_count(); ++k)
        acc += chi(std::abs(f.plateau_values()[k])) * f.length(k);
    return acc;
}

double d_chi(const ConvexPotential& u_hat, const ConvexPotential& v_hat, const Chi& chi) {
    return d_chi_of_rise(rise(u_hat, v_hat), chi);
}

double d_p(const ConvexPotential& u_hat, const ConvexPotential& v_hat, double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("d_p: need p >= 1");
    const Rise r = rise(u_hat, v_hat);
    const StepFunction& f = r.step();
    double acc = 0.0;
    for (std::size_t k = 0; k < f.plateau_count(); ++k)
        acc += std::pow(std::abs(f.plateau_values()[k]), p) * f.length(k);
    return std::pow(acc, 1.0 / p);
}

ActionValue action(const LagrangianSpec& L, const ConvexPotential& u_hat,
                   const ConvexPotential& v_hat, double T) {
    if (!(T > 0.0)) throw std::invalid_argument("action: T must be positive");
    const Rise r = rise(u_hat, v_hat);
    return ActionValue{T * l_star(L, r.step().scaled(1.0 / T)), T};
}

double path_action(const LagrangianSpec& L, const std::vector<ConvexPotential>& potentials,
                   const std::vector<double>& times) {
    if (potentials.size() != times.size() || times.size() < 2)
        throw std::invalid_argument("path_action: need >= 2 potentials with matching times");
    for (std::size_t i = 0; i + 1 < times.size(); ++i)
        if (!(times[i] < times[i + 1]))
            throw std::invalid_argument("path_action: times must be strictly increasing");
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < potentials.size(); ++i)
        acc += action(L, potentials[i], potentials[i + 1], times[i + 1] - times[i]).value;
    return acc;
}

double triangle_action_violation(const LagrangianSpec& L, const ConvexPotential& u_hat,
                                 const ConvexPotential& v_hat, const ConvexPotential& w_hat,
                                 double S, double T) {
    if (!(S > 0.0 && T > 0.0)) throw std::invalid_argument("triangle_action_check: need S, T > 0");
    const double lhs = action(L, u_hat, v_hat, S).value + action(L, v_hat, w_hat, T).value;
    const double rhs = action(L, u_hat, w_hat, S + T).value;
    return std::max(0.0, rhs - lhs);
}

bool triangle_action_check(const LagrangianSpec& L, const ConvexPotential& u_hat,
                           const ConvexPotential& v_hat, const ConvexPotential& w_hat, double S,
                           double T, double tol) {
    return triangle_action_violation(L, u_hat, v_hat, w_hat, S, T) <= tol;
}

std::vector<ConvexPotential> rectilinear_projected_path(const ConvexPotential& u_hat,
                                                        const ConvexPotential& v_hat,
                                                        const std::vector<double>& times) {
    const XGridSpec spec = shared_grid(u_hat, v_hat);
    const SpaceFunction u = legendre(u_hat, spec);
    const SpaceFunction v = legendre(v_hat, spec);
    std::vector<ConvexPotential> out;
    out.reserve(times.size());
    for (double t : times) {
        if (t == 0.0) {
            out.push_back(u_hat);
            continue;
        }
        if (t == 1.0) {
            out.push_back(v_hat);
            continue;
        }
        std::vector<double> blend(u.values().size());
        for (std::size_t k = 0; k < blend.size(); ++k)
            blend[k] = (1.0 - t) * u.values()[k] + t * v.values()[k];
        out.push_back(project_space_function(SpaceFunction(u.dim(), u.R(), u.subdivisions(), std::move(blend)),
                                             u_hat.polytope()));
    }
    return out;
}

LeastActionReport least_action_check(const LagrangianSpec& L, const ConvexPotential& u_hat,
                                     const ConvexPotential& v_hat, int partition_points, double tol) {
    if (partition_points < 2) throw std::invalid_argument("least_action_check: need >= 2 points");
    LeastActionReport report;
    report.geodesic_action = action(L, u_hat, v_hat, 1.0).value;

    std::vector<double> times(static_cast<std::size_t>(partition_points));
    for (int i = 0; i < partition_points; ++i)
        times[static_cast<std::size_t>(i)] = static_cast<double>(i) / (partition_points - 1);
    report.rectilinear_action = path_action(L, rectilinear_projected_path(u_hat, v_hat, times), times);

    const ConvexPotential mid = meet(u_hat, v_hat);
    report.meet_detour_action = action(L, u_hat, mid, 0.5).value + action(L, mid, v_hat, 0.5).value;

    report.pass = report.rectilinear_action >= report.geodesic_action - tol &&
                  report.meet_detour_action >= report.geodesic_action - tol;
    return report;
}

}  // namespace riselab
