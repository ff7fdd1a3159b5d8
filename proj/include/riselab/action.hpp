#pragma once

#include <vector>

#include "riselab/lagrangian.hpp"
#include "riselab/rise.hpp"
#include "riselab/toric.hpp"

namespace riselab {

struct ActionValue {
    double value = 0.0;
    double T = 1.0;
};

// d_chi(u, v) = int_0^V chi(|rho[u,v]|), exact step-function integral.
double d_chi(const ConvexPotential& u_hat, const ConvexPotential& v_hat, const Chi& chi);
double d_chi_of_rise(const Rise& r, const Chi& chi);

// L^p distance: the L^p norm of the rise.
double d_p(const ConvexPotential& u_hat, const ConvexPotential& v_hat, double p);

// Action over time T: T * L_star(rho[u,v] / T).
ActionValue action(const LagrangianSpec& L, const ConvexPotential& u_hat,
                   const ConvexPotential& v_hat, double T);

// Sum of per-segment actions over a partition t_0 < ... < t_m.
double path_action(const LagrangianSpec& L, const std::vector<ConvexPotential>& potentials,
                   const std::vector<double>& times);

// L_S(u,v) + L_T(v,w) >= L_{S+T}(u,w).
double triangle_action_violation(const LagrangianSpec& L, const ConvexPotential& u_hat,
                                 const ConvexPotential& v_hat, const ConvexPotential& w_hat,
                                 double S, double T);
bool triangle_action_check(const LagrangianSpec& L, const ConvexPotential& u_hat,
                           const ConvexPotential& v_hat, const ConvexPotential& w_hat, double S,
                           double T, double tol);

struct LeastActionReport {
    double geodesic_action = 0.0;
    double rectilinear_action = 0.0;
    double meet_detour_action = 0.0;
    bool pass = false;
};

// Comparison paths against the geodesic action: the space-side rectilinear
// path projected into the model at partition times, and the detour through
// the envelope u ^ v.
LeastActionReport least_action_check(const LagrangianSpec& L, const ConvexPotential& u_hat,
                                     const ConvexPotential& v_hat, int partition_points, double tol);

// Potentials of the projected rectilinear path at the given times.
std::vector<ConvexPotential> rectilinear_projected_path(const ConvexPotential& u_hat,
                                                        const ConvexPotential& v_hat,
                                                        const std::vector<double>& times);

}  // namespace riselab
