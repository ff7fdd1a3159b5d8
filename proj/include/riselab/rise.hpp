#pragma once

#include <vector>

#include "riselab/rearrange.hpp"
#include "riselab/step_function.hpp"
#include "riselab/toric.hpp"

namespace riselab {

// The rise between two potentials: a decreasing usc step function on (0, 1].
class Rise {
public:
    explicit Rise(StepFunction f) : f_(std::move(f)) {}
    const StepFunction& step() const { return f_; }
    double eval(double s) const { return f_.eval(s); }
    double partial_integral(double lambda) const { return f_.partial_integral(lambda); }
    Rise scaled(double factor) const { return Rise(f_.scaled(factor)); }

private:
    StepFunction f_;
};

// rho[u, v]: decreasing rearrangement of u_hat - v_hat under the uniform node
// measure.  The geodesic's velocity rearrangement is conserved and equals this
// closed form; conservation_check cross-validates against finite differences.
Rise rise(const ConvexPotential& u_hat, const ConvexPotential& v_hat);

// rho[path(a), path(b)] = (b - a) * rho[path(0), path(1)], exact on arrays.
Rise rise_of_segment(const GeodesicPath& path, double a, double b);

// lambda -> -r(V - lambda), canonical usc version.
Rise rise_reversed(const Rise& r);

// rho[u, u^v] = min(0, rho[u,v]), rho[u^v, v] = max(0, rho[u,v]) and their sum
// identity; the violation is the largest residual over all plateau midpoints.
double pythagoras_violation(const ConvexPotential& u_hat, const ConvexPotential& v_hat);
bool pythagoras_check(const ConvexPotential& u_hat, const ConvexPotential& v_hat, double tol);

// Requires u <= v (u_hat >= v_hat): rho[u^w, v^w] <= rho[u, v] at midpoints.
double contraction_violation(const ConvexPotential& u_hat, const ConvexPotential& v_hat,
                             const ConvexPotential& w_hat);
bool contraction_check(const ConvexPotential& u_hat, const ConvexPotential& v_hat,
                       const ConvexPotential& w_hat, double tol);

// Integrated triangle inequality: int_0^l rho[u,v] + int_0^l rho[v,w] >=
// int_0^l rho[u,w] for every l in the merged breakpoint set.
double triangle_hlp_violation(const ConvexPotential& u_hat, const ConvexPotential& v_hat,
                              const ConvexPotential& w_hat);
bool triangle_hlp_check(const ConvexPotential& u_hat, const ConvexPotential& v_hat,
                        const ConvexPotential& w_hat, double tol);

struct FlatCompareResult {
    StepFunction lower;  // (v-u) rearranged at the v endpoint
    Rise rise;
    StepFunction upper;  // (v-u) rearranged at the u endpoint
};

// Rearranged rectilinear velocity vs the rise; the chain lower <= rise <= upper
// holds within a grid-resolution tolerance.
FlatCompareResult flat_compare(const ConvexPotential& u_hat, const ConvexPotential& v_hat);
double flat_chain_violation(const FlatCompareResult& r);
bool flat_compare_chain_check(const FlatCompareResult& r, double tol);

// For u <= v: (v-u)^{*u}(s) / (n+1) <= rho[u,v](s/e) at plateau midpoints.
double flat_strong_violation(const ConvexPotential& u_hat, const ConvexPotential& v_hat);
bool flat_compare_strong(const ConvexPotential& u_hat, const ConvexPotential& v_hat, double tol);

// rho[u^v, w](s) <= max((w-u)^{*u}(sigma), (w-v)^{*v}(s-sigma)).
struct MeetBoundData {
    Rise lhs;            // rho[u^v, w]
    StepFunction wu;     // (w-u)^{*u}
    StepFunction wv;     // (w-v)^{*v}
};
MeetBoundData meet_bound_data(const ConvexPotential& u_hat, const ConvexPotential& v_hat,
                              const ConvexPotential& w_hat);
double meet_distance_violation(const MeetBoundData& data, double sigma, double s);
bool meet_distance_bound_check(const ConvexPotential& u_hat, const ConvexPotential& v_hat,
                               const ConvexPotential& w_hat, double sigma, double s, double tol);

struct ConservationReport {
    std::vector<double> times;
    std::vector<double> deviations;  // sup over plateau midpoints, per time
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// Rearranged centered-difference velocities along the geodesic vs the rise.
ConservationReport conservation_check(const GeodesicPath& path, const std::vector<double>& times,
                                      double dt, double tol);

// Same deviation against an externally supplied reference rise (for refinement
// studies: the instance's rise computed on a finer grid), probed at the
// reference's plateau midpoints.
double conservation_deviation_vs(const GeodesicPath& path, const Rise& reference,
                                 const std::vector<double>& times, double dt);

// Monotone approximation by max of j supporting planes, j = 2..K; deviations
// from the limit rise at its plateau midpoints, one entry per j.
std::vector<double> monotone_approx_deviations(const ConvexPotential& u_hat,
                                               const ConvexPotential& v_hat, int K);
double monotone_approx_decay_violation(const std::vector<double>& deviations);
bool monotone_approx_check(const ConvexPotential& u_hat, const ConvexPotential& v_hat, int K,
                           double tol);

// Max of the first j supporting planes of u_hat (node subgradients pushed down
// to true minorants), sampled round-robin over the grid.
ConvexPotential support_truncation(const ConvexPotential& u_hat, int j);

}  // namespace riselab
