#include "riselab/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace riselab {

StepFunction rearrange(const WeightedSample& sample) {
    const std::size_t n = sample.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    // stable sort by descending value; equal values merge into one plateau below
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return sample.values()[a] > sample.values()[b];
    });
    std::vector<double> upper, values;
    upper.reserve(n);
    values.reserve(n);
    double acc = 0.0;
    for (std::size_t i : order) {
        acc += sample.weights()[i];
        if (!values.empty() && sample.values()[i] == values.back())
            upper.back() = acc;
        else {
            upper.push_back(acc);
            values.push_back(sample.values()[i]);
        }
    }
    // absorb summation round-off into the last plateau
    const double tm = sample.total_mass();
    if (upper.size() == 1 || tm > upper[upper.size() - 2]) upper.back() = tm;
    return StepFunction::from_plateaus(std::move(upper), std::move(values));
}

bool hlp_geq(const StepFunction& f, const StepFunction& g, double tol) {
    for (double lam : merged_breakpoints(f, g))
        if (f.partial_integral(lam) < g.partial_integral(lam) - tol) return false;
    return true;
}

bool distribution_bounds_check(const WeightedSample& sample) {
    const StepFunction star = rearrange(sample);
    const double slack = 1e-12 * std::max(1.0, sample.total_mass());
    std::vector<double> probes = star.midpoints();
    const auto& upper = star.upper_breakpoints();
    probes.insert(probes.end(), upper.begin(), upper.end());
    for (double s : probes) {
        const double t = star.eval(s);
        if (sample.mass_above(t) > s + slack) return false;
        if (sample.mass_at_least(t) < s - slack) return false;
    }
    return true;
}

bool equidistributed(const WeightedSample& a, const WeightedSample& b, double tol) {
    if (std::abs(a.total_mass() - b.total_mass()) > tol)
        throw std::invalid_argument("equidistributed: total masses differ beyond tolerance");
    const StepFunction ra = rearrange(a), rb = rearrange(b);
    std::vector<double> probes;
    probes.reserve(ra.plateau_count() + rb.plateau_count());
    const double cap = std::min(ra.V(), rb.V());
    for (double s : ra.upper_breakpoints()) probes.push_back(std::min(s, cap));
    for (double s : rb.upper_breakpoints()) probes.push_back(std::min(s, cap));
    for (double s : probes)
        if (std::abs(ra.eval(s) - rb.eval(s)) > tol) return false;
    return true;
}

StepFunction rescale_allied(const StepFunction& f, double alpha, double beta) {
    if (!(beta > 0.0) || beta > 1.0)
        throw std::invalid_argument("rescale_allied: beta must lie in (0, 1]");
    const double V = f.V();
    const std::size_t n = f.plateau_count();
    // decreasing rearrangement of alpha * f
    std::vector<double> upper, values;
    upper.reserve(n);
    values.reserve(n);
    if (alpha >= 0.0) {
        for (std::size_t k = 0; k < n; ++k) {
            upper.push_back(f.upper_breakpoints()[k]);
            values.push_back(alpha * f.plateau_values()[k]);
        }
    } else {
        // alpha*f is increasing; reverse the plateau order
        double acc = 0.0;
        for (std::size_t k = n; k-- > 0;) {
            acc += f.length(k);
            upper.push_back(acc);
            values.push_back(alpha * f.plateau_values()[k]);
        }
        upper.back() = V;
    }
    // compose with s -> beta * s: breakpoints stretch by 1/beta, clipped at V
    std::vector<double> up2, val2;
    up2.reserve(upper.size());
    val2.reserve(values.size());
    for (std::size_t k = 0; k < upper.size(); ++k) {
        const double s = upper[k] / beta;
        if (s >= V || k + 1 == upper.size()) {
            up2.push_back(V);
            val2.push_back(values[k]);
            break;
        }
        up2.push_back(s);
        val2.push_back(values[k]);
    }
    return StepFunction::from_plateaus(std::move(up2), std::move(val2));
}

bool sum_rearrangement_bound_check(const WeightedSample& xi, const WeightedSample& eta,
                                   BivariateKind F, double sigma, double s) {
    if (xi.size() != eta.size())
        throw std::invalid_argument("sum_rearrangement_bound_check: samples must share the space");
    for (std::size_t i = 0; i < xi.size(); ++i)
        if (xi.weights()[i] != eta.weights()[i])
            throw std::invalid_argument("sum_rearrangement_bound_check: samples must share weights");
    const double V = xi.total_mass();
    if (!(sigma > 0.0 && sigma < s && s < V))
        throw std::invalid_argument("sum_rearrangement_bound_check: need 0 < sigma < s < V");

    auto apply = [F](double x, double y) { return F == BivariateKind::Sum ? x + y : std::max(x, y); };
    std::vector<double> combined(xi.size());
    for (std::size_t i = 0; i < xi.size(); ++i)
        combined[i] = apply(xi.values()[i], eta.values()[i]);

    const double lhs = rearrange(WeightedSample(combined, xi.weights())).eval(s);
    const double rhs = apply(rearrange(xi).eval(sigma), rearrange(eta).eval(s - sigma));
    return lhs <= rhs + 1e-9;
}

}  // namespace riselab
