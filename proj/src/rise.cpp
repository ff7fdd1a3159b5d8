#include "riselab/rise.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace riselab {

namespace {

std::vector<double> dual_difference(const ConvexPotential& u_hat, const ConvexPotential& v_hat) {
    if (!u_hat.polytope().same_grid(v_hat.polytope()))
        throw std::invalid_argument("rise: grid mismatch");
    std::vector<double> d(u_hat.size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = u_hat.value(k) - v_hat.value(k);
    return d;
}

Rise rearranged(std::vector<double> values) {
    return Rise(rearrange(WeightedSample::uniform(std::move(values), 1.0)));
}

}  // namespace

Rise rise(const ConvexPotential& u_hat, const ConvexPotential& v_hat) {
    return rearranged(dual_difference(u_hat, v_hat));
}

Rise rise_of_segment(const GeodesicPath& path, double a, double b) {
    if (!(0.0 <= a && a < b && b <= 1.0))
        throw std::invalid_argument("rise_of_segment: need 0 <= a < b <= 1");
    return rise(geodesic_at(path, a), geodesic_at(path, b));
}

Rise rise_reversed(const Rise& r) {
    return Rise(rescale_allied(r.step(), -1.0, 1.0));
}

double pythagoras_violation(const ConvexPotential& u_hat, const ConvexPotential& v_hat) {
    const ConvexPotential m = meet(u_hat, v_hat);
    const Rise whole = rise(u_hat, v_hat);
    const Rise down = rise(u_hat, m);
    const Rise up = rise(m, v_hat);
    double worst = 0.0;
    for (double s : whole.step().midpoints()) {
        const double r = whole.eval(s);
        worst = std::max(worst, std::abs(down.eval(s) - std::min(0.0, r)));
        worst = std::max(worst, std::abs(up.eval(s) - std::max(0.0, r)));
        worst = std::max(worst, std::abs(down.eval(s) + up.eval(s) - r));
    }
    return worst;
}

bool pythagoras_check(const ConvexPotential& u_hat, const ConvexPotential& v_hat, double tol) {
    return pythagoras_violation(u_hat, v_hat) <= tol;
}

double contraction_violation(const ConvexPotential& u_hat, const ConvexPotential& v_hat,
                             const ConvexPotential& w_hat) {
    for (std::size_t k = 0; k < u_hat.size(); ++k)
        if (u_hat.value(k) < v_hat.value(k) - 1e-12)
            throw std::invalid_argument("contraction_check: requires u <= v (u_hat >= v_hat)");
    const Rise base = rise(u_hat, v_hat);
    const Rise contracted = rise(meet(u_hat, w_hat), meet(v_hat, w_hat));
    std::vector<double> probes = base.step().midpoints();
    const std::vector<double> more = contracted.step().midpoints();
    probes.insert(probes.end(), more.begin(), more.end());
    double worst = 0.0;
    for (double s : probes) worst = std::max(worst, contracted.eval(s) - base.eval(s));
    return std::max(0.0, worst);
}

bool contraction_check(const ConvexPotential& u_hat, const ConvexPotential& v_hat,
                       const ConvexPotential& w_hat, double tol) {
    return contraction_violation(u_hat, v_hat, w_hat) <= tol;
}

double triangle_hlp_violation(const ConvexPotential& u_hat, const ConvexPotential& v_hat,
                              const ConvexPotential& w_hat) {
    const Rise ruv = rise(u_hat, v_hat);
    const Rise rvw = rise(v_hat, w_hat);
    const Rise ruw = rise(u_hat, w_hat);
    std::vector<double> probes = merged_breakpoints(ruv.step(), rvw.step());
    const std::vector<double> more = ruw.step().upper_breakpoints();
    probes.insert(probes.end(), more.begin(), more.end());
    std::sort(probes.begin(), probes.end());
    probes.erase(std::unique(probes.begin(), probes.end()), probes.end());
    double worst = 0.0;
    for (double lam : probes) {
        lam = std::min(lam, ruw.step().V());
        const double lhs = ruv.partial_integral(lam) + rvw.partial_integral(lam);
        worst = std::max(worst, ruw.partial_integral(lam) - lhs);
    }
    return std::max(0.0, worst);
}

bool triangle_hlp_check(const ConvexPotential& u_hat, const ConvexPotential& v_hat,
                        const ConvexPotential& w_hat, double tol) {
    return triangle_hlp_violation(u_hat, v_hat, w_hat) <= tol;
}

FlatCompareResult flat_compare(const ConvexPotential& u_hat, const ConvexPotential& v_hat) {
    const XGridSpec spec = shared_grid(u_hat, v_hat);
    const SpaceFunction u = legendre(u_hat, spec);
    const SpaceFunction v = legendre(v_hat, spec);
    std::vector<double> diff(v.values().size());
    for (std::size_t k = 0; k < diff.size(); ++k) diff[k] = v.values()[k] - u.values()[k];
    const SpaceFunction g(v.dim(), v.R(), v.subdivisions(), std::move(diff));
    return FlatCompareResult{rearrange(pushforward_measure(v_hat, g)), rise(u_hat, v_hat),
                             rearrange(pushforward_measure(u_hat, g))};
}

double flat_chain_violation(const FlatCompareResult& r) {
    std::vector<double> probes = r.rise.step().midpoints();
    {
        const std::vector<double> a = r.lower.midpoints();
        const std::vector<double> b = r.upper.midpoints();
        probes.insert(probes.end(), a.begin(), a.end());
        probes.insert(probes.end(), b.begin(), b.end());
    }
    double worst = 0.0;
    for (double s : probes) {
        const double rho = r.rise.eval(s);
        worst = std::max(worst, r.lower.eval(s) - rho);
        worst = std::max(worst, rho - r.upper.eval(s));
    }
    return std::max(0.0, worst);
}

bool flat_compare_chain_check(const FlatCompareResult& r, double tol) {
    return flat_chain_violation(r) <= tol;
}

double flat_strong_violation(const ConvexPotential& u_hat, const ConvexPotential& v_hat) {
    for (std::size_t k = 0; k < u_hat.size(); ++k)
        if (u_hat.value(k) < v_hat.value(k) - 1e-12)
            throw std::invalid_argument("flat_compare_strong: requires u <= v (u_hat >= v_hat)");
    const FlatCompareResult fc = flat_compare(u_hat, v_hat);
    const double n = static_cast<double>(u_hat.polytope().dim);
    const double e = std::exp(1.0);
    double worst = 0.0;
    for (double s : fc.upper.midpoints())
        worst = std::max(worst, fc.upper.eval(s) / (n + 1.0) - fc.rise.eval(s / e));
    return std::max(0.0, worst);
}

bool flat_compare_strong(const ConvexPotential& u_hat, const ConvexPotential& v_hat, double tol) {
    return flat_strong_violation(u_hat, v_hat) <= tol;
}

MeetBoundData meet_bound_data(const ConvexPotential& u_hat, const ConvexPotential& v_hat,
                              const ConvexPotential& w_hat) {
    const ConvexPotential m = meet(u_hat, v_hat);

    XGridSpec spec = shared_grid(u_hat, v_hat);
    spec.R = std::max(spec.R, auto_R(w_hat));
    const SpaceFunction su = legendre(u_hat, spec);
    const SpaceFunction sv = legendre(v_hat, spec);
    const SpaceFunction sw = legendre(w_hat, spec);
    auto diff_sample = [&](const SpaceFunction& hi, const SpaceFunction& lo,
                           const ConvexPotential& base) {
        std::vector<double> d(hi.values().size());
        for (std::size_t k = 0; k < d.size(); ++k) d[k] = hi.values()[k] - lo.values()[k];
        return rearrange(
            pushforward_measure(base, SpaceFunction(hi.dim(), hi.R(), hi.subdivisions(), std::move(d))));
    };
    return MeetBoundData{rise(m, w_hat), diff_sample(sw, su, u_hat), diff_sample(sw, sv, v_hat)};
}

double meet_distance_violation(const MeetBoundData& data, double sigma, double s) {
    if (!(sigma > 0.0 && sigma < s && s < 1.0))
        throw std::invalid_argument("meet_distance_bound: need 0 < sigma < s < 1");
    const double rhs = std::max(data.wu.eval(sigma), data.wv.eval(s - sigma));
    return std::max(0.0, data.lhs.eval(s) - rhs);
}

bool meet_distance_bound_check(const ConvexPotential& u_hat, const ConvexPotential& v_hat,
                               const ConvexPotential& w_hat, double sigma, double s, double tol) {
    return meet_distance_violation(meet_bound_data(u_hat, v_hat, w_hat), sigma, s) <= tol;
}

namespace {

ConservationReport conservation_report(const GeodesicPath& path, const Rise& reference,
                                       const std::vector<double>& times, double dt, double tol) {
    ConservationReport report;
    report.tolerance = tol;
    const XGridSpec spec = shared_grid(path.start, path.end);
    const std::vector<double> probes = reference.step().midpoints();
    for (double t : times) {
        const SpaceFunction vel = velocity_finite_difference(path, t, dt, spec);
        const StepFunction observed = rearrange(pushforward_measure(geodesic_at(path, t), vel));
        double dev = 0.0;
        for (double s : probes) dev = std::max(dev, std::abs(observed.eval(s) - reference.eval(s)));
        report.times.push_back(t);
        report.deviations.push_back(dev);
        report.max_deviation = std::max(report.max_deviation, dev);
    }
    report.pass = report.max_deviation <= tol;
    return report;
}

}  // namespace

ConservationReport conservation_check(const GeodesicPath& path, const std::vector<double>& times,
                                      double dt, double tol) {
    return conservation_report(path, rise(path.start, path.end), times, dt, tol);
}

double conservation_deviation_vs(const GeodesicPath& path, const Rise& reference,
                                 const std::vector<double>& times, double dt) {
    return conservation_report(path, reference, times, dt, 1.0).max_deviation;
}

ConvexPotential support_truncation(const ConvexPotential& u_hat, int j) {
    if (j < 1) throw std::invalid_argument("support_truncation: need j >= 1");
    const Polytope& poly = u_hat.polytope();
    const std::size_t count = poly.node_count();
    const int n = poly.nodes_per_axis();

    auto node_coords = [&](std::size_t k) -> std::array<double, 2> {
        if (poly.dim == 1) return {poly.coord(0, static_cast<int>(k)), 0.0};
        return {poly.coord(0, static_cast<int>(k) / n), poly.coord(1, static_cast<int>(k) % n)};
    };

    std::vector<double> out(count, -std::numeric_limits<double>::infinity());
    const int planes = std::min<int>(j, static_cast<int>(count));
    std::size_t node = 0;  // first plane supports the minimum
    for (std::size_t k = 1; k < count; ++k)
        if (u_hat.value(k) < u_hat.value(node)) node = k;
    for (int p = 0; p < planes; ++p) {
        const std::array<double, 2> g = u_hat.gradient(node);
        const std::array<double, 2> y = node_coords(node);
        // tangent candidate through the node, pushed down to a true minorant
        std::vector<double> plane(count);
        double overshoot = 0.0;
        for (std::size_t k = 0; k < count; ++k) {
            const std::array<double, 2> z = node_coords(k);
            plane[k] = u_hat.value(node) + g[0] * (z[0] - y[0]) +
                       (poly.dim == 1 ? 0.0 : g[1] * (z[1] - y[1]));
            overshoot = std::max(overshoot, plane[k] - u_hat.value(k));
        }
        double gap = -1.0;
        for (std::size_t k = 0; k < count; ++k) {
            out[k] = std::max(out[k], plane[k] - overshoot);
            const double residual = u_hat.value(k) - out[k];
            if (residual > gap) gap = residual, node = k;  // next plane where the fit is worst
        }
    }
    return ConvexPotential::trusted(poly, std::move(out));
}

std::vector<double> monotone_approx_deviations(const ConvexPotential& u_hat,
                                               const ConvexPotential& v_hat, int K) {
    if (K < 2) throw std::invalid_argument("monotone_approx_deviations: need K >= 2");
    const Rise limit = rise(u_hat, v_hat);
    const std::vector<double> probes = limit.step().midpoints();
    std::vector<double> deviations;
    deviations.reserve(static_cast<std::size_t>(K) - 1);
    for (int j = 2; j <= K; ++j) {
        const Rise rj = rise(support_truncation(u_hat, j), support_truncation(v_hat, j));
        double dev = 0.0;
        for (double s : probes) dev = std::max(dev, std::abs(rj.eval(s) - limit.eval(s)));
        deviations.push_back(dev);
    }
    return deviations;
}

// adding one support plane to one argument can nudge the dual difference the
// other way, so decay is asserted along doubling plane counts j = 2, 4, 8, ...
double monotone_approx_decay_violation(const std::vector<double>& dev) {
    double worst = 0.0;
    double prev = std::numeric_limits<double>::infinity();
    for (std::size_t j = 2; j - 2 < dev.size(); j *= 2) {
        const double d = dev[j - 2];
        worst = std::max(worst, d - (prev + 1e-9));
        prev = d;
    }
    return std::max(0.0, worst);
}

bool monotone_approx_check(const ConvexPotential& u_hat, const ConvexPotential& v_hat, int K,
                           double tol) {
    const std::vector<double> dev = monotone_approx_deviations(u_hat, v_hat, K);
    return monotone_approx_decay_violation(dev) == 0.0 && dev.back() <= tol;
}

}  // namespace riselab
