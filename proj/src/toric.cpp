#include "riselab/toric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "riselab/convexify.hpp"

namespace riselab {

Polytope Polytope::unit(int dim, int m) {
    Polytope p;
    p.dim = dim;
    p.m = m;
    p.validate();
    return p;
}

void Polytope::validate() const {
    if (dim != 1 && dim != 2) throw std::invalid_argument("Polytope: dim must be 1 or 2");
    if (m < 8) throw std::invalid_argument("Polytope: need at least 8 subdivisions per axis");
    for (int a = 0; a < dim; ++a)
        if (!(bounds[a][1] > bounds[a][0]))
            throw std::invalid_argument("Polytope: degenerate bounds");
}

std::size_t Polytope::node_count() const {
    std::size_t n = static_cast<std::size_t>(m + 1);
    return dim == 1 ? n : n * n;
}

bool Polytope::same_grid(const Polytope& other) const {
    if (dim != other.dim || m != other.m) return false;
    for (int a = 0; a < dim; ++a)
        if (bounds[a] != other.bounds[a]) return false;
    return true;
}

std::vector<double> convexify(const Polytope& poly, const std::vector<double>& values) {
    if (values.size() != poly.node_count())
        throw std::invalid_argument("convexify: value count does not match the grid");
    const int n = poly.nodes_per_axis();
    std::vector<double> ax0(n);
    for (int i = 0; i < n; ++i) ax0[i] = poly.coord(0, i);
    if (poly.dim == 1) return convexify_1d(ax0, values);
    std::vector<double> ax1(n);
    for (int i = 0; i < n; ++i) ax1[i] = poly.coord(1, i);
    return convexify_2d(ax0, ax1, values);
}

bool is_grid_convex(const Polytope& poly, const std::vector<double>& values, double tol) {
    if (values.size() != poly.node_count()) return false;
    if (poly.dim == 1) {
        const int n = poly.nodes_per_axis();
        for (int i = 1; i + 1 < n; ++i)
            if (values[i + 1] - 2.0 * values[i] + values[i - 1] < -tol) return false;
        return true;
    }
    const std::vector<double> hull = convexify(poly, values);
    for (std::size_t k = 0; k < values.size(); ++k)
        if (values[k] - hull[k] > tol) return false;
    return true;
}

ConvexPotential::ConvexPotential(Polytope poly, std::vector<double> values) {
    poly.validate();
    if (values.size() != poly.node_count())
        throw std::invalid_argument("ConvexPotential: value count does not match the grid");
    for (double v : values)
        if (!std::isfinite(v)) throw std::invalid_argument("ConvexPotential: values must be finite");
    if (!is_grid_convex(poly, values, 1e-9))
        throw std::invalid_argument("ConvexPotential: values are not discretely convex");
    poly_ = poly;
    values_ = std::move(values);
}

ConvexPotential ConvexPotential::trusted(Polytope poly, std::vector<double> values) {
    ConvexPotential p;
    p.poly_ = poly;
    p.values_ = std::move(values);
    return p;
}

double ConvexPotential::value_spread() const {
    const auto [lo, hi] = std::minmax_element(values_.begin(), values_.end());
    return *hi - *lo;
}

double ConvexPotential::slope_bound() const {
    const int n = poly_.nodes_per_axis();
    double bound = 0.0;
    if (poly_.dim == 1) {
        const double h = poly_.spacing(0);
        for (int i = 0; i + 1 < n; ++i)
            bound = std::max(bound, std::abs(values_[i + 1] - values_[i]) / h);
    } else {
        const double h0 = poly_.spacing(0), h1 = poly_.spacing(1);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i + 1 < n)
                    bound = std::max(bound, std::abs(values_[(i + 1) * n + j] - values_[i * n + j]) / h0);
                if (j + 1 < n)
                    bound = std::max(bound, std::abs(values_[i * n + j + 1] - values_[i * n + j]) / h1);
            }
    }
    return bound;
}

std::array<double, 2> ConvexPotential::gradient(std::size_t node) const {
    const int n = poly_.nodes_per_axis();
    std::array<double, 2> g{0.0, 0.0};
    // centered in the interior, second-order one-sided at the boundary
    auto diff = [&](int idx, int stride, int pos, double h) {
        if (pos == 0)
            return (-3.0 * values_[idx] + 4.0 * values_[idx + stride] - values_[idx + 2 * stride]) /
                   (2.0 * h);
        if (pos == n - 1)
            return (3.0 * values_[idx] - 4.0 * values_[idx - stride] + values_[idx - 2 * stride]) /
                   (2.0 * h);
        return (values_[idx + stride] - values_[idx - stride]) / (2.0 * h);
    };
    if (poly_.dim == 1) {
        g[0] = diff(static_cast<int>(node), 1, static_cast<int>(node), poly_.spacing(0));
    } else {
        const int i = static_cast<int>(node) / n, j = static_cast<int>(node) % n;
        g[0] = diff(static_cast<int>(node), n, i, poly_.spacing(0));
        g[1] = diff(static_cast<int>(node), 1, j, poly_.spacing(1));
    }
    return g;
}

ConvexPotential ConvexPotential::shifted(double c) const {
    std::vector<double> v = values_;
    for (double& x : v) x += c;
    return trusted(poly_, std::move(v));
}

SpaceFunction::SpaceFunction(int dim, double R, int subdivisions, std::vector<double> values)
    : dim_(dim), R_(R), m_(subdivisions), values_(std::move(values)) {
    if (dim_ != 1 && dim_ != 2) throw std::invalid_argument("SpaceFunction: dim must be 1 or 2");
    if (!(R_ > 0.0)) throw std::invalid_argument("SpaceFunction: R must be positive");
    if (m_ < 2) throw std::invalid_argument("SpaceFunction: need at least 2 subdivisions");
    const std::size_t n = static_cast<std::size_t>(m_ + 1);
    if (values_.size() != (dim_ == 1 ? n : n * n))
        throw std::invalid_argument("SpaceFunction: value count does not match the grid");
    for (double v : values_)
        if (!std::isfinite(v)) throw std::invalid_argument("SpaceFunction: values must be finite");
}

bool SpaceFunction::same_grid(const SpaceFunction& other) const {
    return dim_ == other.dim_ && m_ == other.m_ && R_ == other.R_;
}

double SpaceFunction::interpolate(const std::array<double, 2>& x) const {
    const double h = spacing();
    const double grace = 1e-9 * std::max(1.0, R_);
    std::array<int, 2> cell{0, 0};
    std::array<double, 2> frac{0.0, 0.0};
    for (int a = 0; a < dim_; ++a) {
        if (x[a] < -R_ - grace || x[a] > R_ + grace)
            throw std::invalid_argument("SpaceFunction::interpolate: point outside the grid box");
        const double clamped = std::clamp(x[a], -R_, R_);
        int c = static_cast<int>(std::floor((clamped + R_) / h));
        c = std::clamp(c, 0, m_ - 1);
        cell[a] = c;
        frac[a] = (clamped - coord(c)) / h;
    }
    if (dim_ == 1) {
        return values_[cell[0]] * (1.0 - frac[0]) + values_[cell[0] + 1] * frac[0];
    }
    const int n = nodes_per_axis();
    const double v00 = values_[cell[0] * n + cell[1]];
    const double v01 = values_[cell[0] * n + cell[1] + 1];
    const double v10 = values_[(cell[0] + 1) * n + cell[1]];
    const double v11 = values_[(cell[0] + 1) * n + cell[1] + 1];
    const double a0 = v00 * (1.0 - frac[1]) + v01 * frac[1];
    const double a1 = v10 * (1.0 - frac[1]) + v11 * frac[1];
    return a0 * (1.0 - frac[0]) + a1 * frac[0];
}

GeodesicPath::GeodesicPath(ConvexPotential s, ConvexPotential e)
    : start(std::move(s)), end(std::move(e)) {
    if (!start.polytope().same_grid(end.polytope()))
        throw std::invalid_argument("GeodesicPath: endpoints live on different grids");
}

ConvexPotential meet(const ConvexPotential& u_hat, const ConvexPotential& v_hat) {
    if (!u_hat.polytope().same_grid(v_hat.polytope()))
        throw std::invalid_argument("meet: grid mismatch");
    std::vector<double> out(u_hat.size());
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = std::max(u_hat.value(k), v_hat.value(k));
    return ConvexPotential::trusted(u_hat.polytope(), std::move(out));
}

ConvexPotential join(const ConvexPotential& u_hat, const ConvexPotential& v_hat) {
    if (!u_hat.polytope().same_grid(v_hat.polytope()))
        throw std::invalid_argument("join: grid mismatch");
    std::vector<double> out(u_hat.size());
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = std::min(u_hat.value(k), v_hat.value(k));
    return ConvexPotential::trusted(u_hat.polytope(), convexify(u_hat.polytope(), out));
}

ConvexPotential geodesic_at(const GeodesicPath& path, double t) {
    if (t < 0.0 || t > 1.0) throw std::invalid_argument("geodesic_at: t outside [0, 1]");
    std::vector<double> out(path.start.size());
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = path.start.value(k) + t * (path.end.value(k) - path.start.value(k));
    return ConvexPotential::trusted(path.start.polytope(), std::move(out));
}

double auto_R(const ConvexPotential& u_hat) {
    // integral R keeps x grids at different resolutions nested, so refinement
    // studies see self-similar interpolation error
    return std::ceil(u_hat.slope_bound() + u_hat.value_spread() + 1.0);
}

int auto_x_subdivisions(const Polytope& poly) {
    return poly.dim == 1 ? 4 * poly.m : 2 * poly.m;
}

namespace {

// The x grid must resolve the moment-map image of a single polytope cell even
// where the dual Hessian is weakest, so the 1D spacing is an order finer than
// the polytope spacing.  Grids at m and 2m stay nested.  Capped to desk scale.
int matched_x_subdivisions(const Polytope& poly, double R) {
    const int floor_sub = auto_x_subdivisions(poly);
    const int per_cell = poly.dim == 1 ? 10 : 1;
    const int matched = static_cast<int>(std::ceil(2.0 * R)) * poly.m * per_cell;
    const int cap = poly.dim == 1 ? 8192 : 1024;
    return std::min(cap, std::max(floor_sub, matched));
}

}  // namespace

XGridSpec shared_grid(const ConvexPotential& u_hat, const ConvexPotential& v_hat) {
    XGridSpec spec;
    spec.R = std::max(auto_R(u_hat), auto_R(v_hat));
    spec.subdivisions = matched_x_subdivisions(u_hat.polytope(), spec.R);
    return spec;
}

namespace {

XGridSpec resolve_spec(const ConvexPotential& u_hat, XGridSpec spec) {
    if (spec.R <= 0.0) spec.R = auto_R(u_hat);
    if (spec.subdivisions <= 0)
        spec.subdivisions = matched_x_subdivisions(u_hat.polytope(), spec.R);
    return spec;
}

// conjugate from grid (axis, values) to target nodes: out[j] = max_i t[j]*axis[i] - values[i]
void conjugate_1d(const std::vector<double>& axis, const std::vector<double>& values,
                  const std::vector<double>& targets, std::vector<double>& out) {
    out.resize(targets.size());
    for (std::size_t j = 0; j < targets.size(); ++j) {
        double best = targets[j] * axis[0] - values[0];
        for (std::size_t i = 1; i < axis.size(); ++i)
            best = std::max(best, targets[j] * axis[i] - values[i]);
        out[j] = best;
    }
}

}  // namespace

SpaceFunction legendre(const ConvexPotential& u_hat, XGridSpec spec) {
    spec = resolve_spec(u_hat, spec);
    if (spec.R < u_hat.slope_bound())
        throw std::invalid_argument("legendre: x grid too small to attain every dual slope");
    const Polytope& poly = u_hat.polytope();
    const int n = poly.nodes_per_axis();
    const int nx = spec.subdivisions + 1;
    std::vector<double> xs(nx);
    for (int i = 0; i < nx; ++i) xs[i] = -spec.R + 2.0 * spec.R / spec.subdivisions * i;

    if (poly.dim == 1) {
        std::vector<double> ys(n), out;
        for (int i = 0; i < n; ++i) ys[i] = poly.coord(0, i);
        conjugate_1d(ys, u_hat.values(), xs, out);
        return SpaceFunction(1, spec.R, spec.subdivisions, std::move(out));
    }

    // separable pass: G[i1][j2] = max_{i2} x2*y2 - u_hat(y1, y2), then combine over y1
    std::vector<double> ys(n);
    for (int i = 0; i < n; ++i) ys[i] = poly.coord(1, i);
    std::vector<double> G(static_cast<std::size_t>(n) * nx);
    std::vector<double> row(n), conj;
    for (int i1 = 0; i1 < n; ++i1) {
        for (int i2 = 0; i2 < n; ++i2) row[i2] = u_hat.values()[i1 * n + i2];
        conjugate_1d(ys, row, xs, conj);
        for (int j2 = 0; j2 < nx; ++j2) G[static_cast<std::size_t>(i1) * nx + j2] = conj[j2];
    }
    std::vector<double> out(static_cast<std::size_t>(nx) * nx);
    for (int j1 = 0; j1 < nx; ++j1)
        for (int j2 = 0; j2 < nx; ++j2) {
            double best = xs[j1] * poly.coord(0, 0) + G[j2];
            for (int i1 = 1; i1 < n; ++i1)
                best = std::max(best, xs[j1] * poly.coord(0, i1) + G[static_cast<std::size_t>(i1) * nx + j2]);
            out[static_cast<std::size_t>(j1) * nx + j2] = best;
        }
    return SpaceFunction(2, spec.R, spec.subdivisions, std::move(out));
}

ConvexPotential project_space_function(const SpaceFunction& f, const Polytope& poly) {
    poly.validate();
    if (poly.dim != f.dim()) throw std::invalid_argument("project_space_function: dim mismatch");
    const int n = poly.nodes_per_axis();
    const int nx = f.nodes_per_axis();
    std::vector<double> xs(nx);
    for (int i = 0; i < nx; ++i) xs[i] = f.coord(i);

    std::vector<double> out;
    if (poly.dim == 1) {
        std::vector<double> ys(n);
        for (int i = 0; i < n; ++i) ys[i] = poly.coord(0, i);
        conjugate_1d(xs, f.values(), ys, out);
    } else {
        std::vector<double> ys(n);
        for (int i = 0; i < n; ++i) ys[i] = poly.coord(1, i);
        std::vector<double> G(static_cast<std::size_t>(nx) * n);
        std::vector<double> row(nx), conj;
        for (int j1 = 0; j1 < nx; ++j1) {
            for (int j2 = 0; j2 < nx; ++j2) row[j2] = f.values()[static_cast<std::size_t>(j1) * nx + j2];
            conjugate_1d(xs, row, ys, conj);
            for (int i2 = 0; i2 < n; ++i2) G[static_cast<std::size_t>(j1) * n + i2] = conj[i2];
        }
        out.assign(poly.node_count(), 0.0);
        for (int i1 = 0; i1 < n; ++i1)
            for (int i2 = 0; i2 < n; ++i2) {
                double best = poly.coord(0, i1) * xs[0] + G[i2];
                for (int j1 = 1; j1 < nx; ++j1)
                    best = std::max(best,
                                    poly.coord(0, i1) * xs[j1] + G[static_cast<std::size_t>(j1) * n + i2]);
                out[static_cast<std::size_t>(i1) * n + i2] = best;
            }
    }
    return ConvexPotential::trusted(poly, convexify(poly, out));
}

WeightedSample pushforward_measure(const ConvexPotential& u_hat, const SpaceFunction& g) {
    if (u_hat.polytope().dim != g.dim())
        throw std::invalid_argument("pushforward_measure: dim mismatch");
    const std::size_t n = u_hat.size();
    std::vector<double> values(n);
    for (std::size_t k = 0; k < n; ++k) values[k] = g.interpolate(u_hat.gradient(k));
    return WeightedSample::uniform(std::move(values), 1.0);
}

SpaceFunction velocity_finite_difference(const GeodesicPath& path, double t, double dt,
                                         XGridSpec spec) {
    if (!(dt > 0.0)) throw std::invalid_argument("velocity_finite_difference: dt must be positive");
    if (t - dt < 0.0 || t + dt > 1.0)
        throw std::invalid_argument("velocity_finite_difference: window [t-dt, t+dt] leaves [0, 1]");
    if (spec.R <= 0.0) spec = shared_grid(path.start, path.end);
    const SpaceFunction hi = legendre(geodesic_at(path, t + dt), spec);
    const SpaceFunction lo = legendre(geodesic_at(path, t - dt), spec);
    std::vector<double> out(hi.values().size());
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = (hi.values()[k] - lo.values()[k]) / (2.0 * dt);
    return SpaceFunction(hi.dim(), hi.R(), hi.subdivisions(), std::move(out));
}

namespace {
// the oracle enumerates every (x node, polytope node) pair, so it keeps the
// coarser default x grid; its agreement bound scales with its own spacing
XGridSpec oracle_spec(const ConvexPotential& u_hat, const ConvexPotential& v_hat, XGridSpec spec) {
    if (spec.R <= 0.0) spec.R = std::max(auto_R(u_hat), auto_R(v_hat));
    if (spec.subdivisions <= 0) spec.subdivisions = auto_x_subdivisions(u_hat.polytope());
    return spec;
}
}  // namespace

EnvelopeOracle::EnvelopeOracle(const ConvexPotential& u_hat, const ConvexPotential& v_hat,
                               XGridSpec spec)
    : poly_(u_hat.polytope()),
      u_(legendre(u_hat, oracle_spec(u_hat, v_hat, spec))),
      v_(legendre(v_hat, oracle_spec(u_hat, v_hat, spec))) {
    if (!u_hat.polytope().same_grid(v_hat.polytope()))
        throw std::invalid_argument("EnvelopeOracle: grid mismatch");
    // best intercept of the slope-y minorant, recovered from boundary data only
    const int n = poly_.nodes_per_axis();
    const int nx = u_.nodes_per_axis();
    const std::size_t count = poly_.node_count();
    intercept_u_.assign(count, 0.0);
    intercept_v_.assign(count, 0.0);
    for (std::size_t k = 0; k < count; ++k) {
        const double y0 = poly_.coord(0, poly_.dim == 1 ? static_cast<int>(k)
                                                        : static_cast<int>(k) / n);
        const double y1 = poly_.dim == 1 ? 0.0 : poly_.coord(1, static_cast<int>(k) % n);
        double cu = -std::numeric_limits<double>::infinity();
        double cv = cu;
        if (poly_.dim == 1) {
            for (int j = 0; j < nx; ++j) {
                const double dotxy = u_.coord(j) * y0;
                cu = std::max(cu, dotxy - u_.values()[j]);
                cv = std::max(cv, dotxy - v_.values()[j]);
            }
        } else {
            for (int j1 = 0; j1 < nx; ++j1)
                for (int j2 = 0; j2 < nx; ++j2) {
                    const double dotxy = u_.coord(j1) * y0 + u_.coord(j2) * y1;
                    const std::size_t idx = static_cast<std::size_t>(j1) * nx + j2;
                    cu = std::max(cu, dotxy - u_.values()[idx]);
                    cv = std::max(cv, dotxy - v_.values()[idx]);
                }
        }
        intercept_u_[k] = cu;
        intercept_v_[k] = cv;
    }
}

double EnvelopeOracle::eval(double t, const std::array<double, 2>& x) const {
    if (t < 0.0 || t > 1.0) throw std::invalid_argument("EnvelopeOracle::eval: t outside [0, 1]");
    const int n = poly_.nodes_per_axis();
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < poly_.node_count(); ++k) {
        const double y0 = poly_.coord(0, poly_.dim == 1 ? static_cast<int>(k)
                                                        : static_cast<int>(k) / n);
        const double y1 = poly_.dim == 1 ? 0.0 : poly_.coord(1, static_cast<int>(k) % n);
        const double dotxy = x[0] * y0 + (poly_.dim == 1 ? 0.0 : x[1] * y1);
        best = std::max(best, dotxy - (1.0 - t) * intercept_u_[k] - t * intercept_v_[k]);
    }
    return best;
}

double envelope_oracle(const ConvexPotential& u_hat, const ConvexPotential& v_hat, double t,
                       const std::array<double, 2>& x) {
    return EnvelopeOracle(u_hat, v_hat).eval(t, x);
}

}  // namespace riselab
