#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "riselab/weighted_sample.hpp"

namespace riselab {

// Box moment polytope with a uniform grid, m subdivisions per axis.
// The reference measure is uniform node mass normalized to V = 1.
struct Polytope {
    int dim = 1;                                            // 1 or 2
    std::array<std::array<double, 2>, 2> bounds{{{0.0, 1.0}, {0.0, 1.0}}};
    int m = 64;                                             // subdivisions per axis, >= 8

    static Polytope unit(int dim, int m);

    void validate() const;
    int nodes_per_axis() const { return m + 1; }
    std::size_t node_count() const;
    double spacing(int axis) const { return (bounds[axis][1] - bounds[axis][0]) / m; }
    double coord(int axis, int i) const { return bounds[axis][0] + spacing(axis) * i; }
    bool same_grid(const Polytope& other) const;
};

// Grid-sampled convex function on the moment polytope (the dual-side
// representation of a torus-invariant potential).
class ConvexPotential {
public:
    // Validates discrete convexity (1D: second differences, 2D: lifted lower hull).
    ConvexPotential(Polytope poly, std::vector<double> values);

    // Skips the convexity check; for internal constructions that are convex by
    // exact arithmetic (pointwise max, convex combinations, hull output).
    static ConvexPotential trusted(Polytope poly, std::vector<double> values);

    const Polytope& polytope() const { return poly_; }
    const std::vector<double>& values() const { return values_; }
    double value(std::size_t i) const { return values_[i]; }
    std::size_t size() const { return values_.size(); }

    double value_spread() const;
    // Largest per-axis difference quotient magnitude; every dual slope of the
    // grid function lies in [-slope_bound, slope_bound] along each axis.
    double slope_bound() const;
    // Discrete gradient at node (centered in the interior, one-sided at the
    // boundary), the model moment map.
    std::array<double, 2> gradient(std::size_t node) const;

    ConvexPotential shifted(double c) const;

private:
    ConvexPotential() = default;
    Polytope poly_;
    std::vector<double> values_;
};

// Grid-sampled function of the log coordinates on the box [-R, R]^dim.
class SpaceFunction {
public:
    SpaceFunction(int dim, double R, int subdivisions, std::vector<double> values);

    int dim() const { return dim_; }
    double R() const { return R_; }
    int subdivisions() const { return m_; }
    int nodes_per_axis() const { return m_ + 1; }
    const std::vector<double>& values() const { return values_; }
    double spacing() const { return 2.0 * R_ / m_; }
    double coord(int i) const { return -R_ + spacing() * i; }
    bool same_grid(const SpaceFunction& other) const;

    // Multilinear interpolation at x (dim entries used).
    double interpolate(const std::array<double, 2>& x) const;

private:
    int dim_;
    double R_;
    int m_;
    std::vector<double> values_;
};

// Geodesic between two potentials, realized as affine interpolation of the
// dual grid values.
struct GeodesicPath {
    GeodesicPath(ConvexPotential start, ConvexPotential end);
    ConvexPotential start, end;
};

// Largest convex grid function below the data.
std::vector<double> convexify(const Polytope& poly, const std::vector<double>& values);
bool is_grid_convex(const Polytope& poly, const std::vector<double>& values, double tol = 1e-9);

// Lattice operations in dual coordinates: the envelope u ^ v has dual
// max(u_hat, v_hat), the pointwise max u v v has dual convexify(min).
ConvexPotential meet(const ConvexPotential& u_hat, const ConvexPotential& v_hat);
ConvexPotential join(const ConvexPotential& u_hat, const ConvexPotential& v_hat);

ConvexPotential geodesic_at(const GeodesicPath& path, double t);

struct XGridSpec {
    double R = 0.0;        // <= 0: choose automatically from the potential
    int subdivisions = 0;  // <= 0: choose automatically from the polytope grid
};

double auto_R(const ConvexPotential& u_hat);
int auto_x_subdivisions(const Polytope& poly);
// Grid that covers the dual slopes of both potentials (shared by a path).
XGridSpec shared_grid(const ConvexPotential& u_hat, const ConvexPotential& v_hat);

// u(x) = max over polytope grid nodes y of <x, y> - u_hat(y).
SpaceFunction legendre(const ConvexPotential& u_hat, XGridSpec spec = {});

// u_hat(y) = max over x grid nodes of <x, y> - f(x), then convexified.
ConvexPotential project_space_function(const SpaceFunction& f, const Polytope& poly);

// Sample of g under the measure induced by u_hat: values g(grad u_hat(y_i))
// with uniform node weights summing to 1.
WeightedSample pushforward_measure(const ConvexPotential& u_hat, const SpaceFunction& g);

// Centered difference in t of the space-side geodesic on the x grid.
SpaceFunction velocity_finite_difference(const GeodesicPath& path, double t, double dt,
                                         XGridSpec spec = {});

// Independent computation of the space-side geodesic value as the upper
// envelope of affine-in-(t, x) minorants with slopes on the polytope grid and
// intercepts recovered from the space-side boundary data.  Test oracle.
class EnvelopeOracle {
public:
    EnvelopeOracle(const ConvexPotential& u_hat, const ConvexPotential& v_hat, XGridSpec spec = {});

    double eval(double t, const std::array<double, 2>& x) const;
    const SpaceFunction& boundary_start() const { return u_; }
    const SpaceFunction& boundary_end() const { return v_; }

private:
    Polytope poly_;
    SpaceFunction u_, v_;
    std::vector<double> intercept_u_, intercept_v_;  // per polytope node
};

double envelope_oracle(const ConvexPotential& u_hat, const ConvexPotential& v_hat, double t,
                       const std::array<double, 2>& x);

}  // namespace riselab
