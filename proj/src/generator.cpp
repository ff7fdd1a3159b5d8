#include "riselab/generator.hpp"

#include <array>
#include <cmath>
#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

namespace riselab {

namespace {

// platform-independent uniforms on top of the fully specified mt19937_64
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}
double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}
int uniform_int(std::mt19937_64& rng, int lo, int hi) {  // inclusive
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

struct AffinePiece {
    std::array<double, 2> slope{0.0, 0.0};
    double intercept = 0.0;
};

constexpr double kSlopeBox = 0.5;
constexpr double kInterceptBox = 0.25;
// kink lattice for 1D draws: every refinement grid in use resolves j/16, so
// the max-of-affines switch points sit on grid nodes at all tested m
constexpr int kKinkLattice = 16;

struct PotentialParams {
    // 1D: convex piecewise-linear data as base slope + kink positions/jumps
    double base_value = 0.0;
    double base_slope = 0.0;
    std::vector<double> kinks;        // strictly increasing, on the lattice
    std::vector<double> slope_jumps;  // positive
    // 2D: explicit max of affine pieces
    std::vector<AffinePiece> pieces;
    double eps = 0.0;          // quadratic strength
    double smooth_width = 0.0; // > 0: hinges mollified at this scale (regular instances)
    std::array<double, 2> quad_center{0.5, 0.5};
};

// softplus hinge: w * ln(1 + exp(z / w)), overflow-safe
double smooth_hinge(double z, double w) {
    if (w <= 0.0) return std::max(0.0, z);
    const double r = z / w;
    if (r > 0.0) return z + w * std::log1p(std::exp(-r));
    return w * std::log1p(std::exp(r));
}

PotentialParams draw_potential(std::mt19937_64& rng, int dim, bool smooth) {
    PotentialParams p;
    if (dim == 1) {
        // equivalent to a max of (kinks+1) affine pieces with switch points on
        // the lattice; slopes are sorted uniforms in the slope box
        const int pieces = uniform_int(rng, 3, 8);
        std::vector<int> sites;
        for (int j = 2; j <= kKinkLattice - 2; ++j) sites.push_back(j);
        for (int k = 0; k < pieces - 1; ++k) {
            const int pick = uniform_int(rng, k, static_cast<int>(sites.size()) - 1);
            std::swap(sites[static_cast<std::size_t>(k)], sites[static_cast<std::size_t>(pick)]);
        }
        sites.resize(static_cast<std::size_t>(pieces - 1));
        std::sort(sites.begin(), sites.end());
        // stratified slopes: every kink keeps a genuine slope jump
        std::vector<double> slopes(static_cast<std::size_t>(pieces));
        for (int k = 0; k < pieces; ++k)
            slopes[static_cast<std::size_t>(k)] =
                -kSlopeBox + 2.0 * kSlopeBox * (k + 0.8 * uniform01(rng)) / pieces;
        p.base_value = uniform(rng, -kInterceptBox, kInterceptBox);
        p.base_slope = slopes[0];
        for (int k = 0; k + 1 < pieces; ++k) {
            p.kinks.push_back(static_cast<double>(sites[static_cast<std::size_t>(k)]) / kKinkLattice);
            p.slope_jumps.push_back(slopes[static_cast<std::size_t>(k + 1)] -
                                    slopes[static_cast<std::size_t>(k)]);
        }
    } else {
        const int n = uniform_int(rng, 3, 8);
        p.pieces.assign(static_cast<std::size_t>(n), AffinePiece{});
        for (AffinePiece& piece : p.pieces) {
            for (int d = 0; d < dim; ++d)
                piece.slope[static_cast<std::size_t>(d)] = uniform(rng, -kSlopeBox, kSlopeBox);
            piece.intercept = uniform(rng, -kInterceptBox, kInterceptBox);
        }
    }
    p.eps = smooth ? 0.1 : 0.0;
    // regular instances mollify the hinges at a scale the coarsest grid resolves
    p.smooth_width = 0.0;
    for (int d = 0; d < dim; ++d) p.quad_center[static_cast<std::size_t>(d)] = uniform(rng, 0.2, 0.8);
    return p;
}

double eval_params(const PotentialParams& p, int dim, const std::array<double, 2>& y) {
    double best;
    if (dim == 1) {
        best = p.base_value + p.base_slope * y[0];
        for (std::size_t k = 0; k < p.kinks.size(); ++k)
            best += p.slope_jumps[k] * smooth_hinge(y[0] - p.kinks[k], p.smooth_width);
    } else {
        if (p.smooth_width > 0.0) {
            // mollified max: smooth_hinge-chained log-sum-exp over the pieces
            const double w = p.smooth_width;
            double top = -std::numeric_limits<double>::infinity();
            for (const AffinePiece& piece : p.pieces) {
                double v = piece.intercept;
                for (int d = 0; d < dim; ++d)
                    v += piece.slope[static_cast<std::size_t>(d)] * y[static_cast<std::size_t>(d)];
                top = std::max(top, v);
            }
            double acc = 0.0;
            for (const AffinePiece& piece : p.pieces) {
                double v = piece.intercept;
                for (int d = 0; d < dim; ++d)
                    v += piece.slope[static_cast<std::size_t>(d)] * y[static_cast<std::size_t>(d)];
                acc += std::exp((v - top) / w);
            }
            best = top + w * std::log(acc);
        } else {
            best = -std::numeric_limits<double>::infinity();
            for (const AffinePiece& piece : p.pieces) {
                double v = piece.intercept;
                for (int d = 0; d < dim; ++d)
                    v += piece.slope[static_cast<std::size_t>(d)] * y[static_cast<std::size_t>(d)];
                best = std::max(best, v);
            }
        }
    }
    if (p.eps > 0.0)
        for (int d = 0; d < dim; ++d) {
            const double dy = y[static_cast<std::size_t>(d)] - p.quad_center[static_cast<std::size_t>(d)];
            best += p.eps * dy * dy;
        }
    return best;
}

// nonnegative convex gap: a small convex draw shifted so its minimum is zero
struct GapParams {
    PotentialParams base;
    int dim = 1;
    double min_value = 0.0;
};

double eval_gap(const GapParams& g, int dim, const std::array<double, 2>& y);

GapParams draw_gap(std::mt19937_64& rng, int dim) {
    GapParams g;
    g.dim = dim;
    g.base = draw_potential(rng, dim, false);
    double lo = std::numeric_limits<double>::infinity();
    const int probes = 8 * kKinkLattice;
    if (dim == 1) {
        for (int q = 0; q <= probes; ++q)
            lo = std::min(lo, eval_params(g.base, 1, {static_cast<double>(q) / probes, 0.0}));
    } else {
        for (int q0 = 0; q0 <= probes; ++q0)
            for (int q1 = 0; q1 <= probes; ++q1)
                lo = std::min(lo, eval_params(g.base, 2,
                                              {static_cast<double>(q0) / probes,
                                               static_cast<double>(q1) / probes}));
        // the 2D probe min can sit above the true min by Lip * spacing; pad so
        // the gap stays nonnegative at every node of any sampling grid
        lo -= 2.0 * (2.0 * kSlopeBox) / probes;
    }
    g.min_value = lo;
    return g;
}

double eval_gap(const GapParams& g, int dim, const std::array<double, 2>& y) {
    return eval_params(g.base, dim, y) - g.min_value;
}

template <typename Eval>
ConvexPotential sample_on_grid(const Polytope& poly, Eval&& eval) {
    const int n = poly.nodes_per_axis();
    std::vector<double> values(poly.node_count());
    if (poly.dim == 1) {
        for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = eval({poly.coord(0, i), 0.0});
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                values[static_cast<std::size_t>(i) * n + j] = eval({poly.coord(0, i), poly.coord(1, j)});
    }
    return ConvexPotential(poly, std::move(values));
}

std::mt19937_64 seeded(std::uint64_t seed, int dim, InstanceKind kind) {
    const std::uint64_t mix = seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(dim) * 77ULL +
                              static_cast<std::uint64_t>(kind) * 7919ULL + 1ULL;
    return std::mt19937_64(mix);
}

}  // namespace

std::optional<InstanceKind> instance_kind_by_name(const std::string& name) {
    if (name == "kinky") return InstanceKind::Kinky;
    if (name == "smooth") return InstanceKind::Smooth;
    if (name == "monotone-pair") return InstanceKind::MonotonePair;
    if (name == "triple") return InstanceKind::Triple;
    return std::nullopt;
}

std::string instance_kind_name(InstanceKind kind) {
    switch (kind) {
        case InstanceKind::Kinky: return "kinky";
        case InstanceKind::Smooth: return "smooth";
        case InstanceKind::MonotonePair: return "monotone-pair";
        case InstanceKind::Triple: return "triple";
    }
    return "?";
}

std::vector<ConvexPotential> generate_instance(std::uint64_t seed, int dim, int m,
                                               InstanceKind kind) {
    const Polytope poly = Polytope::unit(dim, m);
    std::mt19937_64 rng = seeded(seed, dim, kind);
    std::vector<ConvexPotential> out;
    switch (kind) {
        case InstanceKind::Kinky:
        case InstanceKind::Smooth: {
            const bool smooth = kind == InstanceKind::Smooth;
            const PotentialParams a = draw_potential(rng, dim, smooth);
            const PotentialParams b = draw_potential(rng, dim, smooth);
            out.push_back(sample_on_grid(poly, [&](std::array<double, 2> y) { return eval_params(a, dim, y); }));
            out.push_back(sample_on_grid(poly, [&](std::array<double, 2> y) { return eval_params(b, dim, y); }));
            break;
        }
        case InstanceKind::MonotonePair: {
            const PotentialParams base = draw_potential(rng, dim, uniform01(rng) < 0.5);
            const GapParams gap = draw_gap(rng, dim);
            out.push_back(sample_on_grid(poly, [&](std::array<double, 2> y) {
                return eval_params(base, dim, y) + eval_gap(gap, dim, y);
            }));
            out.push_back(sample_on_grid(poly, [&](std::array<double, 2> y) { return eval_params(base, dim, y); }));
            break;
        }
        case InstanceKind::Triple: {
            for (int k = 0; k < 3; ++k) {
                const PotentialParams p = draw_potential(rng, dim, uniform01(rng) < 0.5);
                out.push_back(
                    sample_on_grid(poly, [&](std::array<double, 2> y) { return eval_params(p, dim, y); }));
            }
            break;
        }
    }
    return out;
}

}  // namespace riselab
