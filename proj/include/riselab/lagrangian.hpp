#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "riselab/rearrange.hpp"
#include "riselab/step_function.hpp"
#include "riselab/weighted_sample.hpp"

namespace riselab {

// Fixed catalogue of convex even scalar maps with chi(0) = 0:
// |t|^p (p in {1, 1.5, 2, 3, 4}), t^2/(1+|t|), and a Huber-type map
// min-like t^2 capped to linear growth 10|t| - 25 past |t| = 5.
class Chi {
public:
    enum class Kind { AbsPow, Rational, Huber };

    static Chi abs_pow(double p);
    static Chi rational();
    static Chi huber();
    static const std::vector<Chi>& catalogue();
    static std::optional<Chi> by_name(const std::string& name);

    double operator()(double t) const;
    Kind kind() const { return kind_; }
    double exponent() const { return p_; }
    std::string name() const;
    // chi is positively homogeneous of degree 1 (so the Luxemburg norm scales
    // actions away) only for |t|^1
    bool positively_homogeneous() const { return kind_ == Kind::AbsPow && p_ == 1.0; }

private:
    Chi(Kind kind, double p) : kind_(kind), p_(p) {}
    Kind kind_;
    double p_;
};

// L(xi) = int_0^V xi* f with a decreasing integrable profile f.
struct WeightLagrangian {
    StepFunction profile;
};

// L(xi) = int_X chi(xi) d(mu).
struct OrliczIntegralLagrangian {
    Chi chi;
};

// Luxemburg norm: inf { r > 0 : int chi(xi/r) d(mu) <= chi(1) }.
struct OrliczNormLagrangian {
    Chi chi;
};

// Finite family {(a_k, f_k)}: L(xi) = max_k a_k + int_0^V xi* f_k*.
struct FenchelMember {
    double offset = 0.0;
    WeightedSample profile;
};

struct FenchelLagrangian {
    std::vector<FenchelMember> members;
};

using LagrangianSpec =
    std::variant<WeightLagrangian, OrliczIntegralLagrangian, OrliczNormLagrangian, FenchelLagrangian>;

double evaluate(const LagrangianSpec& L, const WeightedSample& xi);

// L_star: the functional induced on step functions through equidistribution.
double l_star(const LagrangianSpec& L, const StepFunction& zeta);

// Exact integral int_0^V f* g* of two step functions over the merged partition.
double ordered_product_integral(const StepFunction& f, const StepFunction& g);

// Brute-force identity L(xi) = sup over rearrangements gamma of f of
// int xi gamma d(mu), for small samples with equal weights.
double hardy_littlewood_sup_gap(const WeightedSample& xi, const WeightedSample& f);
bool hardy_littlewood_sup_check(const WeightedSample& xi, const WeightedSample& f);

struct DerivedLagrangians {
    FenchelLagrangian plus, minus, abs;
};

// Families with profiles replaced by f_+, f_-, |f|.
DerivedLagrangians derived_lagrangians(const FenchelLagrangian& L);

// The four comparison inequalities relating L, L+, L-, L^| |.
double comparison_violation(const FenchelLagrangian& L, const WeightedSample& xi);
bool comparison_check(const FenchelLagrangian& L, const WeightedSample& xi, double tol = 1e-9);

// sup_k a_k + lambda * int |f_k| d(mu).
double finiteness_bound(const FenchelLagrangian& L, double lambda);

// sup_k a_k + lambda * int_0^delta |f_k|*; the uniform-integrability modulus.
double ac_modulus(const FenchelLagrangian& L, double lambda, double delta);

}  // namespace riselab
