#pragma once

#include "riselab/step_function.hpp"
#include "riselab/weighted_sample.hpp"

namespace riselab {

// Decreasing rearrangement xi* of the sample: the canonical decreasing usc
// step function on (0, V] equidistributed with xi.
StepFunction rearrange(const WeightedSample& sample);

// Hardy-Littlewood-Polya relation f >= g: int_0^lambda f >= int_0^lambda g - tol
// for every lambda in the merged breakpoint set (sufficient for step functions).
bool hlp_geq(const StepFunction& f, const StepFunction& g, double tol);

// Distribution bounds mu(xi > xi*(s)) <= s <= mu(xi >= xi*(s)) probed at every
// plateau midpoint and breakpoint of rearrange(sample).
bool distribution_bounds_check(const WeightedSample& sample);

// True iff the two samples are strict rearrangements of one another: equal
// total mass and coinciding rearrangements at all merged breakpoints.
bool equidistributed(const WeightedSample& a, const WeightedSample& b, double tol);

// The (alpha, beta)-rescaling s -> (alpha f)*(beta s) on (0, V], beta in (0, 1].
StepFunction rescale_allied(const StepFunction& f, double alpha, double beta);

// Catalogue of convex, coordinatewise-increasing bivariate maps.
enum class BivariateKind { Sum, Max };

// Rearrangement subadditivity F(xi,eta)*(s) <= F(xi*(sigma), eta*(s-sigma)),
// checked at one (sigma, s) pair with 1e-9 slack.  xi and eta share weights.
bool sum_rearrangement_bound_check(const WeightedSample& xi, const WeightedSample& eta,
                                   BivariateKind F, double sigma, double s);

}  // namespace riselab
