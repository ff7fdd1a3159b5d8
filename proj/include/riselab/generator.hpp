#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "riselab/toric.hpp"

namespace riselab {

enum class InstanceKind { Kinky, Smooth, MonotonePair, Triple };

std::optional<InstanceKind> instance_kind_by_name(const std::string& name);
std::string instance_kind_name(InstanceKind kind);

// Deterministic instances: the underlying potentials depend only on
// (seed, dim, kind); m merely sets the sampling grid, so the same seed can be
// re-sampled at several resolutions for refinement studies.
//
// Kinky / Smooth      -> pair {u_hat, v_hat}; max of 3..8 affine maps, plus a
//                        strictly convex quadratic for Smooth
// MonotonePair        -> pair with u_hat >= v_hat pointwise (so u <= v)
// Triple              -> three mutually distinct potentials
std::vector<ConvexPotential> generate_instance(std::uint64_t seed, int dim, int m,
                                               InstanceKind kind);

}  // namespace riselab
