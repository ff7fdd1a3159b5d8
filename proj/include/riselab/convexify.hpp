#pragma once

#include <cstddef>
#include <vector>

namespace riselab {

// Largest convex function below the data points (xs[i], v[i]), xs strictly
// increasing, evaluated back at the xs.  Idempotent.
std::vector<double> convexify_1d(const std::vector<double>& xs, const std::vector<double>& v);

// Same for a 2D grid: lower convex hull of the lifted points
// (xs[i], ys[j], v[i*ys.size()+j]) evaluated at every node, row-major in i.
std::vector<double> convexify_2d(const std::vector<double>& xs, const std::vector<double>& ys,
                                 const std::vector<double>& v);

}  // namespace riselab
