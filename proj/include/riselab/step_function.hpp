#pragma once

#include <cstddef>
#include <vector>

namespace riselab {

// Left-continuous decreasing step function on (0, V].  The value on
// (s_{k-1}, s_k] is plateau_values()[k].  Canonical form: adjacent plateaus
// with equal values are merged, so plateau values are strictly decreasing.
class StepFunction {
public:
    // upper[k] are the right plateau endpoints 0 < upper[0] < ... < upper.back() = V.
    // Values must be (weakly) decreasing; equal neighbours are merged.
    static StepFunction from_plateaus(std::vector<double> upper, std::vector<double> values);
    static StepFunction constant(double value, double total_mass);

    double V() const { return upper_.back(); }
    std::size_t plateau_count() const { return values_.size(); }
    const std::vector<double>& upper_breakpoints() const { return upper_; }
    const std::vector<double>& plateau_values() const { return values_; }

    // Plateau value at s in (0, V], left-continuous convention.
    double eval(double s) const;

    // \int_0^lambda f, exact piecewise-constant arithmetic, 0 <= lambda <= V.
    double partial_integral(double lambda) const;
    double integral() const { return partial_integral(V()); }

    double max_value() const { return values_.front(); }
    double min_value() const { return values_.back(); }

    // Midpoints of every plateau; the canonical probe set for a.e. comparisons.
    std::vector<double> midpoints() const;

    // Pointwise algebra that preserves the decreasing property.
    StepFunction scaled(double factor) const;   // factor > 0
    StepFunction shifted(double c) const;

    double length(std::size_t k) const { return upper_[k] - (k == 0 ? 0.0 : upper_[k - 1]); }

private:
    StepFunction() = default;
    std::vector<double> upper_;
    std::vector<double> values_;
};

// Sorted union of the breakpoints of f and g (without 0); requires equal V.
std::vector<double> merged_breakpoints(const StepFunction& f, const StepFunction& g);

// max_s |f(s) - g(s)| over the plateau midpoints of the merged partition.
double midpoint_distance(const StepFunction& f, const StepFunction& g);

}  // namespace riselab
