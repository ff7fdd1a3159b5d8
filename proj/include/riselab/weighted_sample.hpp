#pragma once

#include <cstddef>
#include <vector>

namespace riselab {

// A finite measure space carrying a real-valued function: atoms x_i with
// masses weights[i] > 0 and values values[i].  Immutable after construction.
class WeightedSample {
public:
    WeightedSample(std::vector<double> values, std::vector<double> weights);

    // Equal atom masses summing to total_mass.
    static WeightedSample uniform(std::vector<double> values, double total_mass = 1.0);

    const std::vector<double>& values() const { return values_; }
    const std::vector<double>& weights() const { return weights_; }
    double total_mass() const { return total_mass_; }
    std::size_t size() const { return values_.size(); }

    // \int xi d(mu) = sum values[i] * weights[i].
    double integral() const;

    // mu(xi > t) and mu(xi >= t).
    double mass_above(double t) const;
    double mass_at_least(double t) const;

    // Same weights, transformed values.
    template <typename Fn>
    WeightedSample map(Fn&& fn) const {
        std::vector<double> out(values_.size());
        for (std::size_t i = 0; i < values_.size(); ++i) out[i] = fn(values_[i]);
        return WeightedSample(std::move(out), weights_);
    }

private:
    std::vector<double> values_;
    std::vector<double> weights_;
    double total_mass_ = 0.0;
};

}  // namespace riselab
