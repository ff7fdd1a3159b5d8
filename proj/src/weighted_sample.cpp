#include "riselab/weighted_sample.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace riselab {

WeightedSample::WeightedSample(std::vector<double> values, std::vector<double> weights)
    : values_(std::move(values)), weights_(std::move(weights)) {
    if (values_.empty() || values_.size() != weights_.size())
        throw std::invalid_argument("WeightedSample: need matching, nonempty values and weights");
    for (double v : values_)
        if (!std::isfinite(v)) throw std::invalid_argument("WeightedSample: values must be finite");
    for (double w : weights_) {
        if (!(w > 0.0) || !std::isfinite(w))
            throw std::invalid_argument("WeightedSample: weights must be strictly positive");
        total_mass_ += w;
    }
}

WeightedSample WeightedSample::uniform(std::vector<double> values, double total_mass) {
    if (values.empty()) throw std::invalid_argument("WeightedSample: empty sample");
    if (!(total_mass > 0.0)) throw std::invalid_argument("WeightedSample: total mass must be positive");
    std::vector<double> w(values.size(), total_mass / static_cast<double>(values.size()));
    return WeightedSample(std::move(values), std::move(w));
}

double WeightedSample::integral() const {
    double acc = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i) acc += values_[i] * weights_[i];
    return acc;
}

double WeightedSample::mass_above(double t) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (values_[i] > t) acc += weights_[i];
    return acc;
}

double WeightedSample::mass_at_least(double t) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (values_[i] >= t) acc += weights_[i];
    return acc;
}

}  // namespace riselab
