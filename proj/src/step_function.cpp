#include "riselab/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace riselab {

namespace {
constexpr double kRelGrace = 1e-9;  // float grace at the ends of (0, V]
}

StepFunction StepFunction::from_plateaus(std::vector<double> upper, std::vector<double> values) {
    if (upper.empty() || upper.size() != values.size())
        throw std::invalid_argument("StepFunction: need matching, nonempty breakpoints and values");
    double prev = 0.0;
    for (double s : upper) {
        if (!(s > prev) || !std::isfinite(s))
            throw std::invalid_argument("StepFunction: breakpoints must be strictly increasing from 0");
        prev = s;
    }
    StepFunction f;
    f.upper_.reserve(upper.size());
    f.values_.reserve(values.size());
    for (std::size_t k = 0; k < upper.size(); ++k) {
        if (!std::isfinite(values[k]))
            throw std::invalid_argument("StepFunction: values must be finite");
        if (!f.values_.empty()) {
            if (values[k] > f.values_.back())
                throw std::invalid_argument("StepFunction: plateau values must be decreasing");
            if (values[k] == f.values_.back()) {  // canonical merge
                f.upper_.back() = upper[k];
                continue;
            }
        }
        f.upper_.push_back(upper[k]);
        f.values_.push_back(values[k]);
    }
    return f;
}

StepFunction StepFunction::constant(double value, double total_mass) {
    return from_plateaus({total_mass}, {value});
}

double StepFunction::eval(double s) const {
    const double v = V();
    const double grace = kRelGrace * std::max(1.0, v);
    if (!(s > -grace) || s <= 0.0 || s > v + grace)
        throw std::invalid_argument("StepFunction::eval: argument outside (0, V]");
    s = std::min(s, v);
    // first plateau whose upper endpoint is >= s
    auto it = std::lower_bound(upper_.begin(), upper_.end(), s);
    return values_[static_cast<std::size_t>(it - upper_.begin())];
}

double StepFunction::partial_integral(double lambda) const {
    const double v = V();
    const double grace = kRelGrace * std::max(1.0, v);
    if (lambda < -grace || lambda > v + grace)
        throw std::invalid_argument("StepFunction::partial_integral: argument outside [0, V]");
    lambda = std::clamp(lambda, 0.0, v);
    double acc = 0.0, lo = 0.0;
    for (std::size_t k = 0; k < values_.size(); ++k) {
        const double hi = std::min(upper_[k], lambda);
        if (hi > lo) acc += values_[k] * (hi - lo);
        if (upper_[k] >= lambda) break;
        lo = upper_[k];
    }
    return acc;
}

std::vector<double> StepFunction::midpoints() const {
    std::vector<double> m(values_.size());
    double lo = 0.0;
    for (std::size_t k = 0; k < values_.size(); ++k) {
        m[k] = 0.5 * (lo + upper_[k]);
        lo = upper_[k];
    }
    return m;
}

StepFunction StepFunction::scaled(double factor) const {
    if (!(factor > 0.0)) throw std::invalid_argument("StepFunction::scaled: factor must be positive");
    StepFunction f = *this;
    for (double& v : f.values_) v *= factor;
    return f;
}

StepFunction StepFunction::shifted(double c) const {
    StepFunction f = *this;
    for (double& v : f.values_) v += c;
    return f;
}

std::vector<double> merged_breakpoints(const StepFunction& f, const StepFunction& g) {
    const double vf = f.V(), vg = g.V();
    if (std::abs(vf - vg) > kRelGrace * std::max(1.0, std::max(vf, vg)))
        throw std::invalid_argument("merged_breakpoints: functions live on different intervals");
    std::vector<double> out;
    out.reserve(f.plateau_count() + g.plateau_count());
    std::merge(f.upper_breakpoints().begin(), f.upper_breakpoints().end(),
               g.upper_breakpoints().begin(), g.upper_breakpoints().end(), std::back_inserter(out));
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.back() > std::min(vf, vg)) out.back() = std::min(vf, vg);
    return out;
}

double midpoint_distance(const StepFunction& f, const StepFunction& g) {
    const std::vector<double> bp = merged_breakpoints(f, g);
    double lo = 0.0, worst = 0.0;
    for (double hi : bp) {
        const double mid = 0.5 * (lo + hi);
        worst = std::max(worst, std::abs(f.eval(mid) - g.eval(mid)));
        lo = hi;
    }
    return worst;
}

}  // namespace riselab
