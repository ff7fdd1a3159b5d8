#pragma once

#include <string>
#include <vector>

#include "riselab/step_function.hpp"

namespace riselab {

struct SvgCurve {
    std::string label;
    std::string color;
    std::vector<double> x, y;  // polyline vertices
};

// Staircase polyline of a left-continuous step function on (0, V].
SvgCurve staircase(const StepFunction& f, std::string label, std::string color);

// Minimal deterministic line chart with axes and a legend.
std::string render_chart(const std::vector<SvgCurve>& curves, const std::string& title);
void write_svg(const std::string& path, const std::vector<SvgCurve>& curves,
               const std::string& title);

}  // namespace riselab
