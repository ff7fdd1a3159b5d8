#include "riselab/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "riselab/report.hpp"

namespace riselab {

SvgCurve staircase(const StepFunction& f, std::string label, std::string color) {
    SvgCurve c;
    c.label = std::move(label);
    c.color = std::move(color);
    double lo = 0.0;
    for (std::size_t k = 0; k < f.plateau_count(); ++k) {
        const double v = f.plateau_values()[k];
        c.x.push_back(lo);
        c.y.push_back(v);
        c.x.push_back(f.upper_breakpoints()[k]);
        c.y.push_back(v);
        lo = f.upper_breakpoints()[k];
    }
    return c;
}

std::string render_chart(const std::vector<SvgCurve>& curves, const std::string& title) {
    const double W = 640.0, H = 400.0, ML = 60.0, MR = 20.0, MT = 36.0, MB = 44.0;
    double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
    bool first = true;
    for (const SvgCurve& c : curves)
        for (std::size_t i = 0; i < c.x.size(); ++i) {
            if (first) {
                xmin = xmax = c.x[i];
                ymin = ymax = c.y[i];
                first = false;
            }
            xmin = std::min(xmin, c.x[i]);
            xmax = std::max(xmax, c.x[i]);
            ymin = std::min(ymin, c.y[i]);
            ymax = std::max(ymax, c.y[i]);
        }
    if (xmax - xmin < 1e-12) xmax = xmin + 1.0;
    if (ymax - ymin < 1e-12) ymax = ymin + 1.0;
    const double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;
    auto px = [&](double x) { return ML + (x - xmin) / (xmax - xmin) * (W - ML - MR); };
    auto py = [&](double y) { return H - MB - (y - ymin) / (ymax - ymin) * (H - MT - MB); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    out << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
    out << "<text x=\"" << W / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" << title
        << "</text>\n";
    // axes
    out << "<line x1=\"" << ML << "\" y1=\"" << H - MB << "\" x2=\"" << W - MR << "\" y2=\""
        << H - MB << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ML << "\" y1=\"" << MT << "\" x2=\"" << ML << "\" y2=\"" << H - MB
        << "\" stroke=\"black\"/>\n";
    for (int k = 0; k <= 4; ++k) {
        const double xv = xmin + (xmax - xmin) * k / 4.0;
        const double yv = ymin + (ymax - ymin) * k / 4.0;
        out << "<text x=\"" << px(xv) << "\" y=\"" << H - MB + 18
            << "\" text-anchor=\"middle\" font-size=\"11\">" << format_double(xv) << "</text>\n";
        out << "<text x=\"" << ML - 6 << "\" y=\"" << py(yv) + 4
            << "\" text-anchor=\"end\" font-size=\"11\">" << format_double(yv) << "</text>\n";
        out << "<line x1=\"" << px(xv) << "\" y1=\"" << H - MB << "\" x2=\"" << px(xv) << "\" y2=\""
            << H - MB + 4 << "\" stroke=\"black\"/>\n";
        out << "<line x1=\"" << ML - 4 << "\" y1=\"" << py(yv) << "\" x2=\"" << ML << "\" y2=\""
            << py(yv) << "\" stroke=\"black\"/>\n";
    }
    double legend_y = MT + 6.0;
    for (const SvgCurve& c : curves) {
        out << "<polyline fill=\"none\" stroke=\"" << c.color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < c.x.size(); ++i) {
            if (i) out << ' ';
            out << format_double(px(c.x[i])) << ',' << format_double(py(c.y[i]));
        }
        out << "\"/>\n";
        out << "<line x1=\"" << W - MR - 150 << "\" y1=\"" << legend_y << "\" x2=\"" << W - MR - 130
            << "\" y2=\"" << legend_y << "\" stroke=\"" << c.color << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << W - MR - 124 << "\" y=\"" << legend_y + 4 << "\" font-size=\"11\">"
            << c.label << "</text>\n";
        legend_y += 16.0;
    }
    out << "</svg>\n";
    return out.str();
}

void write_svg(const std::string& path, const std::vector<SvgCurve>& curves,
               const std::string& title) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << render_chart(curves, title);
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace riselab
