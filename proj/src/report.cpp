#include "riselab/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace riselab {

bool RunReport::aggregate_pass() const {
    for (const CheckRecord& r : records)
        if (!r.pass) return false;
    return true;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string to_csv(const RunReport& report) {
    std::ostringstream out;
    out << kCsvHeader << "\n";
    for (const CheckRecord& r : report.records)
        out << report.scenario << ',' << r.seed << ',' << r.check << ','
            << format_double(r.max_violation) << ',' << format_double(r.tolerance) << ','
            << (r.pass ? "true" : "false") << "\n";
    return out.str();
}

void write_csv(const RunReport& report, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << to_csv(report);
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<std::pair<std::string, CheckRecord>> parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader)
        throw std::runtime_error("parse_csv: missing or malformed header");
    std::vector<std::pair<std::string, CheckRecord>> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cols;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= line.size(); ++i)
            if (i == line.size() || line[i] == ',') {
                cols.push_back(line.substr(start, i - start));
                start = i + 1;
            }
        if (cols.size() != 6) throw std::runtime_error("parse_csv: malformed row: " + line);
        CheckRecord r;
        r.seed = std::stoull(cols[1]);
        r.check = cols[2];
        r.max_violation = std::stod(cols[3]);
        r.tolerance = std::stod(cols[4]);
        r.pass = cols[5] == "true";
        out.emplace_back(cols[0], std::move(r));
    }
    return out;
}

}  // namespace riselab
