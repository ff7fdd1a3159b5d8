#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace riselab {

struct CheckRecord {
    std::string check;
    std::uint64_t seed = 0;
    double max_violation = 0.0;
    double tolerance = 0.0;
    bool pass = true;
};

struct RunReport {
    std::string scenario;
    std::string version;
    int dim = 1;
    int grid_m = 64;
    std::uint64_t base_seed = 1;
    std::vector<CheckRecord> records;

    bool aggregate_pass() const;
};

inline const char* kCsvHeader = "scenario,seed,check,max_violation,tolerance,pass";

std::string to_csv(const RunReport& report);
void write_csv(const RunReport& report, const std::string& path);

// Inverse of to_csv for the record rows; scenario read back per row.
std::vector<std::pair<std::string, CheckRecord>> parse_csv(const std::string& text);

std::string format_double(double x);

}  // namespace riselab
