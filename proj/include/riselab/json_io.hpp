#pragma once

#include <string>

#include <json.hpp>

#include "riselab/step_function.hpp"
#include "riselab/toric.hpp"
#include "riselab/weighted_sample.hpp"

namespace riselab {

nlohmann::json to_json(const StepFunction& f);
nlohmann::json to_json(const WeightedSample& s);
nlohmann::json to_json(const ConvexPotential& p);
nlohmann::json to_json(const SpaceFunction& f);

StepFunction step_function_from_json(const nlohmann::json& j);
WeightedSample weighted_sample_from_json(const nlohmann::json& j);
ConvexPotential potential_from_json(const nlohmann::json& j);
SpaceFunction space_function_from_json(const nlohmann::json& j);

void write_json_file(const std::string& path, const nlohmann::json& j);
nlohmann::json read_json_file(const std::string& path);

}  // namespace riselab
