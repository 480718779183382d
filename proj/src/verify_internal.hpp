#pragma once

#include <json.hpp>

#include "trisub/types.hpp"

namespace trisub::verify {

nlohmann::json edges_json(const EdgeLengths& e);

}  // namespace trisub::verify
