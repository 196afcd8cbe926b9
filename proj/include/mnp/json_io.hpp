#pragma once

#include <json.hpp>

#include "mnp/core.hpp"
#include "mnp/objectives.hpp"
#include "mnp/solver.hpp"

namespace mnp {

nlohmann::json to_json(const Instance& inst);
/// {"k": int, "assignment": [int]}, labels canonicalized first.
nlohmann::json to_json(const Partition& p);
/// Flat object keyed by ObjectiveReport field names. An overflowed
/// product is null with "product_of_sums_overflow": true.
nlohmann::json to_json(const ObjectiveReport& report);
nlohmann::json to_json(const MergeTrace& trace);
nlohmann::json to_json(const ObjectiveValue& value);

/// Throws InputError on a malformed object.
Partition partition_from_json(const nlohmann::json& j);
ObjectiveReport report_from_json(const nlohmann::json& j);

}  // namespace mnp
