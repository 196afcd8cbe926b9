#include "mnp/json_io.hpp"

namespace mnp {

using nlohmann::json;

json to_json(const Instance& inst) {
  return json{{"weights", std::vector<std::int64_t>(inst.weights().begin(), inst.weights().end())},
              {"total", inst.total()}};
}

json to_json(const Partition& p) {
  const Partition c = p.canonical();
  return json{{"k", c.k()},
              {"assignment", std::vector<std::size_t>(c.assignment().begin(), c.assignment().end())}};
}

json to_json(const ObjectiveReport& r) {
  json j{{"min_diff", r.min_diff},
         {"min_max", r.min_max},
         {"max_min", r.max_min},
         {"entropy_bits", r.entropy_bits},
         {"min_entropy_bits", r.min_entropy_bits},
         {"product_of_sums", nullptr},
         {"product_of_sums_overflow", !r.product_of_sums.has_value()},
         {"compression_numerator", r.compression_numerator},
         {"compression_bits", r.compression_bits}};
  if (r.product_of_sums) j["product_of_sums"] = *r.product_of_sums;
  return j;
}

json to_json(const MergeTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps) steps.push_back({s.first, s.second, s.merged});
  return json{{"steps", steps}, {"final_list", trace.final_list}};
}

json to_json(const ObjectiveValue& value) {
  return std::visit([](auto v) { return json(v); }, value);
}

Partition partition_from_json(const json& j) {
  try {
    return Partition(j.at("k").get<std::size_t>(), j.at("assignment").get<std::vector<std::size_t>>());
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed partition JSON: ") + e.what());
  }
}

ObjectiveReport report_from_json(const json& j) {
  try {
    ObjectiveReport r;
    r.min_diff = j.at("min_diff").get<std::int64_t>();
    r.min_max = j.at("min_max").get<std::int64_t>();
    r.max_min = j.at("max_min").get<std::int64_t>();
    r.entropy_bits = j.at("entropy_bits").get<double>();
    r.min_entropy_bits = j.at("min_entropy_bits").get<double>();
    if (!j.at("product_of_sums").is_null()) r.product_of_sums = j.at("product_of_sums").get<std::int64_t>();
    r.compression_numerator = j.at("compression_numerator").get<std::int64_t>();
    r.compression_bits = j.at("compression_bits").get<double>();
    return r;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report JSON: ") + e.what());
  }
}

}  // namespace mnp
