#include <gtest/gtest.h>

#include <random>

#include "mnp/json_io.hpp"
#include "mnp/verify.hpp"

using namespace mnp;
using nlohmann::json;

TEST(PartitionJson, CanonicalForm) {
  const json j = to_json(Partition(3, {2, 2, 0}));
  EXPECT_EQ(j.dump(), R"({"assignment":[0,0,1],"k":3})");
  EXPECT_EQ(partition_from_json(j), Partition(3, {0, 0, 1}));
}

TEST(PartitionJson, Malformed) {
  EXPECT_THROW(partition_from_json(json::parse(R"({"k":2})")), InputError);
  EXPECT_THROW(partition_from_json(json::parse(R"({"k":2,"assignment":[0,5]})")), InputError);
  EXPECT_THROW(partition_from_json(json::parse(R"({"k":"two","assignment":[0]})")), InputError);
}

TEST(ReportJson, FlatFieldNames) {
  const Instance inst({1, 1, 2, 3, 4, 5});
  const json j = to_json(evaluate(inst, Partition(2, {0, 0, 0, 0, 1, 1})));
  for (const char* key : {"min_diff", "min_max", "max_min", "entropy_bits", "min_entropy_bits",
                          "product_of_sums", "compression_numerator", "compression_bits"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["compression_numerator"], 22);
  EXPECT_EQ(j["product_of_sums"], 63);
  EXPECT_EQ(j["product_of_sums_overflow"], false);
}

TEST(ReportJson, OverflowIsNull) {
  const std::int64_t big = std::int64_t{1} << 40;
  const json j = to_json(evaluate(Instance({big, big}), Partition(2, {0, 1})));
  EXPECT_TRUE(j["product_of_sums"].is_null());
  EXPECT_EQ(j["product_of_sums_overflow"], true);
  EXPECT_FALSE(report_from_json(j).product_of_sums.has_value());
}

TEST(JsonRoundTrip, ReEvaluationReproducesReport) {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 300; ++t) {
    const Instance inst = random_instance(rng, 1, 20, 1, 1000);
    std::uniform_int_distribution<std::size_t> kd(1, 6);
    const Partition p = random_partition(rng, inst.size(), kd(rng));
    const std::string text = json{{"partition", to_json(p)}, {"report", to_json(evaluate(inst, p))}}.dump();
    const json back = json::parse(text);
    const auto reported = report_from_json(back["report"]);
    const auto again = evaluate(inst, partition_from_json(back["partition"]));
    ASSERT_EQ(again.compression_numerator, reported.compression_numerator);
    ASSERT_EQ(again.min_diff, reported.min_diff);
    ASSERT_EQ(again.min_max, reported.min_max);
    ASSERT_EQ(again.max_min, reported.max_min);
    ASSERT_EQ(again.product_of_sums, reported.product_of_sums);
    ASSERT_NEAR(again.entropy_bits, reported.entropy_bits, 1e-9);
    ASSERT_NEAR(again.min_entropy_bits, reported.min_entropy_bits, 1e-9);
    ASSERT_NEAR(again.compression_bits, reported.compression_bits, 1e-9);
  }
}
