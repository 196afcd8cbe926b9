#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "mnp/entropy.hpp"
#include "mnp/huffman.hpp"
#include "oracles.hpp"

using namespace mnp;

namespace {

double kraft_sum(const HuffmanCode& code) {
  double s = 0;
  for (auto l : code.lengths) s += std::ldexp(1.0, -static_cast<int>(l));
  return s;
}

std::vector<std::int64_t> random_weights(std::mt19937_64& rng, std::size_t lo, std::size_t hi,
                                         std::int64_t max_weight) {
  std::uniform_int_distribution<std::size_t> size(lo, hi);
  std::uniform_int_distribution<std::int64_t> weight(1, max_weight);
  std::vector<std::int64_t> w(size(rng));
  for (auto& x : w) x = weight(rng);
  return w;
}

}  // namespace

TEST(BuildHuffman, RunningExample) {
  const std::vector<std::int64_t> w{1, 1, 2, 3, 4, 5};
  const HuffmanCode code = build_huffman(w);
  // Merge weights 2, 4, 7, 9, 16.
  EXPECT_EQ(code.cost_numerator, 2 + 4 + 7 + 9 + 16);
  EXPECT_EQ(code.cost_numerator, 38);
  EXPECT_EQ(code.weight_total, 16);
  EXPECT_EQ(code.cost_numerator, oracle::kraft_min_cost(w));
  std::int64_t weighted = 0;
  for (std::size_t i = 0; i < w.size(); ++i) weighted += w[i] * code.lengths[i];
  EXPECT_EQ(weighted, 38);
  EXPECT_DOUBLE_EQ(expected_length_bits(code), 2.375);
}

TEST(BuildHuffman, SingleSymbolHasZeroLength) {
  const HuffmanCode code = build_huffman(std::vector<std::int64_t>{7});
  EXPECT_EQ(code.lengths, (std::vector<std::uint32_t>{0}));
  EXPECT_EQ(code.cost_numerator, 0);
  EXPECT_EQ(expected_length_bits(code), 0.0);
}

TEST(BuildHuffman, TwoSymbols) {
  const HuffmanCode code = build_huffman(std::vector<std::int64_t>{1, 1});
  EXPECT_EQ(code.lengths, (std::vector<std::uint32_t>{1, 1}));
  EXPECT_EQ(code.cost_numerator, 2);
}

TEST(BuildHuffman, UniformFour) {
  const HuffmanCode code = build_huffman(std::vector<std::int64_t>{1, 1, 1, 1});
  EXPECT_EQ(code.lengths, (std::vector<std::uint32_t>{2, 2, 2, 2}));
  EXPECT_DOUBLE_EQ(expected_length_bits(code), 2.0);
}

TEST(BuildHuffman, Errors) {
  EXPECT_THROW(build_huffman(std::vector<std::int64_t>{}), InputError);
  EXPECT_THROW(build_huffman(std::vector<std::int64_t>{3, 0}), InputError);
}

TEST(HuffmanProperties, KraftEqualityAndCostIdentity) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 1000; ++t) {
    const auto w = random_weights(rng, 2, 40, 1000);
    const HuffmanCode code = build_huffman(w);
    ASSERT_DOUBLE_EQ(kraft_sum(code), 1.0);
    std::int64_t weighted = 0;
    for (std::size_t i = 0; i < w.size(); ++i) weighted += w[i] * code.lengths[i];
    ASSERT_EQ(weighted, code.cost_numerator);
    ASSERT_EQ(huffman_cost(w), code.cost_numerator);
  }
}

TEST(HuffmanProperties, EntropyBound) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 1000; ++t) {
    const auto w = random_weights(rng, 1, 30, 1000);
    const HuffmanCode code = build_huffman(w);
    const double el = expected_length_bits(code);
    std::int64_t total = 0;
    for (auto x : w) total += x;
    const double h = shannon_entropy(Dist(w, total)).value;
    ASSERT_LT(el - 1.0, h - 1e-9);
    ASSERT_LE(h, el + 1e-9);
  }
}

TEST(HuffmanProperties, SiblingProperty) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 1000; ++t) {
    const auto w = random_weights(rng, 2, 20, 50);
    const HuffmanCode code = build_huffman(w);
    const auto longest = *std::max_element(code.lengths.begin(), code.lengths.end());
    std::vector<std::int64_t> deepest;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (code.lengths[i] == longest) deepest.push_back(w[i]);
    }
    ASSERT_GE(deepest.size(), 2u);
    // The two lightest symbols sit at maximal depth (up to equal weights).
    auto sorted = w;
    std::sort(sorted.begin(), sorted.end());
    std::sort(deepest.begin(), deepest.end());
    ASSERT_EQ(deepest[0], sorted[0]);
    ASSERT_EQ(deepest[1], sorted[1]);
  }
}

TEST(HuffmanProperties, OptimalAgainstKraftEnumeration) {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 300; ++t) {
    const auto w = random_weights(rng, 1, t < 250 ? 7 : 8, 20);
    ASSERT_EQ(build_huffman(w).cost_numerator, oracle::kraft_min_cost(w));
  }
}

TEST(HuffmanProperties, TieBreakDoesNotChangeCost) {
  std::mt19937_64 rng(25);
  for (int t = 0; t < 500; ++t) {
    auto w = random_weights(rng, 2, 30, 3);
    const std::int64_t cost = build_huffman(w).cost_numerator;
    ASSERT_EQ(oracle::random_tie_huffman_cost(w, rng), cost);
    std::shuffle(w.begin(), w.end(), rng);
    ASSERT_EQ(build_huffman(w).cost_numerator, cost);
  }
}
