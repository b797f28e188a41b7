#include <gtest/gtest.h>

#include <map>
#include <random>
#include <string>

#include "oracles.hpp"
#include "symlim/classify.hpp"

using namespace symlim;

namespace {

const BaseSequence kTwos = BaseSequence::periodic({2});
const BaseSequence kFours = BaseSequence::periodic({4});
const BaseSequence kTwoThree = BaseSequence::periodic({2, 3});
const BaseSequence kSixes = BaseSequence::periodic({6});

std::map<std::uint64_t, std::string> to_exponents(const SupernaturalNumber& s) {
  std::map<std::uint64_t, std::string> out;
  for (const auto& [p, e] : s.exponents) out[p] = e.str();
  return out;
}

std::vector<BaseSequence> random_rules() {
  std::mt19937_64 rng(97);
  std::vector<BaseSequence> out;
  for (int i = 0; i < 20; ++i) out.push_back(oracle::random_sequence(rng));
  // Pairs that are isomorphic without being equal.
  out.push_back(BaseSequence({3}, {4}));
  out.push_back(BaseSequence({6}, {2}));
  out.push_back(BaseSequence({12, 5}, {3, 2}));
  out.push_back(BaseSequence({10}, {6}));
  return out;
}

}  // namespace

TEST(Supernatural, Examples) {
  EXPECT_EQ(to_exponents(supernatural(kTwos)), (std::map<std::uint64_t, std::string>{{2, "inf"}}));
  EXPECT_EQ(to_exponents(supernatural(BaseSequence({12}, {5}))),
            (std::map<std::uint64_t, std::string>{{2, "2"}, {3, "1"}, {5, "inf"}}));
  EXPECT_EQ(to_exponents(supernatural(kTwoThree)),
            (std::map<std::uint64_t, std::string>{{2, "inf"}, {3, "inf"}}));
}

TEST(Isomorphic, Examples) {
  EXPECT_TRUE(isomorphic(kTwos, kFours));
  EXPECT_TRUE(isomorphic(kTwoThree, kSixes));
  EXPECT_FALSE(isomorphic(kTwos, kTwoThree));
  EXPECT_TRUE(isomorphic(kTwoThree, kTwoThree));
}

TEST(ConditionB, Examples) {
  EXPECT_TRUE(condition_b_check(kTwos, kFours, 5));
  EXPECT_FALSE(condition_b_check(kTwos, BaseSequence::periodic({3}), 1));
  EXPECT_TRUE(condition_b_check(kTwoThree, kSixes, 4));
}

TEST(ConditionB, PartnerBoundIsSufficient) {
  // Brute-force partner search far past the computed bound.
  const auto rules = random_rules();
  for (const auto& a : rules)
    for (const auto& b : rules)
      for (std::size_t i = 1; i <= 4; ++i) {
        const BigInt ni = level_order(a, i);
        const std::size_t bound = std::max<std::size_t>(1, partner_bound(a, b, i));
        bool found_far = false;
        for (std::size_t j = 1; j <= bound + 12 && !found_far; ++j) found_far = level_order(b, j) % ni == 0;
        EXPECT_EQ(level_order(b, bound) % ni == 0, found_far);
      }
}

TEST(DivMember, Examples) {
  EXPECT_TRUE(div_member(8, kTwos));
  EXPECT_FALSE(div_member(6, kTwos));
  EXPECT_TRUE(div_member(12, BaseSequence({12}, {5})));
  EXPECT_FALSE(div_member(8, BaseSequence({12}, {5})));
  EXPECT_TRUE(div_member(1, kTwos));
  EXPECT_THROW(div_member(0, kTwos), InvalidArgument);
}

TEST(DivMember, MatchesBruteForce) {
  for (const auto& seq : random_rules())
    for (std::uint64_t n = 1; n <= 300; ++n)
      EXPECT_EQ(div_member(n, seq), oracle::divides_some_level(n, seq, 40)) << n;
}

TEST(Isomorphic, EquivalenceRelation) {
  const auto rules = random_rules();
  for (const auto& a : rules) {
    EXPECT_TRUE(isomorphic(a, a));
    for (const auto& b : rules) {
      EXPECT_EQ(isomorphic(a, b), isomorphic(b, a));
      for (const auto& c : rules)
        if (isomorphic(a, b) && isomorphic(b, c)) EXPECT_TRUE(isomorphic(a, c));
    }
  }
}

TEST(Isomorphic, EquivalentConditions) {
  const auto rules = random_rules();
  std::size_t positive = 0, negative = 0;
  for (const auto& a : rules)
    for (const auto& b : rules) {
      const bool iso = isomorphic(a, b);
      (iso ? positive : negative) += 1;
      EXPECT_EQ(condition_b_check(a, b, sufficient_k_max(a, b)), iso);
      bool same_div = true;
      for (std::uint64_t n = 1; n <= 1000 && same_div; ++n) same_div = div_member(n, a) == div_member(n, b);
      EXPECT_EQ(same_div, iso);
    }
  EXPECT_GT(positive, rules.size());
  EXPECT_GT(negative, 0u);
}
