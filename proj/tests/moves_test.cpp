// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "dmat/canonical.hpp"
#include "dmat/errors.hpp"
#include "dmat/gf2.hpp"
#include "dmat/moves.hpp"
#include "oracles.hpp"

namespace dmat {
namespace {

TEST(HandleSlide, Examples) {
  EXPECT_EQ(handle_slide(SetSystem(2, {0, 2}), 1, 2), SetSystem(2, {0, 1, 2}));
  // No feasible X+b with X avoiding a.
  EXPECT_EQ(handle_slide(SetSystem(2, {0, 1}), 1, 2), SetSystem(2, {0, 1}));
  EXPECT_THROW(handle_slide(SetSystem(2, {0}), 1, 1), PreconditionError);
  EXPECT_THROW(handle_slide(SetSystem(2, {0}), 1, 3), RangeError);
}

TEST(ExchangeEnds, Examples) {
  EXPECT_EQ(exchange_ends(SetSystem(2, {0}), 1, 2), SetSystem(2, {0, 3}));
  EXPECT_EQ(exchange_ends(SetSystem(2, {1}), 1, 2), SetSystem(2, {1}));
  EXPECT_THROW(exchange_ends(SetSystem(2, {0}), 2, 2), PreconditionError);
}

TEST(Moves, InvolutionsOnRandomFamilies) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const SetSystem s = oracle::from_bits(n, rng() | 1);
    const int a = 1 + static_cast<int>(rng() % n);
    const int b = 1 + static_cast<int>((a + rng() % (n - 1)) % n);
    ASSERT_NE(a, b);
    ASSERT_EQ(handle_slide(handle_slide(s, a, b), a, b), s);
    ASSERT_EQ(exchange_ends(exchange_ends(s, a, b), a, b), s);
    ASSERT_EQ(exchange_ends(handle_slide(s, a, b), a, b), handle_slide(exchange_ends(s, a, b), a, b));
  }
}

TEST(FourTerm, BothLoopsGiveFourEqualMembers) {
  const SetSystem s(3, {0, 4});
  const FourTermQuadruple q = four_term_quadruple(s, 1, 2);
  EXPECT_EQ(q.base, s);
  EXPECT_EQ(q.slid, s);
  EXPECT_EQ(q.exchanged, SetSystem(3, {0, 3, 4, 7}));
  const FourTermReport r = analyze_four_term(s, 1, 2);
  EXPECT_TRUE(r.holds());
}

TEST(FourTerm, DefectMatchesValidityOfMembers) {
  // Either all four members are delta-matroids and the defect is defined,
  // or the library refuses. Non-binary inputs are not required to vanish.
  for (int n = 2; n <= 3; ++n) {
    for (const SetSystem& s : oracle::all_delta_matroids(n)) {
      const DeltaMatroid d = DeltaMatroid::trusted(s);
      for (int a = 1; a <= n; ++a) {
        for (int b = 1; b <= n; ++b) {
          if (a == b) continue;
          const FourTermReport r = analyze_four_term(s, a, b);
          const auto& q = r.quadruple;
          const bool valid = oracle::is_delta_matroid(q.exchanged) && oracle::is_delta_matroid(q.slid) &&
                             oracle::is_delta_matroid(q.both);
          if (valid) {
            ASSERT_EQ(four_term_defect(d, a, b), r.defect);
          } else {
            ASSERT_THROW(four_term_defect(d, a, b), NotDeltaMatroidError);
          }
        }
      }
    }
  }
}

TEST(EnumerateBinary, SmallCases) {
  ASSERT_EQ(enumerate_binary(0).size(), 1u);
  const auto one = enumerate_binary(1);
  const std::vector<SetSystem> expected{SetSystem(1, {0}), SetSystem(1, {0, 1}), SetSystem(1, {1})};
  ASSERT_EQ(std::vector<SetSystem>(one.begin(), one.end()), expected);
  EXPECT_THROW(enumerate_binary(6), CapacityError);
}

TEST(EnumerateBinary, ClassCountsMatchOracle) {
  const std::vector<std::size_t> expected{1, 3, 11, 45, 228};
  for (int n = 0; n <= 4; ++n) {
    std::set<std::vector<std::uint64_t>> keys;
    for (std::uint32_t bits : oracle::binary_families(n)) keys.insert(oracle::iso_key(oracle::from_bits(n, bits)));
    EXPECT_EQ(keys.size(), expected[n]);
    const auto classes = enumerate_binary(n);
    EXPECT_EQ(classes.size(), expected[n]);
    for (const DeltaMatroid& d : classes) {
      ASSERT_TRUE(oracle::is_delta_matroid(d));
      ASSERT_TRUE(is_binary(d).has_value());
      ASSERT_EQ(canonicalize_brute_force(d).form, d);
    }
  }
}

TEST(FourTerm, HoldsOnEveryBinaryClassUpToFourElements) {
  for (int n = 2; n <= 4; ++n) {
    const auto classes = enumerate_binary(n);
    const FourTermSummary summary = verify_four_term(classes, {.check_binary_closure = true, .threads = 2});
    EXPECT_EQ(summary.checked, classes.size());
    EXPECT_EQ(summary.pairs, classes.size() * n * (n - 1));
    EXPECT_TRUE(summary.failures.empty()) << summary.failures.front().reason;
    EXPECT_EQ(summary.distance_patterns[static_cast<int>(DistancePattern::Broken)], 0u);
    EXPECT_EQ(summary.feasibility_cases[static_cast<int>(FeasibilityCase::Other)], 0u);
  }
}

TEST(FourTerm, HoldsOnEveryLabeledBinaryFamilyUpToThreeElements) {
  for (int n = 2; n <= 3; ++n) {
    std::vector<DeltaMatroid> labeled;
    for (std::uint32_t bits : oracle::binary_families(n)) labeled.push_back(DeltaMatroid::trusted(oracle::from_bits(n, bits)));
    const FourTermSummary summary = verify_four_term(labeled, {.check_binary_closure = true});
    EXPECT_TRUE(summary.failures.empty());
  }
}

TEST(FourTerm, HoldsOnRandomBinaryFiveElementInstances) {
  std::mt19937_64 rng(59);
  std::vector<DeltaMatroid> instances;
  for (int i = 0; i < 300; ++i) instances.push_back(random_binary(5, rng));
  const FourTermSummary summary = verify_four_term(instances, {.check_binary_closure = true});
  EXPECT_EQ(summary.pairs, 300u * 20u);
  EXPECT_TRUE(summary.failures.empty());
}

TEST(FourTerm, ThreadCountDoesNotChangeSummary) {
  const auto classes = enumerate_binary(4);
  const FourTermSummary one = verify_four_term(classes, {.threads = 1});
  const FourTermSummary three = verify_four_term(classes, {.threads = 3});
  EXPECT_EQ(one.pairs, three.pairs);
  EXPECT_EQ(one.feasibility_cases, three.feasibility_cases);
  EXPECT_EQ(one.distance_patterns, three.distance_patterns);
}

}  // namespace
}  // namespace dmat
