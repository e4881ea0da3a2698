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

#include "dmat/errors.hpp"
#include "dmat/gf2.hpp"
#include "dmat/set_system.hpp"
#include "oracles.hpp"

namespace dmat {
namespace {

Gf2SymMatrix rows(std::vector<Mask> r) { return Gf2SymMatrix::from_rows(std::move(r)); }

TEST(Gf2SymMatrix, BasicAccess) {
  Gf2SymMatrix a(3);
  a.set(1, 3, true);
  EXPECT_TRUE(a.at(3, 1));
  EXPECT_FALSE(a.at(2, 2));
  EXPECT_EQ(Gf2SymMatrix::all_ones(2), rows({3, 3}));
  EXPECT_THROW(rows({2, 0}), PreconditionError);
}

TEST(Gf2SymMatrix, PrincipalSubmatrixRelabels) {
  // [[1,1,1],[1,1,0],[1,0,0]] restricted to {1,3}.
  EXPECT_EQ(rows({7, 3, 1}).principal(mask_of({1, 3})), rows({3, 1}));
}

TEST(Rank, Examples) {
  EXPECT_EQ(gf2_rank({}), 0);
  EXPECT_EQ(gf2_rank({3, 3}), 1);
  EXPECT_EQ(gf2_rank({1, 2, 3}), 2);
  EXPECT_EQ(gf2_rank({7, 3, 1}), 3);
}

TEST(Nondegenerate, Examples) {
  EXPECT_FALSE(gf2_nondegenerate(Gf2SymMatrix::all_ones(2)));
  EXPECT_TRUE(gf2_nondegenerate(rows({3, 1})));
  EXPECT_TRUE(gf2_nondegenerate(Gf2SymMatrix(0)));
}

TEST(Nondegenerate, AgreesWithLeibnizDeterminant) {
  for (int n = 0; n <= 4; ++n) {
    for (const auto& r : oracle::all_symmetric_matrices(n)) {
      const Gf2SymMatrix a = rows(r);
      for (Mask x = 0; x <= full_mask(n); ++x) {
        ASSERT_EQ(principal_nondegenerate(a, x), oracle::det_mod2(r, x));
      }
    }
  }
}

TEST(MatrixDeltaMatroid, Examples) {
  EXPECT_EQ(matrix_delta_matroid(Gf2SymMatrix::all_ones(3)), SetSystem(3, {0, 1, 2, 4}));
  EXPECT_EQ(matrix_delta_matroid(rows({2, 1})), SetSystem(2, {0, 3}));
  EXPECT_EQ(matrix_delta_matroid(Gf2SymMatrix(4)), SetSystem(4, {0}));
}

TEST(MatrixDeltaMatroid, AllOnesGivesSingletons) {
  for (int n = 1; n <= 8; ++n) {
    std::vector<Mask> expected{0};
    for (int i = 1; i <= n; ++i) expected.push_back(element_bit(i));
    EXPECT_EQ(matrix_delta_matroid(Gf2SymMatrix::all_ones(n)), SetSystem(n, expected));
  }
}

TEST(MatrixDeltaMatroid, MatchesOracleAndSatisfiesAxiom) {
  for (int n = 0; n <= 4; ++n) {
    for (const auto& r : oracle::all_symmetric_matrices(n)) {
      const DeltaMatroid d = matrix_delta_matroid(rows(r));
      ASSERT_EQ(d, oracle::matrix_family(r));
      ASSERT_TRUE(oracle::is_delta_matroid(d));
    }
  }
}

TEST(ExtendMatrix, Examples) {
  EXPECT_EQ(extend_matrix(rows({1})), rows({3, 1}));
  EXPECT_EQ(extend_matrix(Gf2SymMatrix::all_ones(2)), rows({7, 3, 1}));
  EXPECT_THROW(extend_matrix(Gf2SymMatrix(0)), PreconditionError);
}

TEST(IsBinary, AllOnesWitness) {
  for (int n = 1; n <= 6; ++n) {
    const auto w = is_binary(matrix_delta_matroid(Gf2SymMatrix::all_ones(n)));
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->twist_set, 0u);
    EXPECT_EQ(w->matrix, Gf2SymMatrix::all_ones(n));
  }
}

TEST(IsBinary, WitnessReproducesInput) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const SetSystem s = twist(matrix_delta_matroid(random_symmetric(n, rng)), static_cast<Mask>(rng() & full_mask(n)));
    const auto w = is_binary(s);
    ASSERT_TRUE(w.has_value());
    ASSERT_EQ(twist(matrix_delta_matroid(w->matrix), w->twist_set), s);
  }
}

TEST(IsBinary, MatchesOracleOnAllFamiliesUpToFourElements) {
  // Every proper family, delta-matroid or not.
  for (int n = 0; n <= 3; ++n) {
    const auto binary = oracle::binary_families(n);
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << (1u << n)); ++bits) {
      const SetSystem s = oracle::from_bits(n, bits);
      ASSERT_EQ(is_binary(s).has_value(), binary.count(static_cast<std::uint32_t>(bits)) > 0) << bits;
    }
  }
  const auto binary = oracle::binary_families(4);
  for (const SetSystem& d : oracle::all_delta_matroids(4)) {
    ASSERT_EQ(is_binary(d).has_value(), binary.count(oracle::family_bits(d)) > 0);
  }
}

TEST(IsBinary, PositiveAxiomExampleIsNotBinary) {
  const SetSystem s(3, {0, 1, 3, 6, 7});
  const auto binary = oracle::binary_families(3);
  EXPECT_EQ(is_binary(s).has_value(), binary.count(oracle::family_bits(s)) > 0);
  EXPECT_EQ(is_binary(s).has_value(), is_binary_brute_force(s).has_value());
}

TEST(IsBinary, BruteForceAgreesOnRandomFiveElementFamilies) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    SetSystem s = trial % 2 == 0
                      ? SetSystem(twist(matrix_delta_matroid(random_symmetric(5, rng)), static_cast<Mask>(rng() & 31)))
                      : oracle::from_bits(5, rng() | 1);
    ASSERT_EQ(is_binary(s).has_value(), is_binary_brute_force(s).has_value());
  }
}

TEST(IsBinary, BruteForceBound) {
  EXPECT_THROW(is_binary_brute_force(SetSystem(6, {0})), CapacityError);
}

TEST(BinaryUniverse, LabeledCountsAreFrozen) {
  const std::vector<std::size_t> expected{1, 3, 15, 135, 2295};
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(oracle::binary_families(n).size(), expected[n]);
}

}  // namespace
}  // namespace dmat
