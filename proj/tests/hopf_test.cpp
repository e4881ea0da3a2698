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

#include "dmat/canonical.hpp"
#include "dmat/errors.hpp"
#include "dmat/gf2.hpp"
#include "dmat/hopf.hpp"
#include "dmat/moves.hpp"
#include "dmat/partitions.hpp"
#include "oracles.hpp"

namespace dmat {
namespace {

using P = IntPolynomial;

std::vector<Coeff> coeffs(const P& p) { return {p.coeffs().begin(), p.coeffs().end()}; }

// Componentwise product of two tensors: (a⊗b)(c⊗d) = ac⊗bd.
TensorCombination tensor_product(const TensorCombination& x, const TensorCombination& y) {
  TensorCombination out;
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      out.add(DeltaMatroid::trusted(product(kx.first, ky.first)), DeltaMatroid::trusted(product(kx.second, ky.second)),
              cx * cy);
    }
  }
  return out;
}

// Small universe: every delta-matroid on up to 3 elements and the binary classes on 4.
std::vector<DeltaMatroid> small_universe() {
  std::vector<DeltaMatroid> out;
  for (int n = 0; n <= 3; ++n) {
    for (const SetSystem& s : oracle::all_delta_matroids(n)) out.push_back(DeltaMatroid::trusted(s));
  }
  for (const DeltaMatroid& d : enumerate_binary(4)) out.push_back(d);
  return out;
}

const DeltaMatroid kD1 = DeltaMatroid::trusted(SetSystem(1, {0, 1}));

TEST(DmCombination, MergesIsomorphicTermsAndDropsZeros) {
  DmCombination c(2);
  c.add(DeltaMatroid(SetSystem(2, {0, 1})), 2);
  c.add(DeltaMatroid(SetSystem(2, {0, 2})), -2);
  EXPECT_TRUE(c.is_zero());
  c.add(DeltaMatroid(SetSystem(2, {0, 1})), 3);
  EXPECT_EQ(c.coefficient(DeltaMatroid(SetSystem(2, {0, 2}))), 3);
  EXPECT_THROW(c.add(kD1, 1), PreconditionError);
  EXPECT_THROW(c += DmCombination(3), PreconditionError);
}

TEST(DmCombination, ProductIsBilinear) {
  const DmCombination a = DmCombination::of(kD1, 2) + DmCombination::of(DeltaMatroid(SetSystem(1, {0})), 1);
  const DmCombination prod = a * a;
  EXPECT_EQ(prod.grade(), 2);
  EXPECT_EQ(prod.coefficient(DeltaMatroid(SetSystem(2, {0, 1, 2, 3}))), 4);
  EXPECT_EQ(prod.coefficient(DeltaMatroid(SetSystem(2, {0, 1}))), 4);
  EXPECT_EQ(prod.coefficient(DeltaMatroid(SetSystem(2, {0}))), 1);
}

TEST(Coproduct, SingleElementAndUnit) {
  TensorCombination expected;
  expected.add(DeltaMatroid::unit(), kD1, 1);
  expected.add(kD1, DeltaMatroid::unit(), 1);
  EXPECT_EQ(coproduct(kD1), expected);
  EXPECT_TRUE(is_primitive(DmCombination::of(kD1)));
  TensorCombination unit;
  unit.add(DeltaMatroid::unit(), DeltaMatroid::unit(), 1);
  EXPECT_EQ(coproduct(DeltaMatroid::unit()), unit);
}

TEST(Coproduct, IsCocommutative) {
  for (const DeltaMatroid& d : small_universe()) {
    const TensorCombination mu = coproduct(d);
    ASSERT_EQ(mu.swapped(), mu);
  }
}

TEST(Coproduct, CompatibleWithProduct) {
  std::vector<DeltaMatroid> factors;
  for (int n = 0; n <= 2; ++n) {
    for (const SetSystem& s : oracle::all_delta_matroids(n)) factors.push_back(DeltaMatroid::trusted(s));
  }
  for (const DeltaMatroid& a : factors) {
    for (const DeltaMatroid& b : factors) {
      if (a.size() + b.size() > 4) continue;
      ASSERT_EQ(coproduct(product(a, b)), tensor_product(coproduct(a), coproduct(b)));
    }
  }
}

TEST(IsPrimitive, AllOnesTwoIsNot) {
  const DeltaMatroid d2 = build_family(Family::AllOnes, 2);
  EXPECT_FALSE(is_primitive(DmCombination::of(d2)));
  EXPECT_EQ(primitive_coproduct(DmCombination::of(d2)).terms().size(), 2u);
  TensorCombination extra = coproduct(d2);
  extra -= primitive_coproduct(DmCombination::of(d2));
  ASSERT_EQ(extra.terms().size(), 1u);
  EXPECT_EQ(extra.terms().begin()->first, (TensorCombination::Key{kD1, kD1}));
  EXPECT_EQ(extra.terms().begin()->second, 2);
}

TEST(ProjectPrimitive, Examples) {
  EXPECT_EQ(project_primitive(kD1), DmCombination::of(kD1));
  const DeltaMatroid d2 = build_family(Family::AllOnes, 2);
  const DmCombination expected = DmCombination::of(d2) - DmCombination::of(kD1) * DmCombination::of(kD1);
  EXPECT_EQ(project_primitive(d2), expected);
  EXPECT_EQ(q_of_combination(project_primitive(d2)), P({-1, 1}));
  EXPECT_THROW(project_primitive(DeltaMatroid::unit()), CapacityError);
  EXPECT_THROW(project_primitive(build_family(Family::AllOnes, 11)), CapacityError);
}

TEST(ProjectPrimitive, LandsInPrimitivesAndIsIdempotent) {
  for (const DeltaMatroid& d : small_universe()) {
    if (d.size() == 0) continue;
    const DmCombination p = project_primitive(d);
    ASSERT_TRUE(is_primitive(p));
    ASSERT_EQ(project_primitive(p), p);
  }
}

TEST(ProjectPrimitive, InterlaceMatchesUncanonicalizedExpansion) {
  for (const DeltaMatroid& d : small_universe()) {
    if (d.size() == 0) continue;
    ASSERT_EQ(coeffs(q_of_combination(project_primitive(d))), oracle::projection_interlace(d));
  }
  std::mt19937_64 rng(61);
  for (int n = 5; n <= 6; ++n) {
    for (int trial = 0; trial < 15; ++trial) {
      const DeltaMatroid d = random_binary(n, rng);
      ASSERT_EQ(coeffs(q_of_combination(project_primitive(d))), oracle::projection_interlace(d));
    }
  }
}

TEST(BuildFamily, Examples) {
  EXPECT_EQ(build_family(Family::AllOnes, 3), SetSystem(3, {0, 1, 2, 4}));
  EXPECT_EQ(build_family(Family::Tower, 2, 1), SetSystem(3, {0, 1, 2, 5, 7}));
  EXPECT_EQ(build_family(Family::Complete, 3), SetSystem(3, {0, 3, 5, 6}));
  EXPECT_EQ(build_family(Family::Tower, 3, 0), build_family(Family::AllOnes, 3));
  EXPECT_THROW(build_family(Family::AllOnes, 0), RangeError);
  EXPECT_THROW(build_family(Family::Tower, 1, 1), RangeError);
}

struct FrozenRow {
  Family kind;
  int n;
  int k;
  std::vector<Coeff> q;
};

// Values computed once by the uncanonicalized oracle expansion.
const std::vector<FrozenRow> kFrozen = {
    {Family::AllOnes, 1, 0, {2}},
    {Family::AllOnes, 2, 0, {-1, 1}},
    {Family::Complete, 2, 0, {1, 0, -1}},
    {Family::AllOnes, 3, 0, {2, -3, 1}},
    {Family::Tower, 2, 1, {0, 1, -1}},
    {Family::Complete, 3, 0, {0, -2, 0, 2}},
    {Family::AllOnes, 4, 0, {-6, 12, -7, 1}},
    {Family::Tower, 3, 1, {0, -2, 3, -1}},
    {Family::Tower, 2, 2, {0, 0, -1, 1}},
    {Family::Complete, 4, 0, {-2, 0, 8, 0, -6}},
    {Family::AllOnes, 5, 0, {24, -60, 50, -15, 1}},
    {Family::Tower, 4, 1, {0, 6, -12, 7, -1}},
    {Family::Tower, 3, 2, {0, 0, 2, -3, 1}},
    {Family::Tower, 2, 3, {0, 0, 0, 1, -1}},
    {Family::Complete, 5, 0, {0, 16, 0, -40, 0, 24}},
    {Family::AllOnes, 6, 0, {-120, 360, -390, 180, -31, 1}},
    {Family::Tower, 5, 1, {0, -24, 60, -50, 15, -1}},
    {Family::Tower, 4, 2, {0, 0, -6, 12, -7, 1}},
    {Family::Tower, 3, 3, {0, 0, 0, -2, 3, -1}},
    {Family::Tower, 2, 4, {0, 0, 0, 0, -1, 1}},
    {Family::Complete, 6, 0, {16, 0, -136, 0, 240, 0, -120}},
};

TEST(ProjectPrimitive, FrozenFamilyValues) {
  for (const FrozenRow& row : kFrozen) {
    const DeltaMatroid d = build_family(row.kind, row.n, row.k);
    EXPECT_EQ(coeffs(q_of_combination(project_primitive(d))), row.q) << row.n << "," << row.k;
  }
}

TEST(ProjectPrimitive, SingleExtensionOfOneElementIsTheBoundaryCase) {
  const DeltaMatroid d = build_family(Family::AllOnes, 1);
  const DeltaMatroid extended = matrix_delta_matroid(extend_matrix(family_matrix(Family::AllOnes, 1)));
  const P lhs = q_of_combination(project_primitive(extended));
  const P rhs = -(P::x() * q_of_combination(project_primitive(d)));
  EXPECT_EQ(lhs, P({1, -1}));
  EXPECT_EQ(rhs, P({0, -2}));
  EXPECT_NE(lhs, rhs);
}

TEST(ProjectPrimitive, ExtensionMultipliesByMinusXOnRandomMatrices) {
  std::mt19937_64 rng(67);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const Gf2SymMatrix a = random_symmetric(n, rng);
      const P base = q_of_combination(project_primitive(matrix_delta_matroid(a)));
      const P ext = q_of_combination(project_primitive(matrix_delta_matroid(extend_matrix(a))));
      ASSERT_EQ(ext, -(P::x() * base));
    }
  }
}

// A binary delta-matroid with the empty set feasible has an untwisted
// witness, so its extension is defined through that matrix.
TEST(ProjectPrimitive, ExtensionOnBinaryWithEmptySetFeasible) {
  std::mt19937_64 rng(83);
  int tried = 0;
  while (tried < 40) {
    const DeltaMatroid d = random_binary(2 + tried % 4, rng);
    if (!d.contains(0)) continue;
    ++tried;
    const auto w = is_binary(d);
    ASSERT_TRUE(w.has_value());
    ASSERT_EQ(w->twist_set, 0u);
    ASSERT_EQ(q_of_combination(project_primitive(matrix_delta_matroid(extend_matrix(w->matrix)))),
              -(P::x() * q_of_combination(project_primitive(d))));
  }
}

TEST(ElementOneTelescope, VanishesOnFamilies) {
  for (int n = 2; n <= 5; ++n) {
    EXPECT_TRUE(element_one_telescope(build_family(Family::AllOnes, n)).is_zero());
    EXPECT_TRUE(element_one_telescope(build_family(Family::Complete, n)).is_zero());
    for (int k = 1; k + 2 <= n; ++k) EXPECT_TRUE(element_one_telescope(build_family(Family::Tower, n - k, k)).is_zero());
  }
}

TEST(ElementOneTelescope, VanishesOnRandomMatrices) {
  std::mt19937_64 rng(71);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      ASSERT_TRUE(element_one_telescope(matrix_delta_matroid(random_symmetric(n, rng))).is_zero());
    }
  }
}

TEST(RationalRank, Examples) {
  EXPECT_EQ(rational_rank({}), 0);
  EXPECT_EQ(rational_rank({{1, 2}, {2, 4}}), 1);
  EXPECT_EQ(rational_rank({{2, 0}, {0, 3}}), 2);
  // Singular over the rationals but not mod 2.
  EXPECT_EQ(rational_rank({{1, 1, 0}, {0, 1, 1}, {1, 2, 1}}), 2);
}

TEST(PrimitiveValueMatrix, SmallCases) {
  const PrimitiveValueMatrix two = primitive_value_matrix(2);
  ASSERT_EQ(two.polynomials.size(), 2u);
  EXPECT_EQ(two.polynomials[0], P({-1, 1}));
  EXPECT_EQ(two.polynomials[1], P({1, 0, -1}));
  EXPECT_EQ(two.rank, 2);
  const PrimitiveValueMatrix three = primitive_value_matrix(3);
  ASSERT_EQ(three.polynomials.size(), 3u);
  EXPECT_EQ(three.polynomials[0], P({2, -3, 1}));
  EXPECT_EQ(three.polynomials[1], P({0, 1, -1}));
  EXPECT_EQ(three.polynomials[2], P({0, -2, 0, 2}));
  EXPECT_EQ(three.rank, 3);
  EXPECT_EQ(three.coefficients[2], (std::vector<Coeff>{0, -2, 0, 2}));
  EXPECT_EQ(three.coefficients[0].size(), 4u);
  EXPECT_THROW(primitive_value_matrix(1), CapacityError);
}

TEST(PrimitiveValueMatrix, FullRankThroughSix) {
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(primitive_value_matrix(n).rank, n);
}

TEST(BellNumbers, ProjectionTermCount) {
  EXPECT_EQ(bell_number(0), 1u);
  EXPECT_EQ(bell_number(7), 877u);
  EXPECT_EQ(bell_number(10), 115975u);
}

}  // namespace
}  // namespace dmat
