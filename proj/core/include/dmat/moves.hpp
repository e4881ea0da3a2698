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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "dmat/polynomial.hpp"
#include "dmat/set_system.hpp"

namespace dmat {

/// Handle slide of a over b: toggles X+a for every feasible X+b with X
/// avoiding a and b. Requires a != b.
SetSystem handle_slide(const SetSystem& s, int a, int b);

/// Exchange of the handle ends a and b: toggles X+a+b for every feasible X
/// avoiding a and b. Requires a != b.
SetSystem exchange_ends(const SetSystem& s, int a, int b);

struct FourTermQuadruple {
  SetSystem base;
  SetSystem exchanged;  // exchange_ends(base)
  SetSystem slid;       // handle_slide(base)
  SetSystem both;       // exchange_ends(slid) == handle_slide(exchanged)
};

/// Throws InternalError if the two orders of composing the moves disagree.
FourTermQuadruple four_term_quadruple(const SetSystem& s, int a, int b);

/// Which quadruple members contain a given subset, in the order
/// (base, exchanged, slid, both).
enum class FeasibilityCase : std::uint8_t {
  AllFeasible,   // 1111
  ExchangePair,  // 1100 or 0011
  SlidePair,     // 1010 or 0101
  NoneFeasible,  // 0000
  Other,
};

/// How the four distances to a subset pair up.
enum class DistancePattern : std::uint8_t {
  AllEqual,
  ExchangePairs,  // d(base) = d(exchanged), d(slid) = d(both)
  SlidePairs,     // d(base) = d(slid), d(exchanged) = d(both)
  Broken,         // x^d terms do not cancel for this subset
};

struct FourTermReport {
  FourTermQuadruple quadruple;
  std::array<bool, 4> member_valid{};
  IntPolynomial defect;
  std::array<std::uint64_t, 5> feasibility_cases{};
  std::array<std::uint64_t, 4> distance_patterns{};
  std::optional<Mask> first_broken_subset;

  bool holds() const {
    return defect.is_zero() && distance_patterns[static_cast<int>(DistancePattern::Broken)] == 0;
  }
};

/// Computes the quadruple, the defect q(D) - q(D'_ab) - q(~D_ab) + q(~D'_ab)
/// and the per-subset diagnostics. Works on any set system and reports
/// whether each member satisfies the exchange axiom.
FourTermReport analyze_four_term(const SetSystem& s, int a, int b);

/// The defect polynomial. Throws NotDeltaMatroidError if a quadruple member
/// is not a delta-matroid.
IntPolynomial four_term_defect(const DeltaMatroid& d, int a, int b);

inline constexpr int kEnumerateBound = 5;

/// Every binary delta-matroid on {1..n} up to isomorphism, as sorted
/// canonical forms: all M_A, all twists, deduplicated.
std::vector<DeltaMatroid> enumerate_binary(int n);

/// M_A * X for uniform random symmetric A and uniform random X.
DeltaMatroid random_binary(int n, std::mt19937_64& rng);

struct FourTermFailure {
  SetSystem system;
  int a;
  int b;
  std::string reason;
};

struct FourTermSummary {
  std::uint64_t checked = 0;
  std::uint64_t pairs = 0;
  std::array<std::uint64_t, 5> feasibility_cases{};
  std::array<std::uint64_t, 4> distance_patterns{};
  std::vector<FourTermFailure> failures;

  void merge(const FourTermSummary& other);
};

struct FourTermOptions {
  // Also require every quadruple member to be binary.
  bool check_binary_closure = false;
  unsigned threads = 1;
};

/// Runs analyze_four_term on every instance and every ordered pair a != b.
/// Instances are split into contiguous chunks, one per thread; results are
/// merged in chunk order.
FourTermSummary verify_four_term(std::span<const DeltaMatroid> instances,
                                 const FourTermOptions& options = {});

}  // namespace dmat
