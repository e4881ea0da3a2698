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

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace dmat {

/// A subset of the ground set {1..n}: bit (i-1) is set iff element i belongs.
using Mask = std::uint32_t;

/// Largest ground set accepted by the general operations.
inline constexpr int kMaxGroundSet = 16;

constexpr Mask element_bit(int e) { return Mask{1} << (e - 1); }

constexpr Mask full_mask(int n) {
  return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1;
}

constexpr bool has_element(Mask m, int e) { return (m & element_bit(e)) != 0; }

/// Builds a mask from 1-based element labels.
Mask mask_of(std::initializer_list<int> elements);

/// A proper set system on {1..n}. The feasible family is kept sorted and
/// duplicate free; it is never empty.
class SetSystem {
 public:
  /// Sorts and deduplicates `feasible`. Throws ImproperSetSystemError on an
  /// empty family, RangeError on a mask outside {1..n}, CapacityError if
  /// n exceeds kMaxGroundSet.
  SetSystem(int n, std::vector<Mask> feasible);

  /// The empty ground set with the single feasible set {}.
  static SetSystem unit();

  int size() const { return n_; }
  Mask ground() const { return full_mask(n_); }
  std::span<const Mask> feasible() const { return feasible_; }
  std::size_t family_size() const { return feasible_.size(); }
  bool contains(Mask x) const;

  friend bool operator==(const SetSystem&, const SetSystem&) = default;
  friend std::strong_ordering operator<=>(const SetSystem& a,
                                          const SetSystem& b);

 protected:
  struct Normalized {};
  // Caller guarantees `feasible` is sorted, unique, nonempty and in range.
  SetSystem(int n, std::vector<Mask> feasible, Normalized)
      : n_(n), feasible_(std::move(feasible)) {}

 private:
  int n_;
  std::vector<Mask> feasible_;
};

/// Witness that the symmetric exchange axiom fails: X and Y are feasible,
/// `element` lies in X^Y, and no y in X^Y makes {element, y}^X feasible.
struct ExchangeViolation {
  Mask x_set;
  Mask y_set;
  int element;

  friend bool operator==(const ExchangeViolation&,
                         const ExchangeViolation&) = default;
};

struct ValidationResult {
  std::optional<ExchangeViolation> counterexample;

  bool valid() const { return !counterexample.has_value(); }
};

/// Checks the symmetric exchange axiom (y = x is allowed).
ValidationResult validate(const SetSystem& s);

/// A set system that has passed `validate`.
class DeltaMatroid : public SetSystem {
 public:
  /// Throws NotDeltaMatroidError when the exchange axiom fails.
  explicit DeltaMatroid(SetSystem s);

  static DeltaMatroid unit();

  /// For operations known to preserve the axiom. Skips the check.
  static DeltaMatroid trusted(SetSystem s) { return DeltaMatroid(std::move(s), 0); }

 private:
  DeltaMatroid(SetSystem s, int) : SetSystem(std::move(s)) {}
};

enum class ElementClass { Loop, Coloop, Ordinary };

enum class Reduction { Delete, Contract };

SetSystem twist(const SetSystem& s, Mask x);
DeltaMatroid twist(const DeltaMatroid& d, Mask x);

ElementClass classify(const SetSystem& s, int e);

/// Deletes or contracts e, with the loop/coloop fallbacks, and relabels the
/// remaining elements to 1..n-1 in order.
SetSystem reduce(const SetSystem& s, int e, Reduction mode);
DeltaMatroid reduce(const DeltaMatroid& d, int e, Reduction mode);

/// Restriction to `keep`: every element outside `keep` is deleted (falling
/// back to contraction on coloops). Result is relabeled to 1..|keep|.
SetSystem restriction(const SetSystem& s, Mask keep);
DeltaMatroid restriction(const DeltaMatroid& d, Mask keep);

/// Disjoint union: the labels of `b` are shifted by a.size().
SetSystem product(const SetSystem& a, const SetSystem& b);
DeltaMatroid product(const DeltaMatroid& a, const DeltaMatroid& b);

/// Minimum of |F ^ x| over feasible F.
int distance(const SetSystem& s, Mask x);

/// distance(s, x) for every x in 0 .. 2^n - 1, via breadth-first search on
/// the cube from all feasible sets at once.
std::vector<std::uint8_t> distance_table(const SetSystem& s);

/// Applies a relabeling: element i becomes perm[i-1] (1-based labels).
SetSystem relabel(const SetSystem& s, std::span<const int> perm);

}  // namespace dmat
