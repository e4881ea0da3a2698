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

#include <vector>

#include "dmat/set_system.hpp"

namespace dmat {

/// Largest ground set for which canonical forms are computed.
inline constexpr int kCanonicalBound = 8;

/// A canonical representative together with the relabeling that produces it:
/// relabel(input, permutation) == form.
struct Canonical {
  SetSystem form;
  std::vector<int> permutation;
};

/// The relabeling of `s` whose sorted feasible-mask sequence is
/// lexicographically smallest. Two set systems are isomorphic iff their forms
/// are equal. Throws CapacityError above kCanonicalBound.
///
/// Labels are fixed one position at a time; at each position only the
/// choices that keep the already-determined prefix of the encoding minimal
/// survive, and choices producing the same partially relabeled family are
/// merged, since they admit the same completions.
Canonical canonicalize(const SetSystem& s);

/// Same result as canonicalize, by trying all n! relabelings.
Canonical canonicalize_brute_force(const SetSystem& s);

/// Memoized canonical form, safe to call from several threads.
SetSystem canonical_form(const SetSystem& s);
DeltaMatroid canonical_form(const DeltaMatroid& d);

}  // namespace dmat
